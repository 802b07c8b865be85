//! The monomial character of `C_l^n ⋊ H`, exhaustive verification that its
//! induced character determines the subgroup up to conjugacy, and the
//! explicit monomial matrices behind that rigidity.

use std::fmt;
use std::sync::Arc;

use super::classfn::ClassFunction;
use super::linear::{cyclic_character, linear_characters};
use super::CharError;
use crate::exactalg::{CycloNum, Rational};
use crate::groups::lowindex::MAX_INDEX;
use crate::groups::{
    are_conjugate, catalog, low_index_subgroups, GroupError, PermGroup, Sdp, SdpElement, Subgroup,
};

/// `χ(c, h) = ζ_l^{c_0}` on `H~ = C_l^n ⋊ H`, where coordinate 0 is the
/// coset `H` itself. Checked to be a homomorphism.
pub fn monomial_char(sdp: &Sdp) -> Result<ClassFunction, CharError> {
    let ht = sdp.h_tilde.group();
    let l = sdp.l as u64;
    let exps: Vec<u32> = ht
        .elements()
        .iter()
        .map(|p| sdp.decompose(p).c[0])
        .collect();
    let gens: Vec<usize> = ht.gens().iter().map(|p| ht.index_of(p).unwrap()).collect();
    for &s in &gens {
        for x in 0..ht.order() {
            if exps[ht.mul(s, x)] != (exps[s] + exps[x]) % sdp.l {
                return Err(CharError::InvariantViolation(
                    "first-coordinate map is not a homomorphism".into(),
                ));
            }
        }
    }
    Ok(ClassFunction::from_fn(ht, |i| {
        CycloNum::root_of_unity(l, exps[i] as i64)
    }))
}

/// `Ind χ` on `G~`.
fn induced_monomial(sdp: &Sdp) -> Result<ClassFunction, CharError> {
    monomial_char(sdp)?.induce(&sdp.h_tilde)
}

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub order: usize,
    pub index: usize,
    pub subgroups_tested: usize,
    pub pairs_tested: usize,
    /// Pairs `(H~', χ')` with `Ind χ' = Ind χ`.
    pub matches: usize,
    /// Matches whose subgroup is not conjugate to `H~`.
    pub violations: Vec<String>,
}

impl fmt::Display for RigidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order={} index={}", self.order, self.index)?;
        writeln!(
            f,
            "subgroups={} pairs={} matches={}",
            self.subgroups_tested, self.pairs_tested, self.matches
        )?;
        write!(f, "violations={}", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\nviolation {v}")?;
        }
        Ok(())
    }
}

/// For every class of index-`n` subgroups `H~'` of `G~` and every linear
/// character `χ'` of `H~'`, check that `Ind χ' = Ind χ` forces `H~'` to be
/// conjugate to `H~`.
pub fn monomial_rigidity_verify(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    l: u64,
    bound: usize,
) -> Result<RigidityReport, CharError> {
    let sdp = Sdp::with_bound(g, h, l, bound)?;
    let psi = induced_monomial(&sdp)?;
    let big = &sdp.big;
    let n = sdp.n;
    if n > MAX_INDEX {
        return Err(GroupError::IndexTooLarge(n).into());
    }
    let subs = low_index_subgroups(big, n)?;
    let mut report = RigidityReport {
        order: big.order(),
        index: n,
        subgroups_tested: subs.len(),
        pairs_tested: 0,
        matches: 0,
        violations: Vec::new(),
    };
    for sub in &subs {
        let mut conjugate = None;
        for chi in linear_characters(sub.group())? {
            report.pairs_tested += 1;
            if chi.induce(sub)? != psi {
                continue;
            }
            report.matches += 1;
            if conjugate.is_none() {
                conjugate = Some(are_conjugate(big, sub, &sdp.h_tilde)?.is_some());
            }
            if conjugate == Some(false) {
                report
                    .violations
                    .push(format!("{:?} with {}", sub, chi.render()));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct DiagonalReport {
    pub n: usize,
    pub l: u64,
    /// `ψ(α)` on the coset basis, for `α = (ζ, 1, ..., 1; e)`.
    pub matrix: Vec<Vec<CycloNum>>,
    pub is_diagonal: bool,
    /// The diagonal is `(ζ, 1, ..., 1)`.
    pub diagonal_ok: bool,
    pub trace: CycloNum,
    /// `trace = n - 1 + ζ`.
    pub trace_ok: bool,
    /// No multiset of `n - 2` `l`-th roots of unity sums to the trace;
    /// `None` when the enumeration was skipped for size.
    pub no_short_sum: Option<bool>,
    pub inequality_ok: bool,
    /// Every matrix is monomial and its trace is `Ind χ` at that element.
    pub traces_match: bool,
}

impl fmt::Display for DiagonalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} l={}", self.n, self.l)?;
        for row in &self.matrix {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        writeln!(
            f,
            "diagonal={} diagonal_entries={} trace={} trace_ok={}",
            self.is_diagonal, self.diagonal_ok, self.trace, self.trace_ok
        )?;
        let short = match self.no_short_sum {
            Some(b) => b.to_string(),
            None => "skipped".into(),
        };
        write!(
            f,
            "no_short_sum={} inequality={} traces_match={}",
            short, self.inequality_ok, self.traces_match
        )
    }
}

impl DiagonalReport {
    pub fn all_ok(&self) -> bool {
        self.is_diagonal
            && self.diagonal_ok
            && self.trace_ok
            && self.no_short_sum != Some(false)
            && self.inequality_ok
            && self.traces_match
    }
}

const MULTISET_LIMIT: u128 = 200_000;

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Whether some multiset of `k` `l`-th roots of unity sums to `target`.
fn is_sum_of_roots(target: &CycloNum, k: usize, l: u64) -> Option<bool> {
    if binomial(l + k as u64 - 1, k as u64) > MULTISET_LIMIT {
        return None;
    }
    let roots: Vec<CycloNum> = (0..l)
        .map(|j| CycloNum::root_of_unity(l, j as i64))
        .collect();
    fn go(
        roots: &[CycloNum],
        start: usize,
        left: usize,
        acc: &CycloNum,
        target: &CycloNum,
    ) -> bool {
        if left == 0 {
            return acc == target;
        }
        (start..roots.len()).any(|j| go(roots, j, left - 1, &(acc + &roots[j]), target))
    }
    Some(go(&roots, 0, k, &CycloNum::zero(), target))
}

/// For every `ζ ≠ 1` with `ζ^l = 1`: `|n-1+ζ|^2 - (n-2)^2 = (n-1)|1+ζ|^2`
/// exactly and `1 + ζ ≠ 0`, so `|n-1+ζ| > n-2`, which bounds any sum of
/// `n-2` roots of unity.
pub fn trace_inequality(n: usize, l: u64) -> bool {
    if n < 2 {
        return true;
    }
    let n1 = Rational::from_integer(n as i128 - 1);
    let n2 = Rational::from_integer(n as i128 - 2);
    (1..l).all(|k| {
        let z = CycloNum::root_of_unity(l, k as i64);
        let lhs = &CycloNum::from_rational(n1) + &z;
        let one_plus = &CycloNum::one() + &z;
        let gap = &lhs.abs2() - &CycloNum::from_rational(n2 * n2);
        gap == one_plus.abs2().scale(n1) && !one_plus.is_zero()
    })
}

/// Build the monomial matrices `ψ(x)_{ij} = χ̇(γ_i^-1 x γ_j)` of `Ind χ`
/// on the coset basis `γ_i = (0; g_i)` and inspect `ψ(α)`.
pub fn diagonal_evidence(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    l: u64,
    bound: usize,
) -> Result<DiagonalReport, CharError> {
    let sdp = Sdp::with_bound(g, h, l, bound)?;
    let big = &sdp.big;
    let n = sdp.n;
    let chi = monomial_char(&sdp)?;
    let psi = chi.induce(&sdp.h_tilde)?;
    let gammas: Vec<usize> = sdp
        .cosets
        .reps
        .iter()
        .map(|&r| big.index_of(&sdp.embed(r)).unwrap())
        .collect();
    let gamma_inv: Vec<usize> = gammas.iter().map(|&x| big.inv(x)).collect();
    let chi_dot = |x: usize| -> Option<CycloNum> {
        sdp.h_tilde
            .contains(x)
            .then(|| CycloNum::root_of_unity(l, sdp.element(x).c[0] as i64))
    };
    let matrix_of = |x: usize| -> Vec<Vec<Option<CycloNum>>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| chi_dot(big.mul(gamma_inv[i], big.mul(x, gammas[j]))))
                    .collect()
            })
            .collect()
    };

    let mut traces_match = true;
    for x in 0..big.order() {
        let m = matrix_of(x);
        let monomial = m.iter().all(|row| row.iter().flatten().count() == 1)
            && (0..n).all(|j| m.iter().filter(|row| row[j].is_some()).count() == 1);
        let trace = (0..n)
            .filter_map(|i| m[i][i].clone())
            .fold(CycloNum::zero(), |a, b| &a + &b);
        traces_match &= monomial && trace == *psi.at(x);
    }

    let mut c = vec![0u32; n];
    c[0] = 1;
    let alpha = sdp.index_of(&SdpElement { c, g: 0 });
    let zeta = CycloNum::root_of_unity(l, 1);
    let m = matrix_of(alpha);
    let matrix: Vec<Vec<CycloNum>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.clone().unwrap_or_else(CycloNum::zero))
                .collect()
        })
        .collect();
    let is_diagonal = (0..n).all(|i| (0..n).all(|j| i == j || matrix[i][j].is_zero()));
    let diagonal_ok = (0..n).all(|i| {
        let want = if i == 0 {
            zeta.clone()
        } else {
            CycloNum::one()
        };
        matrix[i][i] == want
    });
    let trace = (0..n).fold(CycloNum::zero(), |a, i| &a + &matrix[i][i]);
    let expected = &CycloNum::from_int(n as i64 - 1) + &zeta;
    let trace_ok = trace == expected;
    let no_short_sum = if n >= 2 {
        is_sum_of_roots(&trace, n - 2, l).map(|found| !found)
    } else {
        Some(true)
    };
    Ok(DiagonalReport {
        n,
        l,
        matrix,
        is_diagonal,
        diagonal_ok,
        trace,
        trace_ok,
        no_short_sum,
        inequality_ok: trace_inequality(n, l),
        traces_match,
    })
}

#[derive(Clone, Debug)]
pub struct QuaternionReport {
    pub induced_a: ClassFunction,
    pub induced_b: ClassFunction,
    pub induced_equal: bool,
    pub irreducible: bool,
    pub conjugate: bool,
}

impl fmt::Display for QuaternionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Ind chi_a = {}", self.induced_a.render())?;
        writeln!(f, "Ind chi_b = {}", self.induced_b.render())?;
        write!(
            f,
            "induced_equal={} irreducible={} conjugate={}",
            self.induced_equal, self.irreducible, self.conjugate
        )
    }
}

/// In `Q_8`, `χ_a : a -> i` on `<a>` and `χ_b : b -> i` on `<b>` induce the
/// same irreducible character although `<a>` and `<b>` are not conjugate.
pub fn quaternion_contrast() -> Result<QuaternionReport, CharError> {
    let q = catalog::quaternion();
    let (a, b) = catalog::quaternion_generators();
    let (ha, hb) = catalog::quaternion_subgroups(&q);
    let i4 = CycloNum::root_of_unity(4, 1);
    let chi_a = cyclic_character(&ha, q.index_of(&a).unwrap(), &i4);
    let chi_b = cyclic_character(&hb, q.index_of(&b).unwrap(), &i4);
    let induced_a = chi_a.induce(&ha)?;
    let induced_b = chi_b.induce(&hb)?;
    Ok(QuaternionReport {
        induced_equal: induced_a == induced_b,
        irreducible: induced_a.norm()? == Rational::from_integer(1),
        conjugate: are_conjugate(&q, &ha, &hb)?.is_some(),
        induced_a,
        induced_b,
    })
}
