//! Zeta numerators from point counts, L-polynomials of quadratic characters
//! of `F_q(x)`, and the two-character comparison over `C_2 x C_2`.

use std::fmt;

use num_traits::{One, Zero};

use super::places::Place;
use super::{FfError, Fx};
use crate::chars::{linear_characters, ClassFunction};
use crate::exactalg::factor::{factor, monic_irreducibles};
use crate::exactalg::numtheory::{divisors, mobius};
use crate::exactalg::{
    ExtField, FiniteField, FqElem, FqField, Integers, Poly, PolyRing, Rational, Ring,
};
use crate::groups::{catalog, Subgroup};

/// Zeta data of a curve: `Z(T) = P(T) / ((1 - T)(1 - qT))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaData {
    pub q: u64,
    pub genus: usize,
    /// `P(T)` ascending, of degree `2g`.
    pub numerator: Vec<i128>,
    /// Number of places of degree `d`, for `d = 1..=bound`.
    pub place_counts: Vec<i128>,
}

/// Power sums `p_1..p_n` of the inverse roots of `P(T) = prod (1 - a_j T)`.
fn power_sums(numerator: &[i128], n: usize) -> Vec<Rational> {
    // P(T) = sum c_k T^k with c_k = (-1)^k e_k
    let e = |k: usize| -> Rational {
        let c = numerator.get(k).copied().unwrap_or(0);
        Rational::from_integer(if k % 2 == 0 { c } else { -c })
    };
    let mut p: Vec<Rational> = vec![Rational::zero(); n + 1];
    for k in 1..=n {
        let mut s = Rational::from_integer(k as i128) * e(k);
        if k % 2 == 0 {
            s = -s;
        }
        for i in 1..k {
            let term = e(i) * p[k - i];
            s += if i % 2 == 1 { term } else { -term };
        }
        p[k] = s;
    }
    p
}

impl ZetaData {
    /// `P(1)`, the divisor class number.
    pub fn class_number(&self) -> i128 {
        self.numerator.iter().sum()
    }

    /// `N_i = q^i + 1 - sum a_j^i` for `i = 1..=n`.
    pub fn point_counts(&self, n: usize) -> Vec<i128> {
        let p = power_sums(&self.numerator, n);
        (1..=n)
            .map(|i| {
                let v = Rational::from_integer((self.q as i128).pow(i as u32) + 1) - p[i];
                v.to_integer()
            })
            .collect()
    }

    /// `P(T) = q^g T^(2g) P(1 / (qT))`, coefficientwise
    /// `c_(2g-k) = q^(g-k) c_k`.
    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus;
        let c = &self.numerator;
        c.len() == 2 * g + 1
            && (0..=2 * g).all(|k| {
                let (lo, hi) = if k <= g {
                    (k, 2 * g - k)
                } else {
                    (2 * g - k, k)
                };
                c[hi] == c[lo] * (self.q as i128).pow((g - lo) as u32)
            })
    }

    /// `P(T) / ((1 - T)(1 - qT))` against `prod_d (1 - T^d)^(-b_d)` through
    /// `T^bound`.
    pub fn euler_product_agrees(&self) -> bool {
        let n = self.place_counts.len();
        let mut rational = vec![0i128; n + 1];
        for (k, r) in rational.iter_mut().enumerate() {
            // coefficient of T^k in 1/((1-T)(1-qT)) is sum_{i<=k} q^i
            let denom: Vec<i128> = (0..=k)
                .map(|i| (0..=i).map(|j| (self.q as i128).pow(j as u32)).sum())
                .collect();
            *r = (0..=k)
                .map(|i| self.numerator.get(i).copied().unwrap_or(0) * denom[k - i])
                .sum();
        }
        let mut euler = vec![0i128; n + 1];
        euler[0] = 1;
        for (d, &b) in self.place_counts.iter().enumerate() {
            let d = d + 1;
            // (1 - T^d)^(-b) = sum_k C(b + k - 1, k) T^(dk)
            let mut series = vec![0i128; n + 1];
            let mut coef = 1i128;
            for k in 0..=n / d {
                series[k * d] = coef;
                coef = coef * (b + k as i128) / (k as i128 + 1);
            }
            euler = series_mul(&euler, &series, n);
        }
        rational == euler
    }

    pub fn render_numerator(&self) -> String {
        render_t(&self.numerator)
    }
}

impl fmt::Display for ZetaData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q={} genus={}", self.q, self.genus)?;
        writeln!(f, "numerator={}", self.render_numerator())?;
        let counts: Vec<String> = self.place_counts.iter().map(|b| b.to_string()).collect();
        writeln!(f, "places=[{}]", counts.join(", "))?;
        write!(f, "class_number={}", self.class_number())
    }
}

fn render_t(c: &[i128]) -> String {
    let zr = PolyRing::new(Integers, "T");
    zr.render(&zr.from_coeffs(c.to_vec()))
}

fn series_mul(a: &[i128], b: &[i128], n: usize) -> Vec<i128> {
    let mut out = vec![0i128; n + 1];
    for (i, &x) in a.iter().enumerate().take(n + 1) {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// The zeta numerator of a genus-`g` curve over `F_q` from `N_1..N_g`,
/// completed by the functional equation, with place counts through
/// `bound`.
pub fn zeta_from_curve(
    counts: &[u64],
    q: u64,
    genus: usize,
    bound: usize,
) -> Result<ZetaData, FfError> {
    if counts.len() < genus {
        return Err(FfError::FunctionalEquationViolated(format!(
            "{} counts supplied for genus {genus}",
            counts.len()
        )));
    }
    let qi = q as i128;
    // e_k = (1/k) sum_{i=1}^k (-1)^(i-1) e_(k-i) p_i, p_i = q^i + 1 - N_i
    let p: Vec<Rational> = (1..=genus)
        .map(|i| Rational::from_integer(qi.pow(i as u32) + 1 - counts[i - 1] as i128))
        .collect();
    let mut e = vec![Rational::one()];
    for k in 1..=genus {
        let mut s = Rational::zero();
        for i in 1..=k {
            let term = e[k - i] * p[i - 1];
            s += if i % 2 == 1 { term } else { -term };
        }
        e.push(s / Rational::from_integer(k as i128));
    }
    let mut numerator = vec![0i128; 2 * genus + 1];
    for (k, ek) in e.iter().enumerate() {
        if !ek.is_integer() {
            return Err(FfError::FunctionalEquationViolated(format!(
                "coefficient of T^{k} is {ek}"
            )));
        }
        let c = if k % 2 == 0 {
            ek.to_integer()
        } else {
            -ek.to_integer()
        };
        numerator[k] = c;
        numerator[2 * genus - k] = c * qi.pow((genus - k) as u32);
    }
    let mut z = ZetaData {
        q,
        genus,
        numerator,
        place_counts: Vec::new(),
    };
    let n = z.point_counts(bound);
    for d in 1..=bound {
        let s: i128 = divisors(d as u64)
            .iter()
            .map(|&e| mobius(d as u64 / e) as i128 * n[e as usize - 1])
            .sum();
        if s < 0 || s % d as i128 != 0 {
            return Err(FfError::FunctionalEquationViolated(format!(
                "{s}/{d} places of degree {d}"
            )));
        }
        z.place_counts.push(s / d as i128);
    }
    if z.class_number() <= 0 || !z.functional_equation_holds() {
        return Err(FfError::FunctionalEquationViolated(
            "class number not positive".into(),
        ));
    }
    Ok(z)
}

/// The L-polynomial of the quadratic character of `F_q(x)(sqrt f)`.
#[derive(Clone, Debug)]
pub struct QuadLfun {
    pub q: u64,
    pub genus: usize,
    /// `prod over finite P of (1 - chi(P) T^deg P)^(-1)` through `T^bound`.
    pub finite_euler: Vec<i128>,
    /// The complete L-polynomial, equal to the zeta numerator of
    /// `y^2 = f`, of degree `2g`.
    pub numerator: Vec<i128>,
    /// The finite Euler product vanishes beyond degree `deg f - 1`.
    pub euler_ok: bool,
    /// The numerator agrees with the zeta numerator from point counts.
    pub counts_ok: bool,
}

impl QuadLfun {
    pub fn render(&self) -> String {
        render_t(&self.numerator)
    }
}

fn quadratic_symbol(ext: &ExtField<FqField>, r: &Poly<FqElem>) -> i128 {
    ext.quadratic_character(r) as i128
}

/// `sum_{x in F_{q^i}} chi(f(x))` by enumerating the field of order `q^i`.
fn character_sum(f: &Poly<FqElem>, base: &FqField, i: usize) -> Result<i128, FfError> {
    let q = base.q();
    let size = q
        .checked_pow(i as u32)
        .filter(|&s| s <= 1 << 20)
        .ok_or(FfError::EnumerationBoundExceeded(q.pow(i as u32)))?;
    let ext = ExtField::of_degree(base.clone(), i);
    let mut s = 0i128;
    for idx in 0..size {
        let x = ext.elem_at(idx);
        let v = f.coeffs().iter().rev().fold(ext.zero(), |acc, c| {
            ext.add(&ext.mul(&acc, &x), &ext.embed(c))
        });
        s += quadratic_symbol(&ext, &v);
    }
    Ok(s)
}

/// The L-polynomial of the quadratic character attached to a squarefree
/// nonconstant `f`, from the Euler product over finite places through
/// `T^bound`, checked against point counts of `y^2 = f`.
pub fn quad_lfun(fx: &Fx, f: &Poly<FqElem>, bound: usize) -> Result<QuadLfun, FfError> {
    let field = fx.base();
    let q = field.q();
    if q % 2 == 0 {
        return Err(FfError::EvenCharacteristic);
    }
    let d = match f.degree() {
        None | Some(0) => return Err(FfError::ConstantPolynomial),
        Some(d) => d,
    };
    if fx.gcd(f, &fx.derivative(f)).degree() != Some(0) {
        return Err(FfError::NotSquarefree);
    }
    let genus = (d - 1) / 2;
    let bound = bound.max(d - 1);
    let mut euler = vec![0i128; bound + 1];
    euler[0] = 1;
    for e in 1..=bound {
        for p in monic_irreducibles(fx, e) {
            let place = Place::Finite(p.clone());
            let ext = place.residue_field(fx).unwrap();
            let chi = quadratic_symbol(&ext, &ext.reduce(f));
            if chi == 0 {
                continue;
            }
            let mut factor = vec![0i128; bound + 1];
            for k in 0..=bound / e {
                factor[k * e] = chi.pow(k as u32);
            }
            euler = series_mul(&euler, &factor, bound);
        }
    }
    let euler_ok = euler[d..].iter().all(|&c| c == 0);
    // infinite place: ramified for odd d, otherwise chi(lc) with degree 1
    let mut numerator = euler[..d].to_vec();
    if d % 2 == 0 {
        let eps = field.quadratic_character(f.lc().unwrap()) as i128;
        // divide by (1 - eps T)
        let mut out = vec![0i128; d - 1];
        let mut carry = 0i128;
        for (k, slot) in out.iter_mut().enumerate() {
            carry = numerator[k] + eps * carry;
            *slot = carry;
        }
        if numerator[d - 1] + eps * carry != 0 {
            return Err(FfError::FunctionalEquationViolated(
                "finite L-polynomial lacks the factor at infinity".into(),
            ));
        }
        numerator = out;
    }
    let counts: Result<Vec<u64>, FfError> = (1..=genus)
        .map(|i| {
            let qi = q.pow(i as u32) as i128;
            let at_inf = if d % 2 == 1 {
                1
            } else {
                // two points at infinity when lc is a square in F_{q^i}
                let eps = if i % 2 == 0 {
                    1
                } else {
                    field.quadratic_character(f.lc().unwrap()) as i128
                };
                1 + eps
            };
            Ok((qi + character_sum(f, field, i)? + at_inf) as u64)
        })
        .collect();
    let counts_ok = match counts {
        Ok(c) => zeta_from_curve(&c, q, genus, 1)
            .map(|z| z.numerator == numerator)
            .unwrap_or(false),
        Err(_) => false,
    };
    Ok(QuadLfun {
        q,
        genus,
        finite_euler: euler,
        numerator,
        euler_ok,
        counts_ok,
    })
}

/// The comparison of `L_K(chi|H)` with `L_K'(chi|H')` for
/// `K = F(sqrt f1)`, `K' = F(sqrt f2)` inside `N = F(sqrt f1, sqrt f2)`.
#[derive(Clone, Debug)]
pub struct MotivatingReport {
    /// Zeta numerators of `K` and `K'`.
    pub zeta_k: Vec<i128>,
    pub zeta_k2: Vec<i128>,
    pub zetas_equal: bool,
    /// `L_K(chi|H) = zeta_K`: numerator and pole order.
    pub l_k: Vec<i128>,
    pub pole_k: i128,
    /// `L_K'(chi|H') = L(chi_f1) L(chi_f1f2)`: numerator and pole order.
    pub l_k2: Vec<i128>,
    pub pole_k2: i128,
    /// Pole orders `(chi|H, 1)_H` and `(chi|H', 1)_H'` from characters of
    /// `C_2 x C_2`.
    pub character_poles: (Rational, Rational),
    pub distinct: bool,
}

impl fmt::Display for MotivatingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |c: &Vec<i128>| render_t(c);
        writeln!(
            f,
            "zeta_K={} zeta_K'={} equal={}",
            r(&self.zeta_k),
            r(&self.zeta_k2),
            self.zetas_equal
        )?;
        writeln!(
            f,
            "L_K(chi|H)={} / ((1 - T)(1 - qT)) poles={}",
            r(&self.l_k),
            self.pole_k
        )?;
        writeln!(f, "L_K'(chi|H')={} poles={}", r(&self.l_k2), self.pole_k2)?;
        writeln!(
            f,
            "character_poles=({}, {})",
            self.character_poles.0, self.character_poles.1
        )?;
        write!(f, "distinct={}", self.distinct)
    }
}

/// Squarefree part `lc * prod of monic factors with odd multiplicity`.
fn squarefree_part(fx: &Fx, f: &Poly<FqElem>) -> Poly<FqElem> {
    let fac = factor(fx, f);
    fac.factors
        .iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(fx.constant(fac.unit), |acc, (p, _)| fx.mul(&acc, p))
}

fn is_square_const(field: &FqField, c: &FqElem) -> bool {
    field.quadratic_character(c) == 1
}

pub fn motivating_example_check(
    fx: &Fx,
    f1: &Poly<FqElem>,
    f2: &Poly<FqElem>,
    bound: usize,
) -> Result<MotivatingReport, FfError> {
    let field = fx.base();
    let prod = squarefree_part(fx, &fx.mul(f1, f2));
    if prod.degree() == Some(0) && is_square_const(field, prod.lc().unwrap()) {
        return Err(FfError::DegenerateGaloisGroup);
    }
    let l1 = quad_lfun(fx, f1, bound)?;
    let l2 = quad_lfun(fx, f2, bound)?;
    let l12 = quad_lfun(fx, &prod, bound)?;
    let zr = PolyRing::new(Integers, "T");
    let l_k2 = zr.mul(
        &zr.from_coeffs(l1.numerator.clone()),
        &zr.from_coeffs(l12.numerator.clone()),
    );

    // C_2 x C_2: the first generator moves sqrt f1, the second sqrt f2
    let v4 = catalog::klein_four();
    let s1 = v4.gens()[0].clone();
    let s2 = v4.gens()[1].clone();
    let h = Subgroup::generated(&v4, vec![s2.clone()]).expect("subgroup");
    let h2 = Subgroup::generated(&v4, vec![s1.clone()]).expect("subgroup");
    let i1 = v4.index_of(&s1).unwrap();
    let i2 = v4.index_of(&s2).unwrap();
    let chi = linear_characters(&v4)
        .expect("abelian group")
        .into_iter()
        .find(|c| c.at(i1).as_integer() == Some(-1) && c.at(i2).as_integer() == Some(1))
        .expect("character trivial on H");
    let pole = |s: &Subgroup| -> Rational {
        chi.restrict(s)
            .and_then(|r| r.inner_rational(&ClassFunction::trivial(s.group())))
            .expect("same group")
    };
    let character_poles = (pole(&h), pole(&h2));
    let pole_k = 1;
    let pole_k2 = 0;
    Ok(MotivatingReport {
        zetas_equal: l1.numerator == l2.numerator,
        zeta_k: l1.numerator.clone(),
        zeta_k2: l2.numerator,
        l_k: l1.numerator,
        pole_k,
        l_k2: l_k2.into_coeffs(),
        pole_k2,
        distinct: character_poles.0 != character_poles.1
            && Rational::from_integer(pole_k) == character_poles.0
            && Rational::from_integer(pole_k2) == character_poles.1,
        character_poles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fx7() -> Fx {
        PolyRing::new(FqField::prime(7).unwrap(), "x")
    }

    fn poly(fx: &Fx, c: &[i64]) -> Poly<FqElem> {
        fx.from_coeffs(c.iter().map(|&k| fx.base().from_i64(k)).collect())
    }

    #[test]
    fn genus_one_numerator() {
        let z = zeta_from_curve(&[12], 7, 1, 4).unwrap();
        assert_eq!(z.numerator, vec![1, 4, 7]);
        assert_eq!(z.render_numerator(), "7*T^2 + 4*T + 1");
        assert_eq!(z.class_number(), 12);
        assert!(z.functional_equation_holds());
        assert!(z.euler_product_agrees());
        assert_eq!(z.place_counts[0], 12);
    }

    #[test]
    fn genus_zero() {
        let z = zeta_from_curve(&[], 7, 0, 3).unwrap();
        assert_eq!(z.numerator, vec![1]);
        assert_eq!(z.place_counts, vec![8, 21, 112]);
        assert!(z.euler_product_agrees());
    }

    #[test]
    fn inconsistent_counts_are_rejected() {
        // N_1 = 100 violates the place count positivity in degree 2
        assert!(zeta_from_curve(&[100], 7, 1, 3).is_err());
    }

    #[test]
    fn quadratic_l_polynomials() {
        let fx = fx7();
        for f in [poly(&fx, &[1, 0, 0, 1]), poly(&fx, &[1, 3, 0, 1])] {
            let l = quad_lfun(&fx, &f, 4).unwrap();
            assert_eq!(l.numerator, vec![1, 4, 7]);
            assert!(l.euler_ok && l.counts_ok);
        }
        let l = quad_lfun(&fx, &poly(&fx, &[0, 6, 1]), 3).unwrap();
        assert_eq!(l.numerator, vec![1]);
        assert!(l.euler_ok && l.counts_ok);
        assert_eq!(
            quad_lfun(&fx, &poly(&fx, &[2]), 3).unwrap_err(),
            FfError::ConstantPolynomial
        );
        assert_eq!(
            quad_lfun(&fx, &poly(&fx, &[0, 0, 1]), 3).unwrap_err(),
            FfError::NotSquarefree
        );
    }

    #[test]
    fn motivating_pair() {
        let fx = fx7();
        let r =
            motivating_example_check(&fx, &poly(&fx, &[1, 0, 0, 1]), &poly(&fx, &[1, 3, 0, 1]), 4)
                .unwrap();
        assert!(r.zetas_equal && r.distinct);
        assert_eq!((r.pole_k, r.pole_k2), (1, 0));
        let same = poly(&fx, &[1, 0, 0, 1]);
        assert_eq!(
            motivating_example_check(&fx, &same, &same, 4).unwrap_err(),
            FfError::DegenerateGaloisGroup
        );
        let r =
            motivating_example_check(&fx, &poly(&fx, &[0, 1]), &poly(&fx, &[-1, 1]), 3).unwrap();
        assert!(r.distinct);
    }
}
