//! The three equivalent criteria relating twisted Artin L-functions of two
//! subgroups to their induced characters.
//!
//! An Artin L-function over the base field is determined by the character
//! of the representation induced to `G`, and its pole order at `s = 1` is
//! the multiplicity of the trivial character. Both are evaluated here.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classfn::ClassFunction;
use super::gassmann::gassmann_test;
use super::irreducible::irreducible_characters;
use super::CharError;
use crate::exactalg::Rational;
use crate::groups::{subgroup_classes, GroupError, PermGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct CriteriaReport {
    /// `Ind_H(α ⊗ Res ρ) = Ind_H2(α' ⊗ Res ρ)` for every supplied `ρ`.
    pub condition1: bool,
    /// Equality of the pole orders `(α ⊗ Res ρ, 1)` for every `ρ`.
    pub condition1_poles: bool,
    /// `Ind(ᾱ ⊗ Res ψ)` and `Ind(ᾱ ⊗ Res ψ')` agree on both sides.
    pub condition2: bool,
    /// The pole orders `(ψ,ψ), (ψ',ψ), (ψ,ψ'), (ψ',ψ')` pair up.
    pub condition2_poles: bool,
    /// `ψ = ψ'`.
    pub condition3: bool,
    /// `(α ⊗ Res ρ_i, 1)_H` and `(α' ⊗ Res ρ_i, 1)_H2` per `ρ_i`.
    pub pole_orders: Vec<(Rational, Rational)>,
    /// `[(ψ,ψ), (ψ',ψ), (ψ,ψ'), (ψ',ψ')]`.
    pub psi_products: [Rational; 4],
    /// `(ψ - ψ', ψ - ψ')`.
    pub difference_norm: Rational,
}

impl CriteriaReport {
    pub fn verdict(&self) -> bool {
        self.condition3
    }
}

impl fmt::Display for CriteriaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "condition1={} condition2={} condition3={}",
            self.condition1, self.condition2, self.condition3
        )?;
        write!(f, "norm(psi-psi')={}", self.difference_norm)
    }
}

fn require_character(name: &str, a: &ClassFunction) -> Result<(), CharError> {
    let norm = a.norm()?;
    let deg_ok = a.degree_int().is_some_and(|d| d >= 1);
    if !deg_ok || !norm.is_integer() || norm <= Rational::zero() || !a.inverse_symmetric() {
        return Err(CharError::NotACharacter(format!("{name} = {}", a.render())));
    }
    Ok(())
}

/// Evaluate the three criteria for characters `alpha` of `H` and `alpha2`
/// of `H2` against the irreducible characters `irr` of `G`. All verdicts,
/// literal and by pole orders, must coincide.
pub fn lfunction_criteria_check(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    h2: &Subgroup,
    alpha: &ClassFunction,
    alpha2: &ClassFunction,
    irr: &[ClassFunction],
) -> Result<CriteriaReport, CharError> {
    if !h.same_parent(g) || !h2.same_parent(g) {
        return Err(GroupError::NotASubgroup.into());
    }
    require_character("alpha", alpha)?;
    require_character("alpha'", alpha2)?;
    let one_h = ClassFunction::trivial(h.group());
    let one_h2 = ClassFunction::trivial(h2.group());

    let psi = alpha.induce(h)?;
    let psi2 = alpha2.induce(h2)?;
    let condition3 = psi == psi2;

    let mut condition1 = true;
    let mut pole_orders = Vec::with_capacity(irr.len());
    for rho in irr {
        let a = alpha.tensor(&rho.restrict(h)?)?;
        let b = alpha2.tensor(&rho.restrict(h2)?)?;
        condition1 &= a.induce(h)? == b.induce(h2)?;
        pole_orders.push((a.inner_rational(&one_h)?, b.inner_rational(&one_h2)?));
    }
    let condition1_poles = pole_orders.iter().all(|(a, b)| a == b);

    let twist = |psi: &ClassFunction| -> Result<(ClassFunction, ClassFunction), CharError> {
        let a = alpha.dual().tensor(&psi.restrict(h)?)?;
        let b = alpha2.dual().tensor(&psi.restrict(h2)?)?;
        Ok((a, b))
    };
    let (a1, a2) = twist(&psi)?;
    let (b1, b2) = twist(&psi2)?;
    let condition2 = a1.induce(h)? == a2.induce(h2)? && b1.induce(h)? == b2.induce(h2)?;
    let psi_products = [
        a1.inner_rational(&one_h)?,
        a2.inner_rational(&one_h2)?,
        b1.inner_rational(&one_h)?,
        b2.inner_rational(&one_h2)?,
    ];
    let condition2_poles = psi_products[0] == psi_products[1] && psi_products[2] == psi_products[3];

    let diff = psi.sub(&psi2)?;
    let difference_norm = diff.norm()?;

    // the pole orders are the Frobenius-reciprocity inner products on G
    let reciprocity = psi_products[0] == psi.norm()?
        && psi_products[1] == psi2.inner_rational(&psi)?
        && psi_products[2] == psi.inner_rational(&psi2)?
        && psi_products[3] == psi2.norm()?
        && difference_norm == psi_products[0] - psi_products[1] - psi_products[2] + psi_products[3];
    if !reciprocity {
        return Err(CharError::InvariantViolation(
            "pole orders disagree with inner products on G".into(),
        ));
    }
    let complete = irr
        .iter()
        .map(|c| c.degree_int().unwrap_or(0).pow(2))
        .sum::<i128>()
        == g.order() as i128;
    let mut agree = condition2 == condition3 && condition2_poles == condition3;
    if complete {
        agree &= condition1 == condition3 && condition1_poles == condition3;
    }
    agree &= condition3 == difference_norm.is_zero();
    if !agree {
        return Err(CharError::InvariantViolation(format!(
            "criteria disagree: c1={condition1} c1poles={condition1_poles} c2={condition2} \
             c2poles={condition2_poles} c3={condition3}"
        )));
    }
    Ok(CriteriaReport {
        condition1,
        condition1_poles,
        condition2,
        condition2_poles,
        condition3,
        pole_orders,
        psi_products,
        difference_norm,
    })
}

/// The untwisted case `α = 1_H`, `α' = 1_H2`: equality of the L-functions
/// of all restricted irreducibles, which must match the Gassmann verdict.
pub fn gassmann_lfunction_check(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    h2: &Subgroup,
    irr: &[ClassFunction],
) -> Result<CriteriaReport, CharError> {
    let report = lfunction_criteria_check(
        g,
        h,
        h2,
        &ClassFunction::trivial(h.group()),
        &ClassFunction::trivial(h2.group()),
        irr,
    )?;
    if h.order() == h2.order() && gassmann_test(g, h, h2)?.is_equivalent != report.verdict() {
        return Err(CharError::InvariantViolation(
            "L-function criteria disagree with class counts".into(),
        ));
    }
    Ok(report)
}

/// `(Ind(α ⊗ Res ρ_i), ρ_j)_G = (Ind α, ρ̄_i ⊗ ρ_j)_G` for all pairs.
pub fn projection_formula_holds(
    h: &Subgroup,
    alpha: &ClassFunction,
    irr: &[ClassFunction],
) -> Result<bool, CharError> {
    let psi = alpha.induce(h)?;
    for ri in irr {
        let lhs_char = alpha.tensor(&ri.restrict(h)?)?.induce(h)?;
        for rj in irr {
            let lhs = lhs_char.inner(rj)?;
            let rhs = psi.inner(&ri.dual().tensor(rj)?)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(Ind χ, ρ)_G = (χ, Res ρ)_H` for every `ρ` in `rhos`.
pub fn frobenius_reciprocity_holds(
    h: &Subgroup,
    chi: &ClassFunction,
    rhos: &[ClassFunction],
) -> Result<bool, CharError> {
    let ind = chi.induce(h)?;
    for rho in rhos {
        if ind.inner(rho)? != chi.inner(&rho.restrict(h)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One sampled input of [`lfunction_criteria_check`] with its report.
#[derive(Clone, Debug)]
pub struct CriteriaInstance {
    pub h: Subgroup,
    pub h2: Subgroup,
    pub alpha: ClassFunction,
    pub alpha2: ClassFunction,
    /// `stages`, `random` or `untwisted`.
    pub mode: &'static str,
    pub report: CriteriaReport,
}

/// A random character: the sum of one or two random irreducibles.
fn random_character(
    irr: &[ClassFunction],
    rng: &mut ChaCha8Rng,
) -> Result<ClassFunction, CharError> {
    let a = &irr[rng.gen_range(0..irr.len())];
    if rng.gen_bool(0.5) {
        a.add(&irr[rng.gen_range(0..irr.len())])
    } else {
        Ok(a.clone())
    }
}

/// Sample `count` inputs and check each. Modes cycle through: induction in
/// stages (`H2 <= H`, `alpha = Ind alpha2`, so `psi = psi'`), independent
/// random subgroups and characters, and trivial characters on subgroups of
/// equal order.
pub fn random_criteria_instances(
    g: &Arc<PermGroup>,
    irr: &[ClassFunction],
    count: usize,
    seed: u64,
) -> Result<Vec<CriteriaInstance>, CharError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subs = subgroup_classes(g, g.order());
    let mut sub_irr: Vec<Option<Vec<ClassFunction>>> = vec![None; subs.len()];
    let mut irr_of = |i: usize| -> Result<Vec<ClassFunction>, CharError> {
        if sub_irr[i].is_none() {
            sub_irr[i] = Some(irreducible_characters(subs[i].group())?);
        }
        Ok(sub_irr[i].clone().unwrap())
    };
    let mut out = Vec::with_capacity(count);
    for n in 0..count {
        let (i, j, alpha, alpha2, mode) = match n % 3 {
            0 => {
                let i = rng.gen_range(0..subs.len());
                let inside: Vec<usize> = (0..subs.len())
                    .filter(|&k| subs[k].members().iter().all(|&m| subs[i].contains(m)))
                    .collect();
                let j = inside[rng.gen_range(0..inside.len())];
                let beta = random_character(&irr_of(j)?, &mut rng)?;
                // `H2` as a subgroup of `H`, with `beta` carried over
                let k = &subs[j];
                let hk = Subgroup::generated(subs[i].group(), k.group().gens().to_vec())?;
                let moved = ClassFunction::from_fn(hk.group(), |e| {
                    let p = hk.group().element(e);
                    beta.at(k.group().index_of(p).expect("same elements"))
                        .clone()
                });
                (i, j, moved.induce(&hk)?, beta, "stages")
            }
            1 => {
                let i = rng.gen_range(0..subs.len());
                let j = rng.gen_range(0..subs.len());
                let a = random_character(&irr_of(i)?, &mut rng)?;
                let b = random_character(&irr_of(j)?, &mut rng)?;
                (i, j, a, b, "random")
            }
            _ => {
                let i = rng.gen_range(0..subs.len());
                let same: Vec<usize> = (0..subs.len())
                    .filter(|&k| subs[k].order() == subs[i].order())
                    .collect();
                let j = same[rng.gen_range(0..same.len())];
                (
                    i,
                    j,
                    ClassFunction::trivial(subs[i].group()),
                    ClassFunction::trivial(subs[j].group()),
                    "untwisted",
                )
            }
        };
        let report = lfunction_criteria_check(g, &subs[i], &subs[j], &alpha, &alpha2, irr)?;
        out.push(CriteriaInstance {
            h: subs[i].clone(),
            h2: subs[j].clone(),
            alpha,
            alpha2,
            mode,
            report,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{irreducible_characters, linear_characters};
    use crate::exactalg::CycloNum;
    use crate::groups::{catalog, low_index_subgroups, Perm};

    #[test]
    fn identical_trivial_twists() {
        let g = catalog::symmetric(3);
        let irr = irreducible_characters(&g).unwrap();
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let r = gassmann_lfunction_check(&g, &h, &h, &irr).unwrap();
        assert!(r.condition1 && r.condition2 && r.condition3);
        assert_eq!(r.difference_norm, Rational::zero());
    }

    #[test]
    fn psl27_pair() {
        let g = catalog::psl2(7);
        let irr = irreducible_characters(&g).unwrap();
        let subs = low_index_subgroups(&g, 7).unwrap();
        let r = gassmann_lfunction_check(&g, &subs[0], &subs[1], &irr).unwrap();
        assert!(r.condition3);
    }

    #[test]
    fn distinct_inductions_in_s3() {
        let g = catalog::symmetric(3);
        let irr = irreducible_characters(&g).unwrap();
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let sign = linear_characters(h.group()).unwrap()[1].clone();
        let r =
            lfunction_criteria_check(&g, &h, &h, &ClassFunction::trivial(h.group()), &sign, &irr)
                .unwrap();
        assert!(!r.condition1 && !r.condition2 && !r.condition3);
        assert_eq!(r.difference_norm, Rational::from_integer(2));
        assert_eq!(
            r.to_string().lines().next().unwrap(),
            "condition1=false condition2=false condition3=false"
        );
    }

    #[test]
    fn non_characters_are_rejected() {
        let g = catalog::symmetric(3);
        let irr = irreducible_characters(&g).unwrap();
        let h = Subgroup::whole(&g);
        let half = ClassFunction::trivial(&g).scale(Rational::new(1, 2));
        let err = lfunction_criteria_check(&g, &h, &h, &half, &half, &irr).unwrap_err();
        assert!(matches!(err, CharError::NotACharacter(_)));
        let zero = ClassFunction::from_fn(&g, |_| CycloNum::zero());
        assert!(lfunction_criteria_check(&g, &h, &h, &zero, &zero, &irr).is_err());
    }

    #[test]
    fn reciprocity_and_projection_on_q8() {
        let g = catalog::quaternion();
        let irr = irreducible_characters(&g).unwrap();
        let (ha, _) = catalog::quaternion_subgroups(&g);
        for chi in linear_characters(ha.group()).unwrap() {
            assert!(frobenius_reciprocity_holds(&ha, &chi, &irr).unwrap());
            assert!(projection_formula_holds(&ha, &chi, &irr).unwrap());
        }
    }

    #[test]
    fn sampled_instances_are_coherent() {
        let g = catalog::symmetric(4);
        let irr = irreducible_characters(&g).unwrap();
        let runs = random_criteria_instances(&g, &irr, 12, 3).unwrap();
        assert_eq!(runs.len(), 12);
        for r in runs.iter().filter(|r| r.mode == "stages") {
            assert!(r.report.condition3);
        }
    }
}
