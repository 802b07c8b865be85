//! Gassmann equivalence of subgroups by class-intersection counts, checked
//! against the permutation-character criterion.

use std::fmt;
use std::sync::Arc;

use super::classfn::ClassFunction;
use super::CharError;
use crate::groups::{are_conjugate, GroupError, Perm, PermGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct GassmannReport {
    pub is_equivalent: bool,
    pub is_trivial: bool,
    /// `(class representative, |c ∩ H|, |c ∩ H2|)` in class order.
    pub counts: Vec<(Perm, usize, usize)>,
}

impl fmt::Display for GassmannReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (rep, a, b) in &self.counts {
            writeln!(f, "class {rep} countH={a} countH2={b}")?;
        }
        writeln!(f, "equivalent={}", self.is_equivalent)?;
        write!(f, "trivial={}", self.is_trivial)
    }
}

/// Compare `|c ∩ H|` with `|c ∩ H2|` on every class `c` of `G`. The verdict
/// must equal `Ind 1_H = Ind 1_H2`; `is_trivial` means `H`, `H2` conjugate.
pub fn gassmann_test(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    h2: &Subgroup,
) -> Result<GassmannReport, CharError> {
    if !h.same_parent(g) || !h2.same_parent(g) {
        return Err(GroupError::NotASubgroup.into());
    }
    let ch = h.class_counts();
    let ch2 = h2.class_counts();
    let counts: Vec<(Perm, usize, usize)> = g
        .classes()
        .iter()
        .zip(ch.iter().zip(&ch2))
        .map(|(c, (&a, &b))| (g.element(c.rep).clone(), a, b))
        .collect();
    if h.order() != h2.order() {
        return Ok(GassmannReport {
            is_equivalent: false,
            is_trivial: false,
            counts,
        });
    }
    let combinatorial = ch == ch2;
    let ind = ClassFunction::trivial(h.group()).induce(h)?;
    let ind2 = ClassFunction::trivial(h2.group()).induce(h2)?;
    if combinatorial != (ind == ind2) {
        return Err(CharError::InvariantViolation(
            "class counts and permutation characters disagree".into(),
        ));
    }
    let is_trivial = are_conjugate(g, h, h2)?.is_some();
    if is_trivial && !combinatorial {
        return Err(CharError::InvariantViolation(
            "conjugate subgroups with different class counts".into(),
        ));
    }
    Ok(GassmannReport {
        is_equivalent: combinatorial,
        is_trivial,
        counts,
    })
}

/// Test every pair of distinct subgroup classes of equal order from `subs`
/// and return the index pairs that form nontrivial Gassmann triples.
pub fn triviality_screen(
    g: &Arc<PermGroup>,
    subs: &[Subgroup],
) -> Result<Vec<(usize, usize)>, CharError> {
    let mut hits = Vec::new();
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if subs[i].order() != subs[j].order() {
                continue;
            }
            let r = gassmann_test(g, &subs[i], &subs[j])?;
            if r.is_equivalent && !r.is_trivial {
                hits.push((i, j));
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalog, low_index_subgroups, subgroup_classes};

    #[test]
    fn same_subgroup_is_trivially_equivalent() {
        let g = catalog::symmetric(4);
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1 2)", 4).unwrap()]).unwrap();
        let r = gassmann_test(&g, &h, &h).unwrap();
        assert!(r.is_equivalent && r.is_trivial);
        assert_eq!(r.to_string().lines().count(), g.num_classes() + 2);
    }

    #[test]
    fn psl27_index_seven_pair() {
        let g = catalog::psl2(7);
        let subs = low_index_subgroups(&g, 7).unwrap();
        assert_eq!(subs.len(), 2);
        let r = gassmann_test(&g, &subs[0], &subs[1]).unwrap();
        assert!(r.is_equivalent && !r.is_trivial);
    }

    #[test]
    fn s4_has_only_trivial_triples() {
        let g = catalog::symmetric(4);
        let subs = subgroup_classes(&g, 24);
        assert!(triviality_screen(&g, &subs).unwrap().is_empty());
    }

    #[test]
    fn unequal_orders_are_not_equivalent() {
        let g = catalog::symmetric(3);
        let r = gassmann_test(&g, &Subgroup::whole(&g), &Subgroup::trivial(&g)).unwrap();
        assert!(!r.is_equivalent);
    }
}
