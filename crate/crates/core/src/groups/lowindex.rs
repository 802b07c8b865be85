//! Subgroups of small index via transitive permutation actions.

use std::collections::HashSet;
use std::sync::Arc;

use super::group::PermGroup;
use super::perm::{all_perms, partitions, Perm};
use super::subgroup::{conjugate_keys, member_key, MemberKey, Subgroup};
use super::GroupError;

pub const MAX_INDEX: usize = 8;

/// A generating set of at most two elements when one exists among
/// (class representative, element) pairs, otherwise a greedily thinned set.
pub fn small_generating_set(g: &PermGroup) -> Vec<usize> {
    let n = g.order();
    let orig: Vec<usize> = g.gens().iter().map(|p| g.index_of(p).unwrap()).collect();
    if orig.len() <= 2 {
        return orig;
    }
    for c in g.classes().iter().skip(1) {
        for b in 1..n {
            if g.generated_indices(&[c.rep, b], n).map(|s| s.len()) == Some(n) {
                return vec![c.rep, b];
            }
        }
    }
    let mut gens = orig.clone();
    let mut i = 0;
    while i < gens.len() {
        let mut trial = gens.clone();
        trial.remove(i);
        if g.generated_indices(&trial, n).map(|s| s.len()) == Some(n) {
            gens = trial;
        } else {
            i += 1;
        }
    }
    gens
}

/// Breadth-first words: `steps[e] = (prev, k)` with `e = gens[k] * prev`,
/// listed in an order where `prev` precedes `e`.
struct SchreierTree {
    order: Vec<usize>,
    steps: Vec<(usize, usize)>,
}

fn schreier_tree(g: &PermGroup, gens: &[usize]) -> SchreierTree {
    let n = g.order();
    let mut steps = vec![(usize::MAX, usize::MAX); n];
    steps[0] = (0, usize::MAX);
    let mut order = vec![0];
    let mut i = 0;
    while i < order.len() {
        let e = order[i];
        for (k, &s) in gens.iter().enumerate() {
            let x = g.mul(s, e);
            if steps[x].0 == usize::MAX {
                steps[x] = (e, k);
                order.push(x);
            }
        }
        i += 1;
    }
    SchreierTree { order, steps }
}

/// Images of all elements under the map fixed by generator images, or
/// `None` if that map is not a homomorphism.
fn extend_hom(
    g: &PermGroup,
    gens: &[usize],
    tree: &SchreierTree,
    images: &[&Perm],
) -> Option<Vec<Perm>> {
    let deg = images[0].degree();
    let mut phi: Vec<Option<Perm>> = vec![None; g.order()];
    phi[0] = Some(Perm::identity(deg));
    for &e in &tree.order[1..] {
        let (prev, k) = tree.steps[e];
        phi[e] = Some(images[k].compose(phi[prev].as_ref().unwrap()));
    }
    let phi: Vec<Perm> = phi.into_iter().map(|p| p.unwrap()).collect();
    for (e, pe) in phi.iter().enumerate() {
        for (k, &s) in gens.iter().enumerate() {
            if phi[g.mul(s, e)] != images[k].compose(pe) {
                return None;
            }
        }
    }
    Some(phi)
}

fn is_transitive(images: &[&Perm], n: usize) -> bool {
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        for p in images {
            let y = p.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// One subgroup per conjugacy class of subgroups of index `n`, as point
/// stabilizers of transitive actions on `n` points. Ordered by discovery.
pub fn low_index_subgroups(g: &Arc<PermGroup>, n: usize) -> Result<Vec<Subgroup>, GroupError> {
    if n == 0 || n > MAX_INDEX {
        return Err(GroupError::IndexTooLarge(n));
    }
    if g.order() % n != 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Subgroup::whole(g)]);
    }
    let gens = small_generating_set(g);
    let tree = schreier_tree(g, &gens);
    let perms = all_perms(n);
    let orders: Vec<u64> = gens.iter().map(|&s| g.elem_order(s)).collect();
    // first generator up to relabelling: one permutation per cycle type
    let first: Vec<Perm> = partitions(n)
        .into_iter()
        .map(|t| Perm::with_cycle_type(n, &t))
        .filter(|p| orders[0] % p.order() == 0)
        .collect();
    let rest: Vec<Vec<&Perm>> = orders[1..]
        .iter()
        .map(|&o| perms.iter().filter(|p| o % p.order() == 0).collect())
        .collect();

    let mut seen: HashSet<MemberKey> = HashSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; rest.len()];
    for a in &first {
        if rest.iter().any(|r| r.is_empty()) {
            break;
        }
        choice.iter_mut().for_each(|c| *c = 0);
        loop {
            let mut images: Vec<&Perm> = vec![a];
            images.extend(rest.iter().zip(&choice).map(|(r, &c)| r[c]));
            if is_transitive(&images, n) {
                if let Some(phi) = extend_hom(g, &gens, &tree, &images) {
                    let stab: Vec<usize> =
                        (0..g.order()).filter(|&e| phi[e].apply(0) == 0).collect();
                    let key = member_key(g.order(), stab.iter().copied());
                    if !seen.contains(&key) {
                        seen.extend(conjugate_keys(g, &stab));
                        out.push(Subgroup::from_members(g, &stab)?);
                    }
                }
            }
            // odometer over the remaining generators
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < rest[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn s3_small_indices() {
        let g = catalog::symmetric(3);
        let idx3 = low_index_subgroups(&g, 3).unwrap();
        assert_eq!(idx3.len(), 1);
        assert_eq!(idx3[0].order(), 2);
        let idx2 = low_index_subgroups(&g, 2).unwrap();
        assert_eq!(idx2.len(), 1);
        assert_eq!(idx2[0].order(), 3);
    }

    #[test]
    fn psl27_index_seven_has_two_classes() {
        let g = catalog::psl2(7);
        let subs = low_index_subgroups(&g, 7).unwrap();
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().all(|s| s.order() == 24));
    }

    #[test]
    fn agrees_with_cyclic_extension() {
        for g in [
            catalog::symmetric(4),
            catalog::quaternion(),
            catalog::alternating(4),
        ] {
            for n in 1..=8 {
                if g.order() % n != 0 {
                    continue;
                }
                let low = low_index_subgroups(&g, n).unwrap().len();
                let all = super::super::subgroup::subgroup_classes(&g, g.order())
                    .into_iter()
                    .filter(|s| s.index() == n)
                    .count();
                assert_eq!(low, all, "order {} index {n}", g.order());
            }
        }
    }
}
