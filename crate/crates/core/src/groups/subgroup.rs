//! Subgroups, coset actions, conjugacy of subgroups, and subgroup classes.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use super::group::PermGroup;
use super::perm::Perm;
use super::GroupError;

/// A subgroup of a materialized parent group.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<PermGroup>,
    group: Arc<PermGroup>,
    /// Parent index of each element of `group`, by `group` index.
    to_parent: Vec<usize>,
    member: Vec<bool>,
    sorted: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subgroup(order {}, gens {:?})",
            self.order(),
            self.group.gens()
        )
    }
}

/// Bitset of parent indices, used as a hashable subgroup identity.
pub type MemberKey = Vec<u64>;

pub fn member_key(n: usize, members: impl IntoIterator<Item = usize>) -> MemberKey {
    let mut key = vec![0u64; n.div_ceil(64)];
    for m in members {
        key[m / 64] |= 1 << (m % 64);
    }
    key
}

impl Subgroup {
    /// The subgroup generated by permutations that lie in `parent`.
    pub fn generated(parent: &Arc<PermGroup>, gens: Vec<Perm>) -> Result<Self, GroupError> {
        if gens.iter().any(|g| parent.index_of(g).is_none()) {
            return Err(GroupError::NotASubgroup);
        }
        let group = PermGroup::closure(parent.degree(), gens)?;
        Ok(Self::wrap(parent, group))
    }

    /// The subgroup generated by parent elements given by index.
    pub fn generated_by_indices(parent: &Arc<PermGroup>, gens: &[usize]) -> Self {
        let perms = gens.iter().map(|&i| parent.element(i).clone()).collect();
        let group =
            PermGroup::closure(parent.degree(), perms).expect("subgroup of a bounded group");
        Self::wrap(parent, group)
    }

    /// A subgroup from its full member list; fails unless the set is closed.
    pub fn from_members(parent: &Arc<PermGroup>, members: &[usize]) -> Result<Self, GroupError> {
        let mut set = vec![false; parent.order()];
        for &m in members {
            set[m] = true;
        }
        // greedy generating set
        let mut gens = Vec::new();
        let mut covered = vec![false; parent.order()];
        covered[0] = true;
        for &m in members {
            if covered[m] {
                continue;
            }
            gens.push(m);
            let span = parent
                .generated_indices(&gens, members.len())
                .ok_or(GroupError::NotASubgroup)?;
            for &x in &span {
                if !set[x] {
                    return Err(GroupError::NotASubgroup);
                }
                covered[x] = true;
            }
        }
        let sub = Self::generated_by_indices(parent, &gens);
        if sub.order() != members.iter().collect::<HashSet<_>>().len() {
            return Err(GroupError::NotASubgroup);
        }
        Ok(sub)
    }

    fn wrap(parent: &Arc<PermGroup>, group: Arc<PermGroup>) -> Self {
        let to_parent: Vec<usize> = group
            .elements()
            .iter()
            .map(|p| parent.index_of(p).expect("element of parent"))
            .collect();
        let mut member = vec![false; parent.order()];
        for &i in &to_parent {
            member[i] = true;
        }
        let mut sorted = to_parent.clone();
        sorted.sort_unstable();
        assert_eq!(parent.order() % group.order(), 0, "Lagrange");
        Subgroup {
            parent: parent.clone(),
            group,
            to_parent,
            member,
            sorted,
        }
    }

    pub fn whole(parent: &Arc<PermGroup>) -> Self {
        Self::wrap(parent, parent.clone())
    }

    pub fn trivial(parent: &Arc<PermGroup>) -> Self {
        Self::generated_by_indices(parent, &[])
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    /// The subgroup as a group in its own right.
    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, parent_idx: usize) -> bool {
        self.member[parent_idx]
    }

    /// Parent indices of the members, ascending.
    pub fn members(&self) -> &[usize] {
        &self.sorted
    }

    /// Parent index of the element with own index `i`.
    pub fn to_parent(&self, i: usize) -> usize {
        self.to_parent[i]
    }

    /// Parent indices of the generators.
    pub fn gen_indices(&self) -> Vec<usize> {
        self.group
            .gens()
            .iter()
            .map(|g| self.parent.index_of(g).unwrap())
            .collect()
    }

    pub fn key(&self) -> MemberKey {
        member_key(self.parent.order(), self.sorted.iter().copied())
    }

    pub fn same_parent(&self, g: &Arc<PermGroup>) -> bool {
        Arc::ptr_eq(&self.parent, g)
    }

    /// `g^-1 H g` for a parent element `g`.
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let gens: Vec<usize> = self
            .gen_indices()
            .into_iter()
            .map(|h| self.parent.conj(h, g))
            .collect();
        Self::generated_by_indices(&self.parent, &gens)
    }

    /// `|c ∩ H|` for every class `c` of the parent.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.parent.num_classes()];
        for &x in &self.sorted {
            counts[self.parent.class_of(x)] += 1;
        }
        counts
    }

    pub fn is_normal(&self) -> bool {
        let gens = self.gen_indices();
        self.parent
            .gens()
            .iter()
            .map(|s| self.parent.index_of(s).unwrap())
            .all(|s| gens.iter().all(|&h| self.contains(self.parent.conj(h, s))))
    }
}

/// Left cosets `gH`, numbered in breadth-first order from `H` (coset 0,
/// representative the identity) over the generators of `G`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    parent: Arc<PermGroup>,
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
}

impl CosetAction {
    pub fn new(g: &Arc<PermGroup>, h: &Subgroup) -> Result<Self, GroupError> {
        if !h.same_parent(g) {
            return Err(GroupError::NotASubgroup);
        }
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        let assign = |r: usize, coset_of: &mut Vec<usize>, reps: &mut Vec<usize>| {
            let c = reps.len();
            reps.push(r);
            for &x in h.members() {
                coset_of[g.mul(r, x)] = c;
            }
        };
        assign(0, &mut coset_of, &mut reps);
        let gen_idx: Vec<usize> = g.gens().iter().map(|s| g.index_of(s).unwrap()).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for &s in &gen_idx {
                let x = g.mul(s, reps[c]);
                if coset_of[x] == usize::MAX {
                    assign(x, &mut coset_of, &mut reps);
                    queue.push_back(reps.len() - 1);
                }
            }
        }
        Ok(CosetAction {
            parent: g.clone(),
            reps,
            coset_of,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The coset `g * (coset c)`.
    pub fn act(&self, g: usize, c: usize) -> usize {
        self.coset_of[self.parent.mul(g, self.reps[c])]
    }

    /// The permutation of cosets induced by element `g`.
    pub fn image(&self, g: usize) -> Perm {
        Perm::from_images((0..self.len()).map(|c| self.act(g, c) as u32).collect())
            .expect("coset action is a permutation")
    }
}

pub fn coset_action(g: &Arc<PermGroup>, h: &Subgroup) -> Result<CosetAction, GroupError> {
    CosetAction::new(g, h)
}

/// Some `g` with `g^-1 H g = K`, by exhaustive search.
pub fn are_conjugate(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<Option<usize>, GroupError> {
    if !h.same_parent(g) || !k.same_parent(g) {
        return Err(GroupError::NotASubgroup);
    }
    if h.order() != k.order() || h.class_counts() != k.class_counts() {
        return Ok(None);
    }
    let gens = h.gen_indices();
    Ok((0..g.order()).find(|&x| gens.iter().all(|&s| k.contains(g.conj(s, x)))))
}

/// Keys of every conjugate of a subgroup, given by its sorted members.
pub fn conjugate_keys(g: &PermGroup, members: &[usize]) -> HashSet<MemberKey> {
    (0..g.order())
        .map(|x| member_key(g.order(), members.iter().map(|&m| g.conj(m, x))))
        .collect()
}

/// One representative per conjugacy class of subgroups of order at most
/// `max_order`, by cyclic extension: each class representative is extended
/// by every element of `G`. Ordered by subgroup order, then discovery.
pub fn subgroup_classes(g: &Arc<PermGroup>, max_order: usize) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: HashSet<MemberKey> = HashSet::new();
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    seen.extend(conjugate_keys(g, &[0]));
    found.push((vec![0], vec![]));
    let mut next = 0;
    while next < found.len() {
        let (members, gens) = found[next].clone();
        next += 1;
        let mut inside = vec![false; n];
        for &m in &members {
            inside[m] = true;
        }
        for x in 0..n {
            if inside[x] {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(x);
            let Some(span) = g.generated_indices(&new_gens, max_order) else {
                continue;
            };
            let key = member_key(n, span.iter().copied());
            if seen.contains(&key) {
                continue;
            }
            seen.extend(conjugate_keys(g, &span));
            found.push((span, new_gens));
        }
    }
    let mut subs: Vec<Subgroup> = found
        .iter()
        .map(|(_, gens)| Subgroup::generated_by_indices(g, gens))
        .collect();
    subs.sort_by_key(|s| s.order());
    subs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn coset_action_of_s3_on_transposition() {
        let g = catalog::symmetric(3);
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let act = coset_action(&g, &h).unwrap();
        assert_eq!(act.len(), 3);
        assert_eq!(act.reps[0], 0);
        let images: HashSet<Perm> = (0..g.order()).map(|x| act.image(x)).collect();
        assert_eq!(images.len(), 6);
        // stabilizer of coset 0 is H
        for x in 0..g.order() {
            assert_eq!(act.act(x, 0) == 0, h.contains(x));
        }
    }

    #[test]
    fn whole_group_has_one_coset() {
        let g = catalog::symmetric(3);
        let act = coset_action(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(act.len(), 1);
    }

    #[test]
    fn conjugacy_in_s3_and_q8() {
        let g = catalog::symmetric(3);
        let a = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let b = Subgroup::generated(&g, vec![Perm::parse("(0 2)", 3).unwrap()]).unwrap();
        let w = are_conjugate(&g, &a, &b).unwrap().unwrap();
        assert_eq!(a.conjugate(w).key(), b.key());
        assert_eq!(are_conjugate(&g, &a, &a).unwrap(), Some(0));

        let q = catalog::quaternion();
        let (ha, hb) = catalog::quaternion_subgroups(&q);
        assert_eq!(are_conjugate(&q, &ha, &hb).unwrap(), None);
    }

    #[test]
    fn subgroup_class_counts() {
        // S4 has 11 classes of subgroups, S3 has 4, A5 has 9
        assert_eq!(subgroup_classes(&catalog::symmetric(3), 6).len(), 4);
        assert_eq!(subgroup_classes(&catalog::symmetric(4), 24).len(), 11);
        assert_eq!(subgroup_classes(&catalog::alternating(5), 60).len(), 9);
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let g = catalog::symmetric(3);
        let t = g.index_of(&Perm::parse("(0 1)", 3).unwrap()).unwrap();
        let u = g.index_of(&Perm::parse("(0 2)", 3).unwrap()).unwrap();
        assert!(Subgroup::from_members(&g, &[0, t]).is_ok());
        assert_eq!(
            Subgroup::from_members(&g, &[0, t, u]).unwrap_err(),
            GroupError::NotASubgroup
        );
    }
}
