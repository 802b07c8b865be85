//! Permutation groups materialized as explicit element lists.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::Perm;
use super::GroupError;

pub const DEFAULT_ORDER_BOUND: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct ConjClass {
    /// Element index of the representative (the smallest member index).
    pub rep: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

/// A finite permutation group. Element 0 is the identity; elements are
/// numbered in breadth-first order from the identity over the generators.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    classes: OnceLock<ClassData>,
    gen_table: OnceLock<Vec<Vec<usize>>>,
    orders: OnceLock<Vec<u64>>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens {:?})",
            self.degree,
            self.order(),
            self.gens
        )
    }
}

impl PermGroup {
    /// The group generated by `gens` on `degree` points.
    pub fn closure(degree: usize, gens: Vec<Perm>) -> Result<Arc<Self>, GroupError> {
        Self::closure_bounded(degree, gens, DEFAULT_ORDER_BOUND)
    }

    pub fn closure_bounded(
        degree: usize,
        gens: Vec<Perm>,
        bound: usize,
    ) -> Result<Arc<Self>, GroupError> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0);
        let mut i = 0;
        while i < elements.len() {
            for s in &gens {
                let x = s.compose(&elements[i]);
                if !index.contains_key(&x) {
                    if elements.len() >= bound {
                        return Err(GroupError::OrderBoundExceeded(bound));
                    }
                    index.insert(x.clone(), elements.len());
                    elements.push(x);
                }
            }
            i += 1;
        }
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        Ok(Arc::new(PermGroup {
            degree,
            gens,
            elements,
            index,
            inverses,
            classes: OnceLock::new(),
            gen_table: OnceLock::new(),
            orders: OnceLock::new(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverses[g], x), g)
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        self.index[&self.elements[a].pow(k)]
    }

    pub fn elem_order(&self, a: usize) -> u64 {
        self.orders
            .get_or_init(|| self.elements.iter().map(|e| e.order()).collect())[a]
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, i| num_integer::lcm(acc, self.elem_order(i)))
    }

    /// `table[k][e]` is the index of `gens[k] * elements[e]`.
    pub fn gen_table(&self) -> &[Vec<usize>] {
        self.gen_table.get_or_init(|| {
            self.gens
                .iter()
                .map(|s| {
                    self.elements
                        .iter()
                        .map(|e| self.index[&s.compose(e)])
                        .collect()
                })
                .collect()
        })
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gen_idx: Vec<usize> = self.gens.iter().map(|g| self.index[g]).collect();
            let mut class_of = vec![usize::MAX; n];
            let mut classes = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let c = classes.len();
                let mut members = vec![start];
                class_of[start] = c;
                let mut queue = VecDeque::from([start]);
                while let Some(x) = queue.pop_front() {
                    for &s in &gen_idx {
                        let y = self.conj(x, s);
                        if class_of[y] == usize::MAX {
                            class_of[y] = c;
                            members.push(y);
                            queue.push_back(y);
                        }
                    }
                }
                members.sort_unstable();
                classes.push(ConjClass {
                    rep: start,
                    members,
                });
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes ordered by smallest member; the identity class first.
    pub fn classes(&self) -> &[ConjClass] {
        &self.class_data().classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_data().class_of[a]
    }

    pub fn num_classes(&self) -> usize {
        self.classes().len()
    }

    /// Class of `g^k` for `g` in each class.
    pub fn power_map(&self, k: u64) -> Vec<usize> {
        self.classes()
            .iter()
            .map(|c| self.class_of(self.pow(c.rep, k)))
            .collect()
    }

    /// Whether the elements `gens` generate a subgroup of order above `bound`.
    /// Returns the generated element indices otherwise.
    pub fn generated_indices(&self, gens: &[usize], bound: usize) -> Option<Vec<usize>> {
        let mut member = vec![false; self.order()];
        let mut list = vec![0usize];
        member[0] = true;
        let mut i = 0;
        while i < list.len() {
            for &s in gens {
                let x = self.mul(s, list[i]);
                if !member[x] {
                    if list.len() >= bound {
                        return None;
                    }
                    member[x] = true;
                    list.push(x);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        Some(list)
    }

    pub fn is_abelian(&self) -> bool {
        let g: Vec<usize> = self.gens.iter().map(|p| self.index[p]).collect();
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<PermGroup> {
        PermGroup::closure(
            3,
            vec![
                Perm::parse("(0 1)", 3).unwrap(),
                Perm::parse("(0 1 2)", 3).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn closure_orders() {
        let c2 = PermGroup::closure(2, vec![Perm::parse("(0 1)", 2).unwrap()]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(s3().order(), 6);
        let trivial = PermGroup::closure(4, vec![]).unwrap();
        assert_eq!(trivial.order(), 1);
    }

    #[test]
    fn order_bound() {
        let gens = vec![
            Perm::parse("(0 1)", 5).unwrap(),
            Perm::parse("(0 1 2 3 4)", 5).unwrap(),
        ];
        assert_eq!(
            PermGroup::closure_bounded(5, gens, 100).unwrap_err(),
            GroupError::OrderBoundExceeded(100)
        );
    }

    #[test]
    fn s3_classes() {
        let g = s3();
        let mut sizes: Vec<usize> = g.classes().iter().map(|c| c.size()).collect();
        assert_eq!(sizes[0], 1);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_abelian());
    }
}
