//! Cyclotomic-valued class functions.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::CharError;
use crate::exactalg::{CycloNum, Rational};
use crate::groups::{PermGroup, Subgroup};

/// A function on a group, constant on conjugacy classes, stored by class in
/// the order of [`PermGroup::classes`].
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<CycloNum>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: &Arc<PermGroup>, values: Vec<CycloNum>) -> Self {
        assert_eq!(values.len(), group.num_classes());
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    /// Evaluate `f` on one representative per class.
    pub fn from_fn(group: &Arc<PermGroup>, f: impl Fn(usize) -> CycloNum) -> Self {
        let values = group.classes().iter().map(|c| f(c.rep)).collect();
        Self::new(group, values)
    }

    pub fn trivial(group: &Arc<PermGroup>) -> Self {
        Self::new(group, vec![CycloNum::one(); group.num_classes()])
    }

    pub fn zero(group: &Arc<PermGroup>) -> Self {
        Self::new(group, vec![CycloNum::zero(); group.num_classes()])
    }

    /// Number of fixed points of the defining permutation action.
    pub fn permutation_character(group: &Arc<PermGroup>) -> Self {
        Self::from_fn(group, |e| {
            let p = group.element(e);
            let fixed = (0..p.degree() as u32).filter(|&x| p.apply(x) == x).count();
            CycloNum::from_int(fixed as i64)
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    /// Value at an element given by index.
    pub fn at(&self, e: usize) -> &CycloNum {
        &self.values[self.group.class_of(e)]
    }

    /// Value at the identity.
    pub fn degree(&self) -> &CycloNum {
        &self.values[0]
    }

    pub fn degree_int(&self) -> Option<i128> {
        self.values[0].as_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    fn check(&self, other: &Self) -> Result<(), CharError> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(CharError::GroupMismatch)
        }
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&CycloNum, &CycloNum) -> CycloNum,
    ) -> Result<Self, CharError> {
        self.check(other)?;
        Ok(Self::new(
            &self.group,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        ))
    }

    fn map(&self, f: impl Fn(&CycloNum) -> CycloNum) -> Self {
        Self::new(&self.group, self.values.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CharError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CharError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, r: Rational) -> Self {
        self.map(|v| v.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.scale(-Rational::one())
    }

    /// Pointwise product (character of the tensor product).
    pub fn tensor(&self, other: &Self) -> Result<Self, CharError> {
        self.zip(other, |a, b| a * b)
    }

    /// Complex conjugate (character of the dual).
    pub fn dual(&self) -> Self {
        self.map(|v| v.conj())
    }

    /// Apply `zeta -> zeta^k` to every value, `k` coprime to all levels.
    pub fn galois(&self, k: i64) -> Self {
        self.map(|v| v.galois(k))
    }

    /// `g -> f(g^k)`.
    pub fn adams(&self, k: u64) -> Self {
        let pm = self.group.power_map(k);
        Self::new(
            &self.group,
            pm.iter().map(|&c| self.values[c].clone()).collect(),
        )
    }

    /// Symmetric square `(f(g)^2 + f(g^2)) / 2`.
    pub fn sym2(&self) -> Self {
        let sq = self.tensor(self).unwrap();
        let half = Rational::new(1, 2);
        sq.add(&self.adams(2)).unwrap().scale(half)
    }

    /// Exterior square `(f(g)^2 - f(g^2)) / 2`.
    pub fn alt2(&self) -> Self {
        let sq = self.tensor(self).unwrap();
        let half = Rational::new(1, 2);
        sq.sub(&self.adams(2)).unwrap().scale(half)
    }

    /// `(1/|G|) sum_g f(g) conj(h(g))`.
    pub fn inner(&self, other: &Self) -> Result<CycloNum, CharError> {
        self.check(other)?;
        let mut acc = CycloNum::zero();
        for (c, (a, b)) in self
            .group
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
        {
            let term = (a * &b.conj()).scale(Rational::from_integer(c.size() as i128));
            acc = &acc + &term;
        }
        Ok(acc.scale(Rational::new(1, self.group.order() as i128)))
    }

    /// The inner product, required to be rational.
    pub fn inner_rational(&self, other: &Self) -> Result<Rational, CharError> {
        self.inner(other)?
            .as_rational()
            .ok_or(CharError::NotRational)
    }

    pub fn norm(&self) -> Result<Rational, CharError> {
        self.inner_rational(self)
    }

    /// Restriction to a subgroup; `self` lives on the subgroup's parent.
    pub fn restrict(&self, h: &Subgroup) -> Result<Self, CharError> {
        if !h.same_parent(&self.group) {
            return Err(CharError::GroupMismatch);
        }
        let hg = h.group();
        Ok(Self::from_fn(hg, |i| self.at(h.to_parent(i)).clone()))
    }

    /// `Ind_H^G` of a class function on `H`:
    /// `(Ind f)(c) = |G| / (|H| |c|) * sum_{h in H ∩ c} f(h)`.
    pub fn induce(&self, h: &Subgroup) -> Result<Self, CharError> {
        if !Arc::ptr_eq(&self.group, h.group()) {
            return Err(CharError::GroupMismatch);
        }
        let g = h.parent();
        let hg = h.group();
        // multiplicity of (class of G, class of H) pairs over elements of H
        let mut counts = vec![vec![0usize; hg.num_classes()]; g.num_classes()];
        for i in 0..hg.order() {
            counts[g.class_of(h.to_parent(i))][hg.class_of(i)] += 1;
        }
        let values = g
            .classes()
            .iter()
            .zip(&counts)
            .map(|(c, row)| {
                let mut s = CycloNum::zero();
                for (k, &m) in row.iter().enumerate() {
                    if m > 0 {
                        s = &s + &self.values[k].scale(Rational::from_integer(m as i128));
                    }
                }
                s.scale(Rational::new(
                    g.order() as i128,
                    (hg.order() * c.size()) as i128,
                ))
            })
            .collect();
        Ok(Self::new(g, values))
    }

    /// Whether `f(g^-1) = conj(f(g))` on every class.
    pub fn inverse_symmetric(&self) -> bool {
        self.group
            .classes()
            .iter()
            .enumerate()
            .all(|(k, c)| *self.at(self.group.inv(c.rep)) == self.values[k].conj())
    }

    /// Characters have positive integral degree, integral positive norm, and
    /// values that are conjugate at inverse elements.
    pub fn looks_like_character(&self) -> bool {
        let deg_ok = self.degree_int().is_some_and(|d| d > 0);
        let norm_ok = self
            .norm()
            .is_ok_and(|n| n.is_integer() && n > Rational::zero());
        deg_ok && norm_ok && self.inverse_symmetric()
    }

    /// Render values as `[v0, v1, ...]` in class order.
    pub fn render(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", vals.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{catalog, Perm};

    #[test]
    fn permutation_character_of_s3() {
        let g = catalog::symmetric(3);
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let ind = ClassFunction::trivial(h.group()).induce(&h).unwrap();
        assert_eq!(ind, ClassFunction::permutation_character(&g));
        assert_eq!(
            ind.inner_rational(&ClassFunction::trivial(&g)).unwrap(),
            Rational::one()
        );
        assert_eq!(ind.norm().unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn induction_from_whole_group_is_identity() {
        let g = catalog::symmetric(4);
        let chi = ClassFunction::permutation_character(&g);
        assert_eq!(chi.induce(&Subgroup::whole(&g)).unwrap(), chi);
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let a = ClassFunction::trivial(&catalog::symmetric(3));
        let b = ClassFunction::trivial(&catalog::symmetric(3));
        assert_eq!(a.inner(&b).unwrap_err(), CharError::GroupMismatch);
    }
}
