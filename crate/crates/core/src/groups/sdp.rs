//! The semidirect product `C_l^n ⋊ G`, with `G` permuting coordinates as it
//! permutes the left cosets `G/H`.

use std::sync::Arc;

use super::group::{PermGroup, DEFAULT_ORDER_BOUND};
use super::perm::Perm;
use super::subgroup::{CosetAction, Subgroup};
use super::GroupError;
use crate::exactalg::numtheory::is_prime;

/// An element `(c, g)` with `c` in `(Z/l)^n` and `g` a parent index in `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SdpElement {
    pub c: Vec<u32>,
    pub g: usize,
}

/// `G~ = C_l^n ⋊ G` realized faithfully on `n*l + deg(G)` points: `(c, g)`
/// sends `(i, j)` to `(rho(g) i, j + c_{rho(g) i})` and acts as `g` on the
/// trailing block.
#[derive(Clone, Debug)]
pub struct Sdp {
    pub base: Arc<PermGroup>,
    pub h: Subgroup,
    pub cosets: CosetAction,
    pub l: u32,
    pub n: usize,
    pub big: Arc<PermGroup>,
    pub h_tilde: Subgroup,
}

impl Sdp {
    pub fn new(g: &Arc<PermGroup>, h: &Subgroup, l: u64) -> Result<Self, GroupError> {
        Self::with_bound(g, h, l, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(
        g: &Arc<PermGroup>,
        h: &Subgroup,
        l: u64,
        bound: usize,
    ) -> Result<Self, GroupError> {
        if l == 2 {
            return Err(GroupError::EvenOrEqualTwo(l));
        }
        if !is_prime(l) {
            return Err(GroupError::NotPrime(l));
        }
        let cosets = CosetAction::new(g, h)?;
        let n = cosets.len();
        let expected = (l as usize)
            .checked_pow(n as u32)
            .and_then(|x| x.checked_mul(g.order()));
        if expected.is_none_or(|e| e > bound) {
            return Err(GroupError::OrderBoundExceeded(bound));
        }
        let mut sdp = Sdp {
            base: g.clone(),
            h: h.clone(),
            cosets,
            l: l as u32,
            n,
            big: g.clone(),
            h_tilde: h.clone(),
        };
        let degree = sdp.degree();
        let mut gens: Vec<Perm> = g
            .gens()
            .iter()
            .map(|s| sdp.embed(g.index_of(s).unwrap()))
            .collect();
        gens.push(sdp.unit(0));
        sdp.big = PermGroup::closure_bounded(degree, gens, bound)?;
        let mut h_gens: Vec<Perm> = h.gen_indices().into_iter().map(|x| sdp.embed(x)).collect();
        h_gens.extend((0..n).map(|i| sdp.unit(i)));
        sdp.h_tilde = Subgroup::generated(&sdp.big, h_gens)?;
        assert_eq!(sdp.big.order(), expected.unwrap());
        Ok(sdp)
    }

    pub fn degree(&self) -> usize {
        self.n * self.l as usize + self.base.degree()
    }

    /// The permutation of `(c, g)`.
    pub fn to_perm(&self, e: &SdpElement) -> Perm {
        let l = self.l as usize;
        let off = self.n * l;
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.n {
            let k = self.cosets.act(e.g, i);
            for j in 0..l {
                images[i * l + j] = (k * l + (j + e.c[k] as usize) % l) as u32;
            }
        }
        for (x, &y) in self.base.element(e.g).images().iter().enumerate() {
            images[off + x] = off as u32 + y;
        }
        Perm::from_images(images).expect("semidirect action is a permutation")
    }

    /// Inverse of [`Sdp::to_perm`].
    pub fn decompose(&self, p: &Perm) -> SdpElement {
        let l = self.l as usize;
        let off = self.n * l;
        let deg = self.base.degree();
        let gi: Vec<u32> = (0..deg)
            .map(|x| p.apply((off + x) as u32) - off as u32)
            .collect();
        let g = self
            .base
            .index_of(&Perm::from_images(gi).expect("block permutation"))
            .expect("element of G");
        let mut c = vec![0u32; self.n];
        for i in 0..self.n {
            let y = p.apply((i * l) as u32) as usize;
            c[y / l] = (y % l) as u32;
        }
        SdpElement { c, g }
    }

    /// `(0; g)`.
    pub fn embed(&self, g: usize) -> Perm {
        self.to_perm(&SdpElement {
            c: vec![0; self.n],
            g,
        })
    }

    /// `(e_i; 1)`, the generator of the `i`-th coordinate.
    pub fn unit(&self, i: usize) -> Perm {
        let mut c = vec![0; self.n];
        c[i] = 1;
        self.to_perm(&SdpElement { c, g: 0 })
    }

    /// `(c, g)(c', g') = (c + g.c', gg')` with `(g.c')_{rho(g) i} = c'_i`.
    pub fn mul(&self, a: &SdpElement, b: &SdpElement) -> SdpElement {
        let mut c = a.c.clone();
        for i in 0..self.n {
            let k = self.cosets.act(a.g, i);
            c[k] = (c[k] + b.c[i]) % self.l;
        }
        SdpElement {
            c,
            g: self.base.mul(a.g, b.g),
        }
    }

    /// Index in `big` of `(c, g)`.
    pub fn index_of(&self, e: &SdpElement) -> usize {
        self.big.index_of(&self.to_perm(e)).expect("element of G~")
    }

    pub fn element(&self, idx: usize) -> SdpElement {
        self.decompose(self.big.element(idx))
    }
}

pub fn semidirect_product(g: &Arc<PermGroup>, h: &Subgroup, l: u64) -> Result<Sdp, GroupError> {
    Sdp::new(g, h, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog;

    #[test]
    fn orders_for_s3() {
        let g = catalog::symmetric(3);
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let s = semidirect_product(&g, &h, 3).unwrap();
        assert_eq!(s.big.order(), 162);
        assert_eq!(s.h_tilde.order(), 54);
        assert_eq!(
            semidirect_product(&g, &h, 2).unwrap_err(),
            GroupError::EvenOrEqualTwo(2)
        );
    }

    #[test]
    fn multiplication_matches_permutations() {
        let g = catalog::symmetric(3);
        let h = Subgroup::generated(&g, vec![Perm::parse("(0 1)", 3).unwrap()]).unwrap();
        let s = semidirect_product(&g, &h, 3).unwrap();
        for a in (0..s.big.order()).step_by(7) {
            for b in (0..s.big.order()).step_by(11) {
                let (ea, eb) = (s.element(a), s.element(b));
                assert_eq!(s.index_of(&s.mul(&ea, &eb)), s.big.mul(a, b));
            }
        }
    }

    #[test]
    fn n_equals_one_gives_direct_product() {
        let g = catalog::symmetric(3);
        let s = semidirect_product(&g, &Subgroup::whole(&g), 5).unwrap();
        assert_eq!(s.n, 1);
        assert_eq!(s.big.order(), 30);
        assert_eq!(s.h_tilde.order(), 30);
    }
}
