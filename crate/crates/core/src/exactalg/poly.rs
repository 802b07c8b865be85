//! Dense univariate polynomials over any [`Ring`] context.

use super::ring::{Domain, Field, Ring};

/// Dense polynomial, coefficients in ascending degree order.
///
/// Canonical form: the zero polynomial is the empty vector and the last
/// coefficient of a nonzero polynomial is nonzero. Only [`PolyRing`] builds
/// values, so the invariant holds for every `Poly` handed out.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The ring `R[var]`.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyRing {
            base,
            var: var.into(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The indeterminate.
    pub fn gen(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(p.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, p: &Poly<R::Elem>, at: &R::Elem) -> R::Elem {
        p.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, at), c)
        })
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// `p(q(x))`.
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        p.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            self.add(&self.mul(&acc, q), &self.constant(c.clone()))
        })
    }

    pub fn is_monic(&self, p: &Poly<R::Elem>) -> bool {
        p.lc().is_some_and(|c| self.base.is_one(c))
    }

    /// Apply a coefficient map into another polynomial ring.
    pub fn map_into<S: Ring>(
        &self,
        target: &PolyRing<S>,
        p: &Poly<R::Elem>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }

    fn render(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in a.coeffs.iter().enumerate().rev() {
            if self.base.is_zero(c) {
                continue;
            }
            let mut cs = self.base.render(c);
            let compound = cs.contains(['+', ' ']) || cs[1..].contains('-');
            if compound {
                cs = format!("({cs})");
            }
            let neg = !compound && cs.starts_with('-');
            let mag = if neg { cs[1..].to_string() } else { cs };
            let mono = match k {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, k),
            };
            let term = match (mag.as_str(), k) {
                (_, 0) => mag,
                ("1", _) => mono,
                _ => format!("{mag}*{mono}"),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

impl<R: Domain> PolyRing<R> {
    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every leading coefficient met along the way; `None` if one does not.
    pub fn long_division(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> Option<(Poly<R::Elem>, Poly<R::Elem>)> {
        let db = b.degree()?;
        let lb = b.lc()?.clone();
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Some((Poly::zero(), a.clone()));
        }
        let mut quot = vec![self.base.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if self.base.is_zero(&rem[i]) {
                continue;
            }
            let q = self.base.div_exact(&rem[i], &lb)?;
            for (j, bc) in b.coeffs.iter().enumerate() {
                let k = i - db + j;
                rem[k] = self.base.sub(&rem[k], &self.base.mul(&q, bc));
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        Some((self.from_coeffs(quot), self.from_coeffs(rem)))
    }
}

impl<R: Domain> Domain for PolyRing<R> {
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.long_division(a, b)?;
        r.is_zero().then_some(q)
    }
}

impl<R: Field> PolyRing<R> {
    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> (Poly<R::Elem>, Poly<R::Elem>) {
        assert!(!b.is_zero(), "polynomial division by zero");
        self.long_division(a, b)
            .expect("leading coefficient of a nonzero polynomial over a field is a unit")
    }

    pub fn rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        if a.len() < b.len() {
            return a.clone();
        }
        self.div_rem(a, b).1
    }

    pub fn monic(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        match p.lc() {
            None => Poly::zero(),
            Some(c) => {
                let inv = self.base.inv(c).expect("nonzero field element");
                self.scale(p, &inv)
            }
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `g = s*a + t*b` and `g` monic.
    pub fn ext_gcd(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> (Poly<R::Elem>, Poly<R::Elem>, Poly<R::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(c) => {
                let inv = self.base.inv(c).expect("nonzero field element");
                (
                    self.scale(&r0, &inv),
                    self.scale(&s0, &inv),
                    self.scale(&t0, &inv),
                )
            }
        }
    }

    pub fn mul_mod(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
        m: &Poly<R::Elem>,
    ) -> Poly<R::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<R::Elem>, mut exp: u64, m: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let mut base = self.rem(a, m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ring::{Integers, Rationals};
    use num_rational::Ratio;

    #[test]
    fn canonical_form_and_degree() {
        let zx = PolyRing::new(Integers, "x");
        let p = zx.from_coeffs(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(zx.from_coeffs(vec![0, 0]).degree(), None);
        let q = zx.from_coeffs(vec![-1, 0, 3]);
        assert_eq!(zx.mul(&p, &q).degree(), Some(3));
        assert_eq!(zx.render(&q), "3*x^2 - 1");
    }

    #[test]
    fn exact_division_over_integers() {
        let zx = PolyRing::new(Integers, "x");
        let a = zx.from_coeffs(vec![-1, 0, 1]);
        let b = zx.from_coeffs(vec![1, 1]);
        assert_eq!(zx.div_exact(&a, &b), Some(zx.from_coeffs(vec![-1, 1])));
        assert_eq!(zx.div_exact(&a, &zx.from_coeffs(vec![1, 2])), None);
    }

    #[test]
    fn gcd_over_rationals() {
        let qx = PolyRing::new(Rationals, "x");
        let r = |n: i128| Ratio::from_integer(n);
        // (x-1)(x+2) and (x-1)(x-3)
        let a = qx.from_coeffs(vec![r(-2), r(1), r(1)]);
        let b = qx.from_coeffs(vec![r(3), r(-4), r(1)]);
        assert_eq!(qx.gcd(&a, &b), qx.from_coeffs(vec![r(-1), r(1)]));
        let (g, s, t) = qx.ext_gcd(&a, &b);
        assert_eq!(qx.add(&qx.mul(&s, &a), &qx.mul(&t, &b)), g);
    }

    #[test]
    fn compose_and_derivative() {
        let zx = PolyRing::new(Integers, "x");
        let p = zx.from_coeffs(vec![1, 0, 1]);
        let q = zx.from_coeffs(vec![1, 1]);
        assert_eq!(zx.compose(&p, &q), zx.from_coeffs(vec![2, 2, 1]));
        assert_eq!(zx.derivative(&p), zx.from_coeffs(vec![0, 2]));
        assert_eq!(zx.eval(&p, &3), 10);
    }
}
