//! Curves over `F_q`: counting, the group law and the group structure.

use std::fmt;

use super::{EllipticError, ENUMERATION_BOUND};
use crate::exactalg::numtheory::{lcm, prime_factors};
use crate::exactalg::{ExtField, Field, FiniteField, FqElem, FqField, Ring};
use crate::ffext::{zeta_from_curve, FfError, ZetaData};

/// `Z/d1 + Z/d2` with `d1 | d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbelianGroupShape {
    pub d1: u64,
    pub d2: u64,
}

impl AbelianGroupShape {
    pub fn order(&self) -> u64 {
        self.d1 * self.d2
    }

    pub fn is_cyclic(&self) -> bool {
        self.d1 == 1
    }
}

impl fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.d1, self.d2) {
            (_, 1) => write!(f, "0"),
            (1, d) => write!(f, "Z/{d}"),
            (a, b) => write!(f, "Z/{b} + Z/{a}"),
        }
    }
}

/// A point of `E(F_q)`; `None` is the point at infinity.
pub type Point = Option<(FqElem, FqElem)>;

/// `y^2 = x^3 + ax + b` over `F_q`, `p > 3`, nonsingular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    field: FqField,
    a: FqElem,
    b: FqElem,
}

/// `#{(x, y) : y^2 = x^3 + ax + b}` over a finite field.
fn affine_count<F: FiniteField>(f: &F, a: &F::Elem, b: &F::Elem) -> u64 {
    let mut n = 0i64;
    for x in f.elements() {
        let v = f.add(&f.mul(&f.add(&f.mul(&x, &x), a), &x), b);
        n += 1 + f.quadratic_character(&v) as i64;
    }
    n as u64
}

impl WeierstrassCurve {
    pub fn new(field: &FqField, a: FqElem, b: FqElem) -> Result<Self, EllipticError> {
        if field.p() <= 3 {
            return Err(EllipticError::SmallCharacteristic(field.p()));
        }
        let c = WeierstrassCurve {
            field: field.clone(),
            a,
            b,
        };
        if field.is_zero(&c.disc_factor()) {
            return Err(EllipticError::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_i64(field: &FqField, a: i64, b: i64) -> Result<Self, EllipticError> {
        Self::new(field, field.from_i64(a), field.from_i64(b))
    }

    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn a(&self) -> FqElem {
        self.a
    }

    pub fn b(&self) -> FqElem {
        self.b
    }

    /// `4a^3 + 27b^2`.
    fn disc_factor(&self) -> FqElem {
        let f = &self.field;
        let a3 = f.pow(&self.a, 3);
        f.add(
            &f.mul(&f.from_i64(4), &a3),
            &f.mul(&f.from_i64(27), &f.mul(&self.b, &self.b)),
        )
    }

    /// `1728 * 4a^3 / (4a^3 + 27b^2)`.
    pub fn j_invariant(&self) -> FqElem {
        let f = &self.field;
        let num = f.mul(&f.from_i64(1728 * 4), &f.pow(&self.a, 3));
        f.div(&num, &self.disc_factor()).expect("nonsingular")
    }

    /// The curve `(u^4 a, u^6 b)`, isomorphic over `F_q`.
    pub fn twist_by(&self, u: &FqElem) -> Result<Self, EllipticError> {
        let f = &self.field;
        Self::new(
            f,
            f.mul(&f.pow(u, 4), &self.a),
            f.mul(&f.pow(u, 6), &self.b),
        )
    }

    pub fn rhs(&self, x: &FqElem) -> FqElem {
        let f = &self.field;
        f.add(&f.mul(&f.add(&f.mul(x, x), &self.a), x), &self.b)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            None => true,
            Some((x, y)) => self.field.mul(y, y) == self.rhs(x),
        }
    }

    fn count_raw(&self, i: u32) -> Result<u64, EllipticError> {
        let q = self.field.q();
        let size = q
            .checked_pow(i)
            .filter(|&s| s <= ENUMERATION_BOUND)
            .ok_or(EllipticError::EnumerationBoundExceeded(q.saturating_pow(i)))?;
        let n = if i == 1 {
            affine_count(&self.field, &self.a, &self.b)
        } else {
            let ext = ExtField::of_degree(self.field.clone(), i as usize);
            affine_count(&ext, &ext.embed(&self.a), &ext.embed(&self.b))
        };
        let n = n + 1;
        let t = n as i128 - size as i128 - 1;
        if t * t > 4 * size as i128 {
            return Err(EllipticError::WeilViolation(format!(
                "|N_{i} - q^{i} - 1| = {}",
                t.abs()
            )));
        }
        Ok(n)
    }

    /// `#E(F_{q^i})` by enumeration. For `i >= 2` the count must match the
    /// value determined by `N_1` through the Frobenius eigenvalues.
    pub fn point_count(&self, i: u32) -> Result<u64, EllipticError> {
        let n = self.count_raw(i)?;
        if i >= 2 {
            let predicted = self.weil_prediction(self.count_raw(1)?, i);
            if predicted != n as i128 {
                return Err(EllipticError::WeilViolation(format!(
                    "N_{i} = {n}, predicted {predicted}"
                )));
            }
        }
        Ok(n)
    }

    /// `N_i = q^i + 1 - (alpha^i + beta^i)` with `alpha + beta = q + 1 - N_1`.
    pub fn weil_prediction(&self, n1: u64, i: u32) -> i128 {
        let q = self.field.q() as i128;
        let a1 = q + 1 - n1 as i128;
        let (mut s_prev, mut s) = (2i128, a1);
        for _ in 1..i {
            let next = a1 * s - q * s_prev;
            s_prev = s;
            s = next;
        }
        q.pow(i) + 1 - s
    }

    pub fn zeta(&self, bound: usize) -> Result<ZetaData, FfError> {
        let n1 = self
            .point_count(1)
            .map_err(|e| FfError::FunctionalEquationViolated(e.to_string()))?;
        zeta_from_curve(&[n1], self.field.q(), 1, bound)
    }

    pub fn points(&self) -> Result<Vec<Point>, EllipticError> {
        let f = &self.field;
        if f.q() > ENUMERATION_BOUND {
            return Err(EllipticError::EnumerationBoundExceeded(f.q()));
        }
        let mut squares: Vec<Vec<FqElem>> = vec![Vec::new(); f.q() as usize];
        for y in f.elements() {
            squares[f.index_of(&f.mul(&y, &y)) as usize].push(y);
        }
        let mut out = vec![None];
        for x in f.elements() {
            for y in &squares[f.index_of(&self.rhs(&x)) as usize] {
                out.push(Some((x, *y)));
            }
        }
        Ok(out)
    }

    pub fn neg(&self, p: &Point) -> Point {
        p.map(|(x, y)| (x, self.field.neg(&y)))
    }

    pub fn add(&self, p: &Point, r: &Point) -> Point {
        let f = &self.field;
        let ((x1, y1), (x2, y2)) = match (p, r) {
            (None, _) => return *r,
            (_, None) => return *p,
            (Some(a), Some(b)) => (*a, *b),
        };
        let lambda = if x1 == x2 {
            if f.is_zero(&f.add(&y1, &y2)) {
                return None;
            }
            let num = f.add(&f.mul(&f.from_i64(3), &f.mul(&x1, &x1)), &self.a);
            f.div(&num, &f.add(&y1, &y1)).expect("nonzero")
        } else {
            f.div(&f.sub(&y2, &y1), &f.sub(&x2, &x1)).expect("nonzero")
        };
        let x3 = f.sub(&f.sub(&f.mul(&lambda, &lambda), &x1), &x2);
        let y3 = f.sub(&f.mul(&lambda, &f.sub(&x1, &x3)), &y1);
        Some((x3, y3))
    }

    pub fn mul(&self, p: &Point, mut k: u64) -> Point {
        let mut acc = None;
        let mut base = *p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Order of `p` in a group of order `n`.
    pub fn point_order(&self, p: &Point, n: u64) -> u64 {
        let mut o = n;
        for r in prime_factors(n) {
            while o % r == 0 && self.mul(p, o / r).is_none() {
                o /= r;
            }
        }
        o
    }

    /// Invariant factors of `E(F_q)` from the exponent of the group.
    pub fn group_structure(&self) -> Result<AbelianGroupShape, EllipticError> {
        let pts = self.points()?;
        let n = pts.len() as u64;
        let count = self.point_count(1)?;
        if count != n {
            return Err(EllipticError::InvariantViolation(format!(
                "{n} points listed, {count} counted"
            )));
        }
        let mut exponent = 1;
        for p in &pts {
            exponent = lcm(exponent, self.point_order(p, n));
            if exponent == n {
                break;
            }
        }
        let shape = AbelianGroupShape {
            d1: n / exponent,
            d2: exponent,
        };
        if shape.d2 % shape.d1 != 0 || (self.field.q() - 1) % shape.d1 != 0 {
            return Err(EllipticError::InvariantViolation(format!(
                "invariant factors {} and {} with q = {}",
                shape.d1,
                shape.d2,
                self.field.q()
            )));
        }
        Ok(shape)
    }

    pub fn render(&self) -> String {
        let f = &self.field;
        format!(
            "E/F_{}: a={}, b={}",
            f.q(),
            f.render(&self.a),
            f.render(&self.b)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> FqField {
        FqField::prime(7).unwrap()
    }

    #[test]
    fn counts_over_f7() {
        let f = f7();
        assert_eq!(
            WeierstrassCurve::from_i64(&f, 0, 1).unwrap().point_count(1),
            Ok(12)
        );
        assert_eq!(
            WeierstrassCurve::from_i64(&f, 3, 1).unwrap().point_count(1),
            Ok(12)
        );
        assert_eq!(
            WeierstrassCurve::from_i64(&f, 1, 0).unwrap().point_count(1),
            Ok(8)
        );
        assert_eq!(
            WeierstrassCurve::from_i64(&f, 3, 0).unwrap().point_count(1),
            Ok(8)
        );
        for i in 2..=4 {
            let e = WeierstrassCurve::from_i64(&f, 0, 1).unwrap();
            assert_eq!(e.point_count(i).unwrap() as i128, e.weil_prediction(12, i));
        }
    }

    #[test]
    fn zeta_numerators() {
        let f = f7();
        for (a, b) in [(0, 1), (3, 1)] {
            let z = WeierstrassCurve::from_i64(&f, a, b)
                .unwrap()
                .zeta(4)
                .unwrap();
            assert_eq!(z.render_numerator(), "7*T^2 + 4*T + 1");
            assert!(z.euler_product_agrees());
        }
    }

    #[test]
    fn j_invariants() {
        let f = f7();
        let j = |a, b| f.render(&WeierstrassCurve::from_i64(&f, a, b).unwrap().j_invariant());
        assert_eq!(j(0, 1), "0");
        assert_eq!(j(3, 1), "2");
        assert_eq!(j(1, 0), "6");
    }

    #[test]
    fn j_is_isomorphism_invariant() {
        let f = f7();
        for a in 0..7 {
            for b in 0..7 {
                let Ok(e) = WeierstrassCurve::from_i64(&f, a, b) else {
                    continue;
                };
                for u in f.elements().filter(|u| !f.is_zero(u)) {
                    assert_eq!(e.twist_by(&u).unwrap().j_invariant(), e.j_invariant());
                }
            }
        }
    }

    #[test]
    fn group_structures() {
        let f = f7();
        let g = |a, b| {
            WeierstrassCurve::from_i64(&f, a, b)
                .unwrap()
                .group_structure()
                .unwrap()
        };
        assert_eq!(g(1, 0), AbelianGroupShape { d1: 1, d2: 8 });
        assert_eq!(g(3, 0), AbelianGroupShape { d1: 2, d2: 4 });
        assert_eq!(g(3, 0).to_string(), "Z/4 + Z/2");
        let f11 = FqField::prime(11).unwrap();
        for (a, b) in [(0, 10), (0, 1)] {
            let s = WeierstrassCurve::from_i64(&f11, a, b)
                .unwrap()
                .group_structure()
                .unwrap();
            assert_eq!(s, AbelianGroupShape { d1: 1, d2: 12 });
        }
    }

    #[test]
    fn group_law_is_closed_and_associative() {
        let f = FqField::prime(13).unwrap();
        let e = WeierstrassCurve::from_i64(&f, 2, 5).unwrap();
        let pts = e.points().unwrap();
        for p in pts.iter().take(6) {
            assert!(e.add(p, &e.neg(p)).is_none());
            for r in pts.iter().take(6) {
                assert!(e.contains(&e.add(p, r)));
                for s in pts.iter().take(4) {
                    assert_eq!(e.add(&e.add(p, r), s), e.add(p, &e.add(r, s)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let f = f7();
        assert_eq!(
            WeierstrassCurve::from_i64(&f, 0, 0),
            Err(EllipticError::SingularCurve)
        );
        let f3 = FqField::prime(3).unwrap();
        assert_eq!(
            WeierstrassCurve::from_i64(&f3, 1, 1),
            Err(EllipticError::SmallCharacteristic(3))
        );
    }
}
