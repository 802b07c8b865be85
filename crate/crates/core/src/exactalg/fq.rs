//! Finite fields `F_{p^m}` in a polynomial basis, and extensions of them.

use std::fmt;
use std::sync::Arc;

use super::factor::is_irreducible;
use super::numtheory::{is_prime, prime_factors};
use super::poly::{Poly, PolyRing};
use super::ring::{Domain, Field, FiniteField, Ring};
use super::ExactError;

/// Fields up to this size get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 20;
const CONWAY_LIMIT: u64 = 1 << 16;

/// An element of an [`FqField`]: the base-`p` encoding `sum c_i p^i` of its
/// coefficient vector in the basis `1, w, ..., w^(m-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(pub u32);

impl FqElem {
    pub fn index(self) -> u64 {
        self.0 as u64
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FqData {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus over `F_p`, ascending, length `m + 1`.
    modulus: Vec<u64>,
    generator: FqElem,
    tables: Option<Tables>,
}

/// The field `F_p[w]/(modulus)`. Cloning is cheap.
#[derive(Clone)]
pub struct FqField(Arc<FqData>);

impl fmt::Debug for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}[w]/({:?})", self.0.p, self.0.modulus)
        }
    }
}

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FqField {}

impl FqField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(ExactError::NotPrime(p));
        }
        Ok(Self::build(p, vec![0, 1]))
    }

    /// `F_p[w]/(modulus)` for a monic modulus given in ascending coefficients.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self, ExactError> {
        let fp = Self::prime(p)?;
        let m = modulus.len().saturating_sub(1);
        if m == 0 || modulus[m] % p != 1 {
            return Err(ExactError::ReducibleModulus);
        }
        let modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if m == 1 {
            return Ok(fp);
        }
        check_size(p, m as u32)?;
        let ring = PolyRing::new(fp.clone(), "w");
        let poly = ring.from_coeffs(modulus.iter().map(|&c| FqElem(c as u32)).collect());
        if !is_irreducible(&ring, &poly) {
            return Err(ExactError::ReducibleModulus);
        }
        Ok(Self::build(p, modulus))
    }

    /// `F_{p^m}` with the Conway polynomial as modulus for `q <= 2^16`, and
    /// the first monic irreducible in index order beyond.
    pub fn with_default_modulus(p: u64, m: u32) -> Result<Self, ExactError> {
        let fp = Self::prime(p)?;
        if m == 1 {
            return Ok(fp);
        }
        if m == 0 {
            return Err(ExactError::ReducibleModulus);
        }
        check_size(p, m)?;
        let ring = PolyRing::new(fp.clone(), "w");
        let modulus = if p.pow(m) <= CONWAY_LIMIT {
            conway_modulus(&ring, m as usize)
        } else {
            super::factor::first_irreducible(&ring, m as usize)
        };
        let coeffs = modulus.coeffs().iter().map(|c| c.index()).collect();
        Ok(Self::build(p, coeffs))
    }

    /// `F_q` for a prime power `q`, default modulus.
    pub fn of_order(q: u64) -> Result<Self, ExactError> {
        let (p, m) = super::numtheory::prime_power(q).ok_or(ExactError::NotPrimePower(q))?;
        Self::with_default_modulus(p, m)
    }

    fn build(p: u64, modulus: Vec<u64>) -> Self {
        let m = (modulus.len() - 1) as u32;
        let q = p.pow(m);
        let mut data = FqData {
            p,
            m,
            q,
            modulus,
            generator: FqElem(1),
            tables: None,
        };
        data.generator = find_generator(&data);
        if m > 1 && q <= TABLE_LIMIT {
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u32; q as usize];
            let mut cur = FqElem(1);
            for i in 0..(q - 1) {
                exp.push(cur.0);
                log[cur.0 as usize] = i as u32;
                cur = slow_mul(&data, cur, data.generator);
            }
            data.tables = Some(Tables { exp, log });
        }
        FqField(Arc::new(data))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The distinguished generator of the multiplicative group: `w` when it
    /// has order `q - 1`, else the smallest such index.
    pub fn generator(&self) -> FqElem {
        self.0.generator
    }

    /// Element with the given coefficient vector in the basis `1, w, ...`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FqElem {
        let mut k = 0u64;
        for &c in coeffs.iter().rev() {
            k = k * self.0.p + (c % self.0.p);
        }
        FqElem(k as u32)
    }

    pub fn coeffs_of(&self, a: FqElem) -> Vec<u64> {
        digits(&self.0, a)
    }

    /// Discrete logarithm to the base [`FqField::generator`].
    pub fn log(&self, a: FqElem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(t.log[a.0 as usize] as u64);
        }
        let mut cur = FqElem(1);
        for i in 0..self.0.q - 1 {
            if cur == a {
                return Some(i);
            }
            cur = self.mul(&cur, &self.0.generator);
        }
        None
    }

    /// `generator^k`.
    pub fn gen_pow(&self, k: u64) -> FqElem {
        self.pow(&self.0.generator, k % (self.0.q - 1))
    }

    /// Bind an element to this field for checked arithmetic.
    pub fn value(&self, a: FqElem) -> FqValue {
        FqValue {
            field: self.clone(),
            elem: a,
        }
    }
}

fn check_size(p: u64, m: u32) -> Result<(), ExactError> {
    match super::numtheory::checked_pow(p, m) {
        Some(q) if q <= u32::MAX as u64 => Ok(()),
        _ => Err(ExactError::FieldTooLarge),
    }
}

fn digits(d: &FqData, a: FqElem) -> Vec<u64> {
    let mut k = a.0 as u64;
    (0..d.m)
        .map(|_| {
            let c = k % d.p;
            k /= d.p;
            c
        })
        .collect()
}

fn encode(d: &FqData, coeffs: &[u64]) -> FqElem {
    let mut k = 0u64;
    for &c in coeffs.iter().rev() {
        k = k * d.p + c;
    }
    FqElem(k as u32)
}

fn slow_mul(d: &FqData, a: FqElem, b: FqElem) -> FqElem {
    if d.m == 1 {
        return FqElem((a.0 as u64 * b.0 as u64 % d.p) as u32);
    }
    let (x, y) = (digits(d, a), digits(d, b));
    let m = d.m as usize;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, xi) in x.iter().enumerate() {
        if *xi == 0 {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi * yj) % d.p;
        }
    }
    for i in (m..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        // x^i = x^(i-m) * x^m and x^m = -(lower terms of the modulus)
        for j in 0..m {
            let sub = c * d.modulus[j] % d.p;
            prod[i - m + j] = (prod[i - m + j] + d.p - sub) % d.p;
        }
        prod[i] = 0;
    }
    encode(d, &prod[..m])
}

fn slow_pow(d: &FqData, a: FqElem, mut e: u64) -> FqElem {
    let mut acc = FqElem(1);
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(d, acc, base);
        }
        base = slow_mul(d, base, base);
        e >>= 1;
    }
    acc
}

/// `w` when the modulus is primitive, else the least primitive element.
fn find_generator(d: &FqData) -> FqElem {
    if d.q == 2 {
        return FqElem(1);
    }
    let order = d.q - 1;
    let primes = prime_factors(order);
    let primitive = |g: FqElem| {
        primes
            .iter()
            .all(|&r| slow_pow(d, g, order / r) != FqElem(1))
    };
    let w = FqElem(d.p as u32);
    if d.m > 1 && primitive(w) {
        return w;
    }
    (2..d.q)
        .map(|k| FqElem(k as u32))
        .find(|&g| primitive(g))
        .expect("multiplicative group of a finite field is cyclic")
}

/// The Conway polynomial of degree `m` over `F_p`: the least primitive
/// polynomial `x^m - a_1 x^(m-1) + ... + (-1)^m a_m` in lexicographic order
/// of `(a_1, ..., a_m)` whose roots are compatible with those of the Conway
/// polynomials of every proper subfield.
pub fn conway_modulus(ring: &PolyRing<FqField>, m: usize) -> Poly<FqElem> {
    let fp = ring.base();
    let p = fp.p();
    let q = p.pow(m as u32);
    let order = q - 1;
    let primes = prime_factors(order);
    let sub: Vec<(u64, Poly<FqElem>)> = (1..m)
        .filter(|d| m % d == 0)
        .map(|d| (order / (p.pow(d as u32) - 1), conway_modulus(ring, d)))
        .collect();
    let w = ring.gen();
    let one = ring.one();
    let total = p.pow(m as u32);
    (0..total)
        .map(|i| {
            let mut coeffs = vec![fp.zero(); m + 1];
            coeffs[m] = fp.one();
            let mut k = i;
            for j in (1..=m).rev() {
                let a = k % p;
                k /= p;
                let c = if j % 2 == 0 { a } else { (p - a) % p };
                coeffs[m - j] = FqElem(c as u32);
            }
            ring.from_coeffs(coeffs)
        })
        .filter(|f| f.coeffs()[0] != FqElem(0))
        .find(|f| {
            primes
                .iter()
                .all(|&r| ring.pow_mod(&w, order / r, f) != one)
                && ring.pow_mod(&w, order, f) == one
                && sub.iter().all(|(e, c)| {
                    let h = ring.pow_mod(&w, *e, f);
                    ring.rem(&ring.compose(c, &h), f).is_zero()
                })
        })
        .expect("Conway polynomials exist in every degree")
}

impl Ring for FqField {
    type Elem = FqElem;

    fn zero(&self) -> FqElem {
        FqElem(0)
    }

    fn one(&self) -> FqElem {
        FqElem(1)
    }

    fn is_zero(&self, a: &FqElem) -> bool {
        a.0 == 0
    }

    fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let d = &*self.0;
        if d.m == 1 {
            return FqElem(((a.0 as u64 + b.0 as u64) % d.p) as u32);
        }
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..d.m {
            out += ((x % d.p + y % d.p) % d.p) * place;
            x /= d.p;
            y /= d.p;
            place *= d.p;
        }
        FqElem(out as u32)
    }

    fn neg(&self, a: &FqElem) -> FqElem {
        let d = &*self.0;
        if d.m == 1 {
            return FqElem(((d.p - a.0 as u64) % d.p) as u32);
        }
        let mut x = a.0 as u64;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..d.m {
            out += ((d.p - x % d.p) % d.p) * place;
            x /= d.p;
            place *= d.p;
        }
        FqElem(out as u32)
    }

    fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let d = &*self.0;
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        match &d.tables {
            Some(t) => {
                let s = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % (d.q - 1);
                FqElem(t.exp[s as usize])
            }
            None => slow_mul(d, *a, *b),
        }
    }

    fn from_i64(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.0.p as i64) as u32)
    }

    fn render(&self, a: &FqElem) -> String {
        if (a.0 as u64) < self.0.p {
            return a.0.to_string();
        }
        match self.log(*a) {
            Some(1) => "a".to_string(),
            Some(k) => format!("a^{k}"),
            None => unreachable!("nonzero element has a logarithm"),
        }
    }

    fn pow(&self, a: &FqElem, e: u64) -> FqElem {
        if let Some(t) = &self.0.tables {
            if a.0 == 0 {
                return if e == 0 { FqElem(1) } else { FqElem(0) };
            }
            let s = (t.log[a.0 as usize] as u128 * e as u128) % (self.0.q - 1) as u128;
            return FqElem(t.exp[s as usize]);
        }
        slow_pow(&self.0, *a, e)
    }
}

impl Domain for FqField {
    fn div_exact(&self, a: &FqElem, b: &FqElem) -> Option<FqElem> {
        self.div(a, b)
    }
}

impl Field for FqField {
    fn inv(&self, a: &FqElem) -> Option<FqElem> {
        if a.0 == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as u64;
            return Some(FqElem(
                t.exp[((self.0.q - 1 - l) % (self.0.q - 1)) as usize],
            ));
        }
        Some(slow_pow(&self.0, *a, self.0.q - 2))
    }
}

impl FiniteField for FqField {
    fn order(&self) -> u64 {
        self.0.q
    }

    fn characteristic(&self) -> u64 {
        self.0.p
    }

    fn elem_at(&self, index: u64) -> FqElem {
        FqElem(index as u32)
    }

    fn index_of(&self, a: &FqElem) -> u64 {
        a.0 as u64
    }
}

/// An element bound to its field, for arithmetic that checks field agreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqValue {
    pub field: FqField,
    pub elem: FqElem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FqOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// Field arithmetic on bound values. `b` is read only by the binary ops.
pub fn fq_arith(a: &FqValue, b: &FqValue, op: FqOp) -> Result<FqValue, ExactError> {
    let f = &a.field;
    let elem = match op {
        FqOp::Add | FqOp::Mul => {
            if a.field != b.field {
                return Err(ExactError::MixedFields);
            }
            if op == FqOp::Add {
                f.add(&a.elem, &b.elem)
            } else {
                f.mul(&a.elem, &b.elem)
            }
        }
        FqOp::Inv => f.inv(&a.elem).ok_or(ExactError::DivisionByZero)?,
        FqOp::Pow(e) => f.pow(&a.elem, e),
    };
    Ok(f.value(elem))
}

/// The extension `F[z]/(modulus)` of a finite field `F`.
#[derive(Clone, Debug)]
pub struct ExtField<F: FiniteField> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
    degree: usize,
    order: u64,
}

impl<F: FiniteField> ExtField<F> {
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self, ExactError> {
        let ring = PolyRing::new(base, "z");
        if !ring.is_monic(&modulus) || !is_irreducible(&ring, &modulus) {
            return Err(ExactError::ReducibleModulus);
        }
        Ok(Self::new_unchecked(ring.base().clone(), modulus))
    }

    /// Caller guarantees `modulus` is monic irreducible.
    pub fn new_unchecked(base: F, modulus: Poly<F::Elem>) -> Self {
        let degree = modulus.degree().expect("nonzero modulus");
        let order = base.order().pow(degree as u32);
        ExtField {
            ring: PolyRing::new(base, "z"),
            modulus,
            degree,
            order,
        }
    }

    /// Degree-`d` extension with the first irreducible modulus.
    pub fn of_degree(base: F, d: usize) -> Self {
        let ring = PolyRing::new(base.clone(), "z");
        let modulus = super::factor::first_irreducible(&ring, d);
        Self::new_unchecked(base, modulus)
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    /// Image of a polynomial over the base field (reduction mod the modulus).
    pub fn reduce(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.rem(p, &self.modulus)
    }

    pub fn embed(&self, c: &F::Elem) -> Poly<F::Elem> {
        self.ring.constant(c.clone())
    }
}

impl<F: FiniteField> Ring for ExtField<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.ring.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.mul_mod(a, b, &self.modulus)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.ring.from_i64(n)
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.ring.render(a)
    }
}

impl<F: FiniteField> Domain for ExtField<F> {
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.div(a, b)
    }
}

impl<F: FiniteField> Field for ExtField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = self.ring.ext_gcd(a, &self.modulus);
        debug_assert!(self.ring.is_one(&g));
        Some(self.ring.rem(&s, &self.modulus))
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn order(&self) -> u64 {
        self.order
    }

    fn characteristic(&self) -> u64 {
        self.ring.base().characteristic()
    }

    fn elem_at(&self, mut index: u64) -> Self::Elem {
        let base = self.ring.base();
        let b = base.order();
        let coeffs = (0..self.degree)
            .map(|_| {
                let c = base.elem_at(index % b);
                index /= b;
                c
            })
            .collect();
        self.ring.from_coeffs(coeffs)
    }

    fn index_of(&self, a: &Self::Elem) -> u64 {
        let base = self.ring.base();
        let b = base.order();
        a.coeffs()
            .iter()
            .rev()
            .fold(0, |acc, c| acc * b + base.index_of(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_conway() {
        for (q, expected) in [
            (4, vec![1, 1, 1]),
            (8, vec![1, 1, 0, 1]),
            (9, vec![2, 2, 1]),
            (16, vec![1, 1, 0, 0, 1]),
            (25, vec![2, 4, 1]),
            (27, vec![1, 2, 0, 1]),
            (49, vec![3, 6, 1]),
            (64, vec![1, 1, 0, 1, 1, 0, 1]),
            (81, vec![2, 0, 0, 2, 1]),
            (121, vec![2, 7, 1]),
        ] {
            let f = FqField::of_order(q).unwrap();
            assert_eq!(f.modulus(), &expected[..], "q = {q}");
            assert_eq!(f.generator(), FqElem(f.p() as u32), "q = {q}");
        }
    }

    #[test]
    fn prime_field_examples() {
        let f7 = FqField::prime(7).unwrap();
        assert_eq!(f7.mul(&FqElem(3), &FqElem(5)), FqElem(1));
        assert_eq!(f7.inv(&FqElem(2)), Some(FqElem(4)));
        assert_eq!(f7.generator(), FqElem(3));
    }

    #[test]
    fn f49_square_of_w() {
        // w^2 + 6w + 3: w*w = -6w - 3 = w + 4
        let f = FqField::new(7, vec![3, 6, 1]).unwrap();
        let w = f.from_coeffs(&[0, 1]);
        assert_eq!(f.coeffs_of(f.mul(&w, &w)), vec![4, 1]);
    }

    #[test]
    fn rejects_reducible_modulus_and_composite() {
        // w^2 - 1 = (w-1)(w+1)
        assert_eq!(
            FqField::new(7, vec![6, 0, 1]),
            Err(ExactError::ReducibleModulus)
        );
        assert_eq!(FqField::prime(9), Err(ExactError::NotPrime(9)));
    }

    #[test]
    fn checked_values() {
        let f7 = FqField::prime(7).unwrap();
        let f11 = FqField::prime(11).unwrap();
        let a = f7.value(FqElem(3));
        let b = f11.value(FqElem(3));
        assert_eq!(fq_arith(&a, &b, FqOp::Add), Err(ExactError::MixedFields));
        let zero = f7.value(FqElem(0));
        assert_eq!(
            fq_arith(&zero, &zero, FqOp::Inv),
            Err(ExactError::DivisionByZero)
        );
        assert_eq!(fq_arith(&a, &a, FqOp::Pow(6)).unwrap().elem, FqElem(1));
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = FqField::with_default_modulus(3, 4).unwrap();
        for a in 0..f.q() {
            for b in [1u64, 2, 5, 17, 80] {
                let (x, y) = (FqElem(a as u32), FqElem(b as u32));
                assert_eq!(f.mul(&x, &y), slow_mul(&f.0, x, y));
            }
        }
    }

    #[test]
    fn field_axioms_small_fields() {
        for q in [4u64, 8, 9, 25, 49] {
            let f = FqField::of_order(q).unwrap();
            for a in f.elements() {
                if a.0 != 0 {
                    assert_eq!(f.pow(&a, q - 1), f.one());
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
                }
                assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
            }
        }
    }

    #[test]
    fn tower_extension() {
        let f7 = FqField::prime(7).unwrap();
        let e = ExtField::of_degree(f7, 3);
        assert_eq!(e.order(), 343);
        let x = e.elem_at(8);
        assert_eq!(e.index_of(&x), 8);
        assert_eq!(e.pow(&x, 342), e.one());
        assert_eq!(e.mul(&x, &e.inv(&x).unwrap()), e.one());
    }
}
