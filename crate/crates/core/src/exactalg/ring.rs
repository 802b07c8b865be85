//! Ring contexts.
//!
//! Elements do not carry their ring: a ring value (`FqField`, `PolyRing<R>`,
//! ...) is a context that performs arithmetic on plain element values. This
//! lets polynomial rings nest (`F_q[t][y]`) without every coefficient holding
//! a pointer to its field.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Integral domains with exact division.
pub trait Domain: Ring {
    /// `Some(q)` with `a = q * b` when `b` divides `a`, otherwise `None`.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Whether `a` is invertible.
    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.div_exact(&self.one(), a).is_some()
    }
}

pub trait Field: Domain {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field whose elements can be enumerated by index `0..order()`.
/// Index 0 is zero and index 1 is one.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;
    fn elem_at(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;

    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.elem_at(i)))
    }

    /// The unique `p`-th root, `a^(q/p)`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.order() / self.characteristic())
    }

    /// Quadratic character: 0, 1 or -1. Characteristic 2 maps every unit to 1.
    fn quadratic_character(&self, a: &Self::Elem) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        if self.characteristic() == 2 {
            return 1;
        }
        if self.is_one(&self.pow(a, (self.order() - 1) / 2)) {
            1
        } else {
            -1
        }
    }
}

/// The integers, backed by `i128`. Overflow panics.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = i128;
    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn add(&self, a: &i128, b: &i128) -> i128 {
        a.checked_add(*b).expect("integer overflow")
    }
    fn neg(&self, a: &i128) -> i128 {
        -a
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        a.checked_mul(*b).expect("integer overflow")
    }
    fn from_i64(&self, n: i64) -> i128 {
        n as i128
    }
    fn render(&self, a: &i128) -> String {
        a.to_string()
    }
}

impl Domain for Integers {
    fn div_exact(&self, a: &i128, b: &i128) -> Option<i128> {
        if *b == 0 || a % b != 0 {
            None
        } else {
            Some(a / b)
        }
    }
}

pub type Rational = Ratio<i128>;

/// The rationals, backed by `Ratio<i128>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n as i128)
    }
    fn render(&self, a: &Rational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

impl Domain for Rationals {
    fn div_exact(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        self.div(a, b)
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}
