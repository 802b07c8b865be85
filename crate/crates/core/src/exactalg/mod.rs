//! Exact arithmetic: finite fields, dense polynomials with factorization and
//! resultants, and cyclotomic numbers.

pub mod cyclo;
pub mod factor;
pub mod fq;
pub mod numtheory;
pub mod poly;
pub mod resultant;
pub mod ring;

pub use cyclo::CycloNum;
pub use factor::{factor, is_irreducible, Factorization};
pub use fq::{fq_arith, ExtField, FqElem, FqField, FqOp, FqValue};
pub use poly::{Poly, PolyRing};
pub use resultant::{discriminant, resultant};
pub use ring::{Domain, Field, FiniteField, Integers, Rational, Rationals, Ring};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not monic irreducible")]
    ReducibleModulus,
    #[error("field order exceeds 2^32")]
    FieldTooLarge,
    #[error("zero polynomial")]
    ZeroPolynomial,
}
