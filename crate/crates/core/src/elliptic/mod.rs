//! Weierstrass curves `y^2 = x^3 + ax + b` over `F_q` and over `F_q(t)`:
//! point counts, group structure, `j`-invariants, division polynomials,
//! the torsion-field resultant, and the constant-field criterion for the
//! `l`-torsion field.

pub mod curve;
pub mod divpoly;
pub mod igusa;

pub use curve::{AbelianGroupShape, Point, WeierstrassCurve};
pub use divpoly::{
    division_polynomial, division_polynomials, CurveOverFqt, Specialization, TorsionResultant,
};
pub use igusa::{igusa_criterion, IgusaReport};

use crate::exactalg::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EllipticError {
    #[error("the curve is singular")]
    SingularCurve,
    #[error("characteristic {0} is not supported; p > 3 is required")]
    SmallCharacteristic(u64),
    #[error("{0} is not an admissible prime")]
    BadPrime(u64),
    #[error("enumeration of {0} elements exceeds the bound")]
    EnumerationBoundExceeded(u64),
    #[error("point count violates the Weil or Hasse constraints: {0}")]
    WeilViolation(String),
    #[error("group structure is inconsistent: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Enumeration limit for point counting.
pub const ENUMERATION_BOUND: u64 = 1_000_000;
