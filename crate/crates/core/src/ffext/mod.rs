//! The function-field side over `F_q(x)`: places, splitting patterns of
//! defining polynomials, zeta numerators, quadratic L-polynomials, and the
//! arithmetic of ray class orders and parameter choice.

pub mod cft;
pub mod places;
pub mod zeta;

pub use cft::{choose_parameters, ray_class_order, CftParams, RayClassReport};
pub use places::{
    bivariate, find_split_prime, places_up_to, splitting_equivalent, splitting_pattern, Place,
    SplitEquivalence, Splitter, SplittingPattern,
};
pub use zeta::{
    motivating_example_check, quad_lfun, zeta_from_curve, MotivatingReport, QuadLfun, ZetaData,
};

use crate::exactalg::{ExactError, FqField, PolyRing};

/// `F_q[x]`.
pub type Fx = PolyRing<FqField>;
/// `F_q[x][y]`.
pub type Fxy = PolyRing<Fx>;

/// The rings `F_q[x]` and `F_q[x][y]` with the usual variable names.
pub fn rings(field: &FqField, x: &str, y: &str) -> (Fx, Fxy) {
    let fx = PolyRing::new(field.clone(), x);
    let fxy = PolyRing::new(fx.clone(), y);
    (fx, fxy)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FfError {
    #[error("place divides the discriminant")]
    RamifiedPlace,
    #[error("the infinite place is not supported for this polynomial")]
    InfinitePlaceUnsupported,
    #[error("polynomials have different degrees in y")]
    DegreeMismatch,
    #[error("polynomial must be monic in y")]
    NotMonic,
    #[error("polynomial is not separable in y")]
    Inseparable,
    #[error("place polynomial is not monic irreducible")]
    NotIrreducible,
    #[error("point counts are inconsistent with a zeta function: {0}")]
    FunctionalEquationViolated(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("characteristic 2 is not supported here")]
    EvenCharacteristic,
    #[error("the product of the two polynomials is a square")]
    DegenerateGaloisGroup,
    #[error("no place of degree {0} splits completely")]
    NotFound(usize),
    #[error("enumeration of {0} elements exceeds the bound")]
    EnumerationBoundExceeded(u64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
