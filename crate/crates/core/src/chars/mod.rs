//! Cyclotomic-valued class functions and characters: induction and
//! restriction, irreducible lists, Gassmann tests, the L-function criteria,
//! and monomial characters of `C_l^n ⋊ G`.

pub mod classfn;
pub mod gassmann;
pub mod irreducible;
pub mod lcriteria;
pub mod linear;
pub mod monomial;

pub use classfn::ClassFunction;
pub use gassmann::{gassmann_test, triviality_screen, GassmannReport};
pub use irreducible::irreducible_characters;
pub use lcriteria::{
    frobenius_reciprocity_holds, gassmann_lfunction_check, lfunction_criteria_check,
    projection_formula_holds, random_criteria_instances, CriteriaInstance, CriteriaReport,
};
pub use linear::{cyclic_character, derived_subgroup, linear_characters};
pub use monomial::{
    diagonal_evidence, monomial_char, monomial_rigidity_verify, quaternion_contrast,
    trace_inequality, DiagonalReport, QuaternionReport, RigidityReport,
};

use crate::groups::GroupError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("inner product is not rational")]
    NotRational,
    #[error("found {found} of {expected} irreducible characters")]
    IncompleteDecomposition { found: usize, expected: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
