//! Exact computations around arithmetic equivalence of global function
//! fields: finite fields and polynomials, permutation groups, characters,
//! places and L-functions of function fields, and elliptic curves.

pub mod chars;
pub mod elliptic;
pub mod exactalg;
pub mod ffext;
pub mod groups;
