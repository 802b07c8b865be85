//! Finite permutation groups: closure, conjugacy classes, subgroups, coset
//! actions, subgroup enumeration, and the semidirect products `C_l^n ⋊ G`.

pub mod catalog;
pub mod group;
pub mod lowindex;
pub mod perm;
pub mod sdp;
pub mod subgroup;

pub use group::{ConjClass, PermGroup, DEFAULT_ORDER_BOUND};
pub use lowindex::low_index_subgroups;
pub use perm::Perm;
pub use sdp::{semidirect_product, Sdp, SdpElement};
pub use subgroup::{are_conjugate, coset_action, subgroup_classes, CosetAction, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the bound {0}")]
    OrderBoundExceeded(usize),
    #[error("not a subgroup of the given group")]
    NotASubgroup,
    #[error("malformed permutation: {0}")]
    BadPermutation(String),
    #[error("generators act on different numbers of points")]
    DegreeMismatch,
    #[error("l = {0} is rejected; an odd prime is required")]
    EvenOrEqualTwo(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("index {0} is outside the supported range 1..=8")]
    IndexTooLarge(usize),
}
