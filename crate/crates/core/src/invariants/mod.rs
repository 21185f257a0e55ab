//! Finite matrix groups, their invariants, and constants of Weitzenböck
//! derivations.

pub mod action;
pub mod group;
pub mod molien;
pub mod weitzenbock;

pub use action::{
    action_matrix, fixed_space, linear_invariants, reynolds_project, GradedInvariantBasis,
};
pub use group::{group_closure, FiniteMatrixGroup, GroupSpec, DEFAULT_CAP};
pub use molien::{invariant_dims_by_isotypic, isotypic_invariant_dim, molien_series};
pub use weitzenbock::{
    delta_constants, derivation_matrix, exp_automorphism, exp_fixed_space, linear_constants,
    weitzenbock_from_blocks, DerivationSpec, WeitzenbockDerivation,
};
