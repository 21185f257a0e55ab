//! Exact invariant theory of relatively free algebras.
//!
//! The crate builds the relatively free algebra of left-nilpotent
//! right-symmetric algebras, the free metabelian Lie algebra and the
//! polynomial algebra as graded `GL_d`-modules, computes invariants of
//! finite rational matrix groups and constants of Weitzenböck derivations,
//! and reports degree-by-degree generator counts for the invariant
//! algebras.
//!
//! All arithmetic is over `Q` and exact.

pub mod algebra;
pub mod error;
pub mod exact;
pub mod generation;
pub mod invariants;
mod par;
pub mod schur;

pub use error::{Error, Result};
pub use par::is_parallel;
