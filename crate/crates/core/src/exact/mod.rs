//! Exact scalars, matrices, subspaces and truncated power series.

pub mod matrix;
pub mod rational;
pub mod series;
pub mod subspace;

pub use matrix::Matrix;
pub use rational::{format_rational, frac, int, one, parse_rational, to_i64, zero, Rational};
pub use series::{det_one_minus_gt, series_invert, PowerSeries};
pub use subspace::{kernel_basis, span_complement, Echelon, Subspace};
