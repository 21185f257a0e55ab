//! Partitions, Schur characters and the `GL_d`-module structure of the
//! three graded algebras.

pub mod partition;
pub mod symm;

pub use partition::{binomial, branch_add_box, weyl_dim, Partition};
pub use symm::{
    glmodule_series_l, glmodule_series_metabelian, glmodule_series_poly, schur_char,
    series_eval_at_element, Characters, SymmSeries, SymmSeriesJson,
};
