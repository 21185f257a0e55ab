//! Concrete graded arithmetic in the three relatively free algebras.

pub mod graded;
pub mod lalg;
pub mod lincomb;
pub mod metabelian;
pub mod poly;

pub use graded::{
    action_matrix_in, derivation_apply, derivation_matrix_in, right_mul_linear, substitute,
    AlgebraKind, BasisIndex, GradedAlgebra,
};
pub use lalg::{l_basis, l_module_action, l_mul, LAlgebra, LElement, LMonomial};
pub use lincomb::LinComb;

use crate::schur::{binomial, SymmSeries};
pub use metabelian::{metab_basis, metab_bracket, MetabElement, MetabMonomial, MetabelianAlgebra};
pub use poly::{poly_mul, PolyAlgebra, PolyElement, PolyMonomial};

/// Runs `$body` with `$alg` bound to the concrete algebra of kind `$kind`
/// on `$d` generators.
macro_rules! with_algebra {
    ($kind:expr, $d:expr, |$alg:ident| $body:expr) => {
        match $kind {
            $crate::algebra::AlgebraKind::L => {
                let $alg = $crate::algebra::LAlgebra::new($d);
                $body
            }
            $crate::algebra::AlgebraKind::Metabelian => {
                let $alg = $crate::algebra::MetabelianAlgebra::new($d);
                $body
            }
            $crate::algebra::AlgebraKind::Poly => {
                let $alg = $crate::algebra::PolyAlgebra::new($d);
                $body
            }
        }
    };
}
pub(crate) use with_algebra;

/// Dimension of the degree-`n` component, by enumerating its basis.
pub fn component_dim(kind: AlgebraKind, d: usize, n: usize) -> usize {
    with_algebra!(kind, d, |alg| alg.basis(n).len())
}

/// Dimension of the degree-`n` component in closed form, without building
/// the basis.
pub fn hilbert_dim(kind: AlgebraKind, d: usize, n: usize) -> u64 {
    let (d, n) = (d as u64, n as u64);
    if d == 0 {
        return u64::from(kind == AlgebraKind::Poly && n == 0);
    }
    match kind {
        AlgebraKind::Poly => binomial(n + d - 1, d - 1),
        AlgebraKind::L if n == 0 => 0,
        AlgebraKind::L => d * binomial(n + d - 2, d - 1),
        AlgebraKind::Metabelian => match n {
            0 => 0,
            1 => d,
            _ => (n - 1) * binomial(n + d - 2, n),
        },
    }
}

/// The `GL_d`-module decomposition of the algebra of kind `kind`.
pub fn kind_series(kind: AlgebraKind, d: usize, max_degree: usize) -> SymmSeries {
    with_algebra!(kind, d, |alg| alg.glmodule_series(max_degree))
}
