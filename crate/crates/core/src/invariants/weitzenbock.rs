//! Weitzenböck derivations: derivations induced by a nilpotent linear map
//! on the generators, given in Jordan form.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::action::{joint_fixed_space, GradedInvariantBasis};
use crate::algebra::{component_dim, derivation_matrix_in, with_algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::exact::rational::frac;
use crate::exact::{kernel_basis, Matrix, Rational, Subspace};

/// Nilpotent derivation whose matrix is a direct sum of Jordan blocks with
/// zero diagonal. Within a block, `x_k ↦ x_{k+1}` and the last variable of
/// the block is a constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeitzenbockDerivation {
    blocks: Vec<usize>,
    matrix: Matrix,
}

/// On-disk derivation description: `{"blocks": [2, 1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationSpec {
    pub blocks: Vec<usize>,
}

impl WeitzenbockDerivation {
    pub fn from_blocks(blocks: &[usize]) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidBlocks(blocks.to_vec()));
        }
        let d = blocks.iter().sum();
        let mut matrix = Matrix::zeros(d, d);
        let mut offset = 0;
        for &size in blocks {
            for k in 0..size - 1 {
                matrix.set(offset + k + 1, offset + k, Rational::one());
            }
            offset += size;
        }
        Ok(Self {
            blocks: blocks.to_vec(),
            matrix,
        })
    }

    pub fn d(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of Jordan blocks.
    pub fn p(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// Alias of [`WeitzenbockDerivation::from_blocks`].
pub fn weitzenbock_from_blocks(blocks: &[usize]) -> Result<WeitzenbockDerivation> {
    WeitzenbockDerivation::from_blocks(blocks)
}

/// Matrix of the derivation induced by `delta` on the degree-`n` component.
pub fn derivation_matrix(delta: &Matrix, kind: AlgebraKind, n: usize) -> Result<Matrix> {
    delta.ensure_square()?;
    with_algebra!(kind, delta.rows(), |alg| derivation_matrix_in(&alg, delta, n))
}

/// Constants of `delta` in the degree-`n` component.
pub fn delta_constants(
    delta: &WeitzenbockDerivation,
    kind: AlgebraKind,
    n: usize,
) -> Result<GradedInvariantBasis> {
    let d = delta.d();
    let space = if component_dim(kind, d, n) == 0 {
        Subspace::zero(0)
    } else {
        kernel_basis(&derivation_matrix(delta.matrix(), kind, n)?)
    };
    Ok(GradedInvariantBasis {
        kind,
        d,
        degree: n,
        space,
    })
}

/// `exp(α δ) = Σ_k (α δ)^k / k!`, a finite sum since `δ` is nilpotent.
pub fn exp_automorphism(delta: &WeitzenbockDerivation, alpha: &Rational) -> Matrix {
    let d = delta.d();
    let step = delta.matrix().scale(alpha);
    let mut term = Matrix::identity(d);
    let mut sum = term.clone();
    for k in 1..d {
        term = (&term * &step).scale(&frac(1, k as i64));
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
    }
    sum
}

/// Fixed points of `exp(δ)` in the degree-`n` component.
pub fn exp_fixed_space(delta: &WeitzenbockDerivation, kind: AlgebraKind, n: usize) -> Result<Subspace> {
    let d = delta.d();
    if component_dim(kind, d, n) == 0 {
        return Ok(Subspace::zero(0));
    }
    let g = exp_automorphism(delta, &Rational::one());
    let m = super::action::action_matrix(&g, kind, n)?;
    joint_fixed_space(&[m])
}

/// Linear constants of `δ`; their number is the number of Jordan blocks.
pub fn linear_constants(delta: &WeitzenbockDerivation) -> Subspace {
    kernel_basis(delta.matrix())
}
