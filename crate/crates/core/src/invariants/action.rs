//! Graded actions, fixed spaces and Reynolds projection.

use num_traits::One;

use super::group::FiniteMatrixGroup;
use crate::algebra::{
    action_matrix_in, component_dim, substitute, with_algebra, AlgebraKind, BasisIndex,
    GradedAlgebra, LinComb,
};
use crate::error::{Error, Result};
use crate::exact::{kernel_basis, Matrix, Rational, Subspace};
use crate::par;

/// Basis of a space of invariants (or constants) in one homogeneous
/// component, in coordinates with respect to the component's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedInvariantBasis {
    pub kind: AlgebraKind,
    pub d: usize,
    pub degree: usize,
    pub space: Subspace,
}

impl GradedInvariantBasis {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis vectors as elements of `alg`.
    pub fn elements<A: GradedAlgebra>(&self, alg: &A) -> Vec<LinComb<A::Monomial>> {
        assert_eq!(alg.kind(), self.kind, "algebra kind mismatch");
        assert_eq!(alg.d(), self.d, "generator count mismatch");
        let index = BasisIndex::new(alg.basis(self.degree));
        self.space.basis().iter().map(|v| index.element(v)).collect()
    }

    /// Text form of each basis element.
    pub fn render(&self) -> Vec<String> {
        with_algebra!(self.kind, self.d, |alg| self
            .elements(&alg)
            .iter()
            .map(ToString::to_string)
            .collect())
    }
}

/// Matrix of the diagonal action of `g` on the degree-`n` component.
pub fn action_matrix(g: &Matrix, kind: AlgebraKind, n: usize) -> Result<Matrix> {
    g.ensure_square()?;
    with_algebra!(kind, g.rows(), |alg| action_matrix_in(&alg, g, n))
}

/// Joint kernel of `(A_i - I)` over the given component matrices.
pub(crate) fn joint_fixed_space(mats: &[Matrix]) -> Result<Subspace> {
    let shifted: Vec<Matrix> = mats
        .iter()
        .map(|m| m - &Matrix::identity(m.rows()))
        .collect();
    Ok(kernel_basis(&Matrix::vstack(&shifted)?))
}

/// Invariants of `G` in the degree-`n` component: the joint fixed space of
/// the generators.
pub fn fixed_space(
    group: &FiniteMatrixGroup,
    kind: AlgebraKind,
    n: usize,
) -> Result<GradedInvariantBasis> {
    let d = group.d();
    let dim = component_dim(kind, d, n);
    let space = if dim == 0 {
        Subspace::zero(0)
    } else {
        let mats = par::map(group.generators(), |g| action_matrix(g, kind, n))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        joint_fixed_space(&mats)?
    };
    Ok(GradedInvariantBasis {
        kind,
        d,
        degree: n,
        space,
    })
}

/// `(1/|G|) Σ_g g(elem)`.
pub fn reynolds_project<A: GradedAlgebra>(
    alg: &A,
    group: &FiniteMatrixGroup,
    elem: &LinComb<A::Monomial>,
) -> Result<LinComb<A::Monomial>> {
    if alg.d() != group.d() {
        return Err(Error::DimensionMismatch {
            expected: group.d(),
            found: alg.d(),
        });
    }
    let images = par::map(group.elements(), |g| substitute(alg, g, elem))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut sum = LinComb::zero();
    for img in &images {
        sum.add_scaled(img, &Rational::one());
    }
    let weight = Rational::new(1.into(), (group.order() as i64).into());
    Ok(sum.scale(&weight))
}

/// Linear invariants `(KX_d)^G`.
pub fn linear_invariants(group: &FiniteMatrixGroup) -> Result<Subspace> {
    Ok(fixed_space(group, AlgebraKind::Poly, 1)?.space)
}
