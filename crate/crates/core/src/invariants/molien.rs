//! Hilbert series of invariants from characters alone.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::group::FiniteMatrixGroup;
use crate::error::{Error, Result};
use crate::exact::{PowerSeries, Rational};
use crate::par;
use crate::schur::{schur_char, series_eval_at_element, Partition, SymmSeries};

fn average(group: &FiniteMatrixGroup) -> Rational {
    Rational::new(One::one(), (group.order() as i64).into())
}

/// `(1/|G|) Σ_g H(W; ξ_1(g) z, ..., ξ_d(g) z)`; the coefficient of `z^n`
/// is the dimension of the degree-`n` invariants of the module `s`.
pub fn molien_series(s: &SymmSeries, group: &FiniteMatrixGroup) -> Result<PowerSeries> {
    if s.d() != group.d() {
        return Err(Error::DimensionMismatch {
            expected: group.d(),
            found: s.d(),
        });
    }
    let per_element = par::map(group.elements(), |g| series_eval_at_element(s, g))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let sum = per_element
        .iter()
        .fold(PowerSeries::zero(s.max_degree()), |acc, p| acc.add(p));
    Ok(sum.scale(&average(group)))
}

/// `dim W_d(λ)^G = (1/|G|) Σ_g S_λ(ξ(g))`.
pub fn isotypic_invariant_dim(lambda: &Partition, group: &FiniteMatrixGroup) -> Result<u64> {
    lambda.check_fits(group.d())?;
    let chars = par::map(group.elements(), |g| schur_char(lambda, g))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let total = chars.into_iter().fold(Rational::zero(), |a, b| a + b) * average(group);
    assert!(
        total.is_integer() && !total.is_negative(),
        "character average {total} is not a dimension"
    );
    Ok(total.to_integer().to_u64().expect("dimension fits in u64"))
}

/// Invariant dimensions per degree via `Σ_λ m_λ dim W_d(λ)^G`.
pub fn invariant_dims_by_isotypic(s: &SymmSeries, group: &FiniteMatrixGroup) -> Result<Vec<i64>> {
    let mut dims = vec![0i64; s.max_degree() + 1];
    for (lambda, m) in s.terms() {
        dims[lambda.size()] += m * isotypic_invariant_dim(lambda, group)? as i64;
    }
    Ok(dims)
}
