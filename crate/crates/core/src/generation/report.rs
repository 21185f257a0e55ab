//! Degree-by-degree generator counts for the invariants of `F_d(𝔏)`.
//!
//! The module report treats `F_d^2(𝔏)^G` as a module over the polynomials
//! in the linear invariants: the part of degree `n` reachable from lower
//! degrees is `inv_{n-1} ∘ (KX_d)^G`, and whatever the invariants of
//! degree `n` add on top of that must be new module generators. The
//! algebra report does the same for the algebra `F_d(𝔏)^G`, where degree-1
//! invariants are generators and the degree-2 products `u_p u_q` are
//! reachable.

use serde::{Deserialize, Serialize};

use super::criteria::CriterionVerdict;
use crate::algebra::{
    l_module_action, l_mul, AlgebraKind, BasisIndex, GradedAlgebra, LAlgebra, LElement,
    LMonomial, PolyAlgebra, PolyElement,
};
use crate::error::{Error, Result};
use crate::exact::{span_complement, Echelon, Subspace};
use crate::invariants::{fixed_space, linear_invariants, FiniteMatrixGroup};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub n: usize,
    pub dim_invariants: usize,
    pub dim_module_span: usize,
    pub new_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModGenReport {
    pub d: usize,
    pub max_degree: usize,
    pub linear_invariant_dim: usize,
    pub degrees: Vec<DegreeRow>,
}

impl ModGenReport {
    pub fn row(&self, n: usize) -> Option<&DegreeRow> {
        self.degrees.iter().find(|r| r.n == n)
    }

    pub fn new_generators(&self) -> Vec<(usize, usize)> {
        self.degrees.iter().map(|r| (r.n, r.new_generators)).collect()
    }

    /// JSON shape `{"linear_invariant_dim", "degrees", "verdict", "rule"}`.
    pub fn to_json(&self, verdict: Option<&CriterionVerdict>) -> ReportJson {
        ReportJson {
            linear_invariant_dim: self.linear_invariant_dim,
            degrees: self.degrees.clone(),
            verdict: verdict.map(|v| v.verdict.to_string()),
            rule: verdict.map(|v| v.rule.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub linear_invariant_dim: usize,
    pub degrees: Vec<DegreeRow>,
    pub verdict: Option<String>,
    pub rule: Option<String>,
}

/// Invariant spaces of `F_d(𝔏)` for degrees `1..=max_degree`, index `n - 1`.
fn l_invariants(group: &FiniteMatrixGroup, max_degree: usize) -> Result<Vec<Subspace>> {
    par::map_range(1..max_degree + 1, |n| {
        fixed_space(group, AlgebraKind::L, n).map(|b| b.space)
    })
    .into_iter()
    .collect()
}

fn elements(index: &BasisIndex<LMonomial>, space: &Subspace) -> Vec<LElement> {
    space.basis().iter().map(|v| index.element(v)).collect()
}

/// Span of `{ product(v, u) }` in degree `n`.
fn product_span<R: Sync>(
    index: &BasisIndex<LMonomial>,
    lower: &[LElement],
    linear: &[R],
    product: impl Fn(&LElement, &R) -> LElement + Sync + Send,
) -> Subspace {
    let pairs: Vec<(usize, usize)> = (0..lower.len())
        .flat_map(|i| (0..linear.len()).map(move |j| (i, j)))
        .collect();
    let coords = par::map(&pairs, |&(i, j)| index.coordinates(&product(&lower[i], &linear[j])));
    let mut echelon = Echelon::new(index.len());
    for v in coords {
        echelon.insert(v);
    }
    echelon.into_subspace()
}

fn row(n: usize, invariants: &Subspace, span: &Subspace) -> Result<DegreeRow> {
    let new = span_complement(invariants, span)?;
    Ok(DegreeRow {
        n,
        dim_invariants: invariants.dim(),
        dim_module_span: span.dim(),
        new_generators: new.dim(),
    })
}

/// Module generators of `F_d^2(𝔏)^G` over `K[(KX_d)^G]`, degrees `2..=N`.
pub fn module_generator_report(group: &FiniteMatrixGroup, max_degree: usize) -> Result<ModGenReport> {
    if max_degree < 2 {
        return Err(Error::Invalid("module report needs max degree at least 2".into()));
    }
    let d = group.d();
    let alg = LAlgebra::new(d);
    let poly = PolyAlgebra::new(d);
    let lin = linear_invariants(group)?;
    let lin_polys: Vec<PolyElement> = lin
        .basis()
        .iter()
        .map(|u| BasisIndex::new(poly.basis(1)).element(u))
        .collect();
    let invariants = l_invariants(group, max_degree)?;

    let mut degrees = Vec::new();
    for n in 2..=max_degree {
        let index = BasisIndex::new(alg.basis(n));
        let span = if n == 2 {
            Subspace::zero(index.len())
        } else {
            let lower = elements(&BasisIndex::new(alg.basis(n - 1)), &invariants[n - 2]);
            product_span(&index, &lower, &lin_polys, l_module_action)
        };
        degrees.push(row(n, &invariants[n - 1], &span)?);
    }
    Ok(ModGenReport {
        d,
        max_degree,
        linear_invariant_dim: lin.dim(),
        degrees,
    })
}

/// Algebra generators of `F_d(𝔏)^G`, degrees `1..=N`. Products of
/// invariants are nonzero only when the right factor is linear, so the
/// reachable part of degree `n` is `inv_{n-1} · (KX_d)^G`.
pub fn algebra_generator_report(group: &FiniteMatrixGroup, max_degree: usize) -> Result<ModGenReport> {
    if max_degree < 1 {
        return Err(Error::Invalid("algebra report needs max degree at least 1".into()));
    }
    let d = group.d();
    let alg = LAlgebra::new(d);
    let invariants = l_invariants(group, max_degree)?;
    let lin = &invariants[0];
    let lin_elems = elements(&BasisIndex::new(alg.basis(1)), lin);

    let mut degrees = vec![row(1, lin, &Subspace::zero(d))?];
    for n in 2..=max_degree {
        let index = BasisIndex::new(alg.basis(n));
        let lower = elements(&BasisIndex::new(alg.basis(n - 1)), &invariants[n - 2]);
        let span = product_span(&index, &lower, &lin_elems, l_mul);
        degrees.push(row(n, &invariants[n - 1], &span)?);
    }
    Ok(ModGenReport {
        d,
        max_degree,
        linear_invariant_dim: lin.dim(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::group::standard;

    #[test]
    fn minus_identity_has_generators_in_every_even_degree() {
        let r = module_generator_report(&standard::minus_identity(2), 6).unwrap();
        assert_eq!(r.linear_invariant_dim, 0);
        assert_eq!(
            r.new_generators(),
            vec![(2, 4), (3, 0), (4, 8), (5, 0), (6, 12)]
        );
        let a = algebra_generator_report(&standard::minus_identity(2), 6).unwrap();
        assert_eq!(&a.degrees[1..], &r.degrees[..]);
        assert_eq!(a.degrees[0].new_generators, 0);
    }

    #[test]
    fn trivial_group() {
        let r = module_generator_report(&standard::trivial(2), 4).unwrap();
        assert_eq!(r.new_generators(), vec![(2, 4), (3, 0), (4, 0)]);
        let a = algebra_generator_report(&standard::trivial(2), 4).unwrap();
        assert_eq!(a.new_generators(), vec![(1, 2), (2, 0), (3, 0), (4, 0)]);
    }

    #[test]
    fn swap_needs_generators_everywhere() {
        let r = module_generator_report(&standard::swap(), 6).unwrap();
        assert_eq!(r.linear_invariant_dim, 1);
        assert!(r.degrees.iter().all(|row| row.new_generators > 0));
        let a = algebra_generator_report(&standard::swap(), 6).unwrap();
        for row in &r.degrees {
            assert!(a.row(row.n).unwrap().new_generators <= row.new_generators);
        }
    }

    #[test]
    fn rows_are_consistent() {
        let r = module_generator_report(&standard::symmetric(3), 5).unwrap();
        for row in &r.degrees {
            assert_eq!(row.dim_module_span + row.new_generators, row.dim_invariants);
        }
    }

    #[test]
    fn rejects_small_degree() {
        assert!(module_generator_report(&standard::swap(), 1).is_err());
        assert!(algebra_generator_report(&standard::swap(), 0).is_err());
    }
}
