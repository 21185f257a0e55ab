//! Independent oracles shared by the integration tests.

use rsinv::algebra::{
    l_module_action, poly_mul, BasisIndex, GradedAlgebra, LAlgebra, LElement, LinComb,
    PolyAlgebra, PolyElement,
};
use rsinv::exact::Echelon;
use rsinv::invariants::{reynolds_project, FiniteMatrixGroup};

/// Basis of the degree-`n` invariants, from Reynolds images of monomials.
pub fn invariants_by_reynolds<A: GradedAlgebra>(alg: &A, g: &FiniteMatrixGroup, n: usize) -> Vec<LinComb<A::Monomial>> {
    let index = BasisIndex::new(alg.basis(n));
    let mut ech = Echelon::new(index.len());
    let mut out = Vec::new();
    for m in index.basis() {
        let p = reynolds_project(alg, g, &LinComb::monomial(m.clone())).unwrap();
        if ech.insert(index.coordinates(&p)) {
            out.push(p);
        }
    }
    out
}

/// All products `u_{i1} ⋯ u_{ik}` of linear invariants with `k = degree`.
fn monomials_in(us: &[PolyElement], degree: usize, poly: &PolyAlgebra) -> Vec<PolyElement> {
    let mut layer = vec![poly.one()];
    for _ in 0..degree {
        layer = layer
            .iter()
            .flat_map(|f| us.iter().map(move |u| poly_mul(f, u)))
            .collect();
    }
    layer
}

/// New module generators per degree `2..=N`, counted as the codimension in
/// the invariants of every product `w ∘ f` with `w` an invariant of lower
/// degree and `f` a monomial in the linear invariants.
pub fn brute_force_new_generators(g: &FiniteMatrixGroup, max_degree: usize) -> Vec<usize> {
    let d = g.d();
    let alg = LAlgebra::new(d);
    let poly = PolyAlgebra::new(d);
    let us = invariants_by_reynolds(&poly, g, 1);
    let inv: Vec<Vec<LElement>> = (0..=max_degree)
        .map(|n| if n < 2 { Vec::new() } else { invariants_by_reynolds(&alg, g, n) })
        .collect();
    (2..=max_degree)
        .map(|n| {
            let index = BasisIndex::new(alg.basis(n));
            let mut span = Echelon::new(index.len());
            for (k, inv_k) in inv.iter().enumerate().take(n).skip(2) {
                for f in monomials_in(&us, n - k, &poly) {
                    for w in inv_k {
                        span.insert(index.coordinates(&l_module_action(w, &f)));
                    }
                }
            }
            inv[n].len() - span.dim()
        })
        .collect()
}
