//! Invariant subspaces: Reynolds projection, closure and Weitzenböck
//! constants.

use rsinv::algebra::{
    AlgebraKind, BasisIndex, GradedAlgebra, LAlgebra, MetabelianAlgebra, PolyAlgebra,
};
use rsinv::exact::{frac, int, Matrix};
use rsinv::invariants::group::standard;
use rsinv::invariants::{
    delta_constants, exp_automorphism, exp_fixed_space, fixed_space, group_closure,
    linear_constants, reynolds_project, FiniteMatrixGroup,
    WeitzenbockDerivation, DEFAULT_CAP,
};
use rsinv::Error;

fn suite() -> Vec<(&'static str, FiniteMatrixGroup)> {
    vec![
        ("minus identity", standard::minus_identity(2)),
        ("rotation", standard::rotation_c4()),
        ("swap", standard::swap()),
        ("S3", standard::symmetric(3)),
    ]
}

fn check_reynolds<A: GradedAlgebra>(alg: &A, group: &FiniteMatrixGroup, n: usize) {
    let index = BasisIndex::new(alg.basis(n));
    let inv = fixed_space(group, alg.kind(), n).unwrap();
    let mut images = rsinv::exact::Echelon::new(index.len());
    for m in index.basis() {
        let elem = rsinv::algebra::LinComb::monomial(m.clone());
        let p = reynolds_project(alg, group, &elem).unwrap();
        // Idempotent, and the image is fixed by every generator.
        assert_eq!(reynolds_project(alg, group, &p).unwrap(), p);
        for g in group.generators() {
            assert_eq!(rsinv::algebra::substitute(alg, g, &p).unwrap(), p);
        }
        let coords = index.coordinates(&p);
        assert!(inv.space.contains(&coords));
        images.insert(coords);
    }
    // Projections of the monomials span all invariants.
    assert_eq!(images.dim(), inv.dim(), "{} degree {n}", alg.kind());
}

#[test]
fn reynolds_projects_onto_invariants() {
    for (_, g) in suite() {
        let d = g.d();
        for n in 1..=5 {
            check_reynolds(&LAlgebra::new(d), &g, n);
            check_reynolds(&MetabelianAlgebra::new(d), &g, n);
            check_reynolds(&PolyAlgebra::new(d), &g, n);
        }
    }
}

#[test]
fn closure_orders() {
    let orders: Vec<usize> = suite().iter().map(|(_, g)| g.order()).collect();
    assert_eq!(orders, vec![2, 4, 2, 6]);
    assert_eq!(standard::symmetric(4).order(), 24);
    let shear = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
    assert!(matches!(
        group_closure(&[shear], 100),
        Err(Error::GroupNotFinite { cap: 100 })
    ));
    let singular = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
    assert!(group_closure(&[singular], DEFAULT_CAP).is_err());
}

#[test]
fn closure_is_closed_under_products() {
    for (_, g) in suite() {
        for a in g.elements() {
            for b in g.elements() {
                assert!(g.elements().contains(&(a * b)));
            }
        }
    }
}

fn derivations() -> Vec<WeitzenbockDerivation> {
    [vec![2], vec![3], vec![2, 1], vec![2, 2], vec![3, 1]]
        .iter()
        .map(|b| WeitzenbockDerivation::from_blocks(b).unwrap())
        .collect()
}

#[test]
fn linear_constants_count_blocks() {
    for delta in derivations() {
        assert_eq!(linear_constants(&delta).dim(), delta.p());
    }
}

#[test]
fn exp_is_an_automorphism_fixing_constants() {
    for delta in derivations() {
        let d = delta.d();
        let alg = LAlgebra::new(d);
        for alpha in [int(1), int(-2), frac(1, 3)] {
            let g = exp_automorphism(&delta, &alpha);
            assert!(g.inverse().is_some());
            // exp(αδ) exp(-αδ) = I.
            let back = exp_automorphism(&delta, &-alpha.clone());
            assert!((&g * &back).is_identity());
            for n in 1..=4 {
                let consts = delta_constants(&delta, AlgebraKind::L, n).unwrap();
                for c in consts.elements(&alg) {
                    assert_eq!(rsinv::algebra::substitute(&alg, &g, &c).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn kernel_equals_fixed_points_of_exp() {
    for delta in derivations() {
        for kind in [AlgebraKind::Poly, AlgebraKind::Metabelian, AlgebraKind::L] {
            for n in kind.min_degree()..=5 {
                let ker = delta_constants(&delta, kind, n).unwrap();
                let fix = exp_fixed_space(&delta, kind, n).unwrap();
                assert_eq!(ker.space, fix, "{kind} blocks {:?} degree {n}", delta.blocks());
            }
        }
    }
}

#[test]
fn polynomial_constants_of_a_single_block_pair() {
    // δ(x1) = x2, δ(x2) = 0: the constants of K[x1, x2] are K[x2].
    let delta = WeitzenbockDerivation::from_blocks(&[2]).unwrap();
    for n in 0..=6 {
        assert_eq!(delta_constants(&delta, AlgebraKind::Poly, n).unwrap().dim(), 1);
    }
}
