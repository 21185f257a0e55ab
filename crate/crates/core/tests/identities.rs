//! Defining identities of the algebras, checked on random elements.

use proptest::prelude::*;

use rsinv::algebra::{
    l_mul, metab_bracket, poly_mul, substitute, LAlgebra, LElement, MetabElement,
    MetabelianAlgebra, PolyAlgebra, PolyElement,
};
use rsinv::exact::{int, Matrix};

const CASES: u32 = 1000;
const D: usize = 3;

/// Up to four terms, each a coefficient and a word of length 1..=4.
fn words() -> impl Strategy<Value = Vec<(i64, Vec<usize>)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..D, 1..=4)), 1..=4)
}

fn l_elem(terms: &[(i64, Vec<usize>)]) -> LElement {
    let alg = LAlgebra::new(D);
    let mut out = LElement::zero();
    for (c, w) in terms {
        out.add_scaled(&alg.word(w), &int(*c));
    }
    out
}

fn metab_elem(terms: &[(i64, Vec<usize>)]) -> MetabElement {
    let alg = MetabelianAlgebra::new(D);
    let mut out = MetabElement::zero();
    for (c, w) in terms {
        out.add_scaled(&alg.commutator(w), &int(*c));
    }
    out
}

fn poly_elem(terms: &[(i64, Vec<usize>)]) -> PolyElement {
    let alg = PolyAlgebra::new(D);
    let mut out = PolyElement::zero();
    for (c, w) in terms {
        let mut e = vec![0u32; D];
        for &i in w {
            e[i] += 1;
        }
        out.add_scaled(&alg.monomial(&e), &int(*c));
    }
    out
}

fn matrix() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, D * D).prop_map(|v| {
        let rows: Vec<&[i64]> = v.chunks(D).collect();
        Matrix::from_i64(&rows)
    })
}

fn bracket3(a: &MetabElement, b: &MetabElement, c: &MetabElement) -> MetabElement {
    metab_bracket(&metab_bracket(a, b), c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn l_right_symmetry(a in words(), b in words(), c in words()) {
        let (a, b, c) = (l_elem(&a), l_elem(&b), l_elem(&c));
        // (a, b, c) = (ab)c - a(bc) is symmetric in b, c.
        let assoc = |x: &LElement, y: &LElement, z: &LElement| {
            &l_mul(&l_mul(x, y), z) - &l_mul(x, &l_mul(y, z))
        };
        prop_assert_eq!(assoc(&a, &b, &c), assoc(&a, &c, &b));
    }

    #[test]
    fn l_left_nilpotency(a in words(), b in words(), c in words()) {
        let (a, b, c) = (l_elem(&a), l_elem(&b), l_elem(&c));
        prop_assert!(l_mul(&a, &l_mul(&b, &c)).is_zero());
    }

    #[test]
    fn l_reduced_identity(a in words(), b in words(), c in words()) {
        let (a, b, c) = (l_elem(&a), l_elem(&b), l_elem(&c));
        prop_assert_eq!(l_mul(&l_mul(&a, &b), &c), l_mul(&l_mul(&a, &c), &b));
    }

    #[test]
    fn l_substitution_is_multiplicative(a in words(), b in words(), g in matrix()) {
        let alg = LAlgebra::new(D);
        let (a, b) = (l_elem(&a), l_elem(&b));
        let lhs = substitute(&alg, &g, &l_mul(&a, &b)).unwrap();
        let rhs = l_mul(&substitute(&alg, &g, &a).unwrap(), &substitute(&alg, &g, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn l_substitution_is_a_left_action(a in words(), g in matrix(), h in matrix()) {
        let alg = LAlgebra::new(D);
        let a = l_elem(&a);
        let gh = &g * &h;
        let lhs = substitute(&alg, &gh, &a).unwrap();
        let rhs = substitute(&alg, &g, &substitute(&alg, &h, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn metab_anticommutativity(a in words(), b in words()) {
        let (a, b) = (metab_elem(&a), metab_elem(&b));
        prop_assert!(metab_bracket(&a, &a).is_zero());
        prop_assert_eq!(metab_bracket(&a, &b), -&metab_bracket(&b, &a));
    }

    #[test]
    fn metab_jacobi(a in words(), b in words(), c in words()) {
        let (a, b, c) = (metab_elem(&a), metab_elem(&b), metab_elem(&c));
        let sum = &(&bracket3(&a, &b, &c) + &bracket3(&b, &c, &a)) + &bracket3(&c, &a, &b);
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn metab_metabelian(a in words(), b in words(), c in words(), d in words()) {
        let (a, b, c, d) = (metab_elem(&a), metab_elem(&b), metab_elem(&c), metab_elem(&d));
        prop_assert!(metab_bracket(&metab_bracket(&a, &b), &metab_bracket(&c, &d)).is_zero());
    }

    #[test]
    fn metab_substitution_is_multiplicative(a in words(), b in words(), g in matrix()) {
        let alg = MetabelianAlgebra::new(D);
        let (a, b) = (metab_elem(&a), metab_elem(&b));
        let lhs = substitute(&alg, &g, &metab_bracket(&a, &b)).unwrap();
        let rhs = metab_bracket(&substitute(&alg, &g, &a).unwrap(), &substitute(&alg, &g, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poly_substitution_is_multiplicative(a in words(), b in words(), g in matrix()) {
        let alg = PolyAlgebra::new(D);
        let (a, b) = (poly_elem(&a), poly_elem(&b));
        let lhs = substitute(&alg, &g, &poly_mul(&a, &b)).unwrap();
        let rhs = poly_mul(&substitute(&alg, &g, &a).unwrap(), &substitute(&alg, &g, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
