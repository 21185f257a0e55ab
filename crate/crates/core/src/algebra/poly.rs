//! The polynomial algebra `K[X_d]`.

use std::cmp::Ordering;
use std::fmt;

use super::graded::{exponent_letters, fmt_exponents, multisets, GradedAlgebra};
use super::lincomb::LinComb;
use crate::schur::{glmodule_series_poly, SymmSeries};

/// `x_1^{e_1} ⋯ x_d^{e_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMonomial(Vec<u32>);

impl PolyMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

impl Ord for PolyMonomial {
    /// Degree, then sorted index list in lex order (`x1^2 < x1 x2 < x2^2`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for PolyMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PolyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("x^")?;
        fmt_exponents(f, &self.0)
    }
}

pub type PolyElement = LinComb<PolyMonomial>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyAlgebra {
    d: usize,
}

impl PolyAlgebra {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "need at least one generator");
        Self { d }
    }

    pub fn one(&self) -> PolyElement {
        LinComb::monomial(PolyMonomial(vec![0; self.d]))
    }

    pub fn x(&self, i: usize) -> PolyElement {
        LinComb::monomial(self.generator(i))
    }

    pub fn monomial(&self, exponents: &[u32]) -> PolyElement {
        assert_eq!(exponents.len(), self.d);
        LinComb::monomial(PolyMonomial(exponents.to_vec()))
    }
}

impl GradedAlgebra for PolyAlgebra {
    type Monomial = PolyMonomial;

    fn kind(&self) -> super::AlgebraKind {
        super::AlgebraKind::Poly
    }

    fn d(&self) -> usize {
        self.d
    }

    fn basis(&self, n: usize) -> Vec<PolyMonomial> {
        multisets(self.d, n).into_iter().map(PolyMonomial).collect()
    }

    fn degree(&self, m: &PolyMonomial) -> usize {
        m.degree()
    }

    fn generator(&self, i: usize) -> PolyMonomial {
        let mut e = vec![0; self.d];
        e[i] = 1;
        PolyMonomial(e)
    }

    fn letters(&self, m: &PolyMonomial) -> Vec<usize> {
        exponent_letters(&m.0)
    }

    fn mul_generator(&self, m: &PolyMonomial, j: usize) -> PolyElement {
        let mut out = m.clone();
        out.0[j] += 1;
        LinComb::monomial(out)
    }

    fn glmodule_series(&self, max_degree: usize) -> SymmSeries {
        glmodule_series_poly(self.d, max_degree)
    }
}

pub fn poly_mul(a: &PolyElement, b: &PolyElement) -> PolyElement {
    a.bilinear(b, |u, v| {
        LinComb::monomial(PolyMonomial(
            u.0.iter().zip(&v.0).map(|(x, y)| x + y).collect(),
        ))
    })
}
