//! The common surface of the three graded algebras: deterministic bases,
//! right multiplication by generators, the diagonal `GL_d` action and
//! derivations induced by linear maps on the generators.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lincomb::LinComb;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::schur::SymmSeries;

/// Which relatively free algebra a computation runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// Left-nilpotent right-symmetric algebra `F_d(𝔏)`.
    #[serde(rename = "L")]
    L,
    /// Free metabelian Lie algebra.
    #[serde(rename = "metabelian")]
    Metabelian,
    /// Polynomial algebra `K[X_d]`.
    #[serde(rename = "poly")]
    Poly,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [AlgebraKind::Poly, AlgebraKind::Metabelian, AlgebraKind::L];

    /// Lowest degree with a nonzero component.
    pub fn min_degree(self) -> usize {
        match self {
            AlgebraKind::Poly => 0,
            AlgebraKind::L | AlgebraKind::Metabelian => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::L => "L",
            AlgebraKind::Metabelian => "metabelian",
            AlgebraKind::Poly => "poly",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(AlgebraKind::L),
            "metabelian" | "metab" | "M" => Ok(AlgebraKind::Metabelian),
            "poly" | "P" => Ok(AlgebraKind::Poly),
            other => Err(Error::Invalid(format!("unknown algebra {other:?}"))),
        }
    }
}

/// A graded algebra on `d` generators whose basis monomials are
/// left-normed products of generators.
pub trait GradedAlgebra: Sync + Send {
    type Monomial: Clone + Ord + Hash + fmt::Display + fmt::Debug + Send + Sync;

    fn kind(&self) -> AlgebraKind;

    fn d(&self) -> usize;

    /// Degree-`n` basis in its fixed order.
    fn basis(&self, n: usize) -> Vec<Self::Monomial>;

    fn degree(&self, m: &Self::Monomial) -> usize;

    /// The generator `x_i`, 0-based.
    fn generator(&self, i: usize) -> Self::Monomial;

    /// Generator indices `i_1, ..., i_n` with `m = (...(x_{i_1} x_{i_2}) ...) x_{i_n}`.
    fn letters(&self, m: &Self::Monomial) -> Vec<usize>;

    /// `m · x_j` in basis form.
    fn mul_generator(&self, m: &Self::Monomial, j: usize) -> LinComb<Self::Monomial>;

    /// `GL_d`-module decomposition up to degree `max_degree`.
    fn glmodule_series(&self, max_degree: usize) -> SymmSeries;
}

/// `elem · (Σ_j c_j x_j)`.
pub fn right_mul_linear<A: GradedAlgebra>(
    alg: &A,
    elem: &LinComb<A::Monomial>,
    linear: &[Rational],
) -> LinComb<A::Monomial> {
    let mut out = LinComb::zero();
    for (j, c) in linear.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out.add_scaled(&elem.map_linear(|m| alg.mul_generator(m, j)), c);
    }
    out
}

/// Linear form `Σ_j c_j x_j` as an element.
pub fn linear_element<A: GradedAlgebra>(alg: &A, linear: &[Rational]) -> LinComb<A::Monomial> {
    LinComb::from_terms(
        linear
            .iter()
            .enumerate()
            .map(|(j, c)| (alg.generator(j), c.clone())),
    )
}

/// Left-normed product of linear forms.
fn evaluate_word<A: GradedAlgebra>(alg: &A, factors: &[&[Rational]]) -> LinComb<A::Monomial> {
    let (first, rest) = factors.split_first().expect("nonempty word");
    let mut acc = linear_element(alg, first);
    for f in rest {
        if acc.is_zero() {
            break;
        }
        acc = right_mul_linear(alg, &acc, f);
    }
    acc
}

fn columns(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

fn units(d: usize) -> Vec<Vec<Rational>> {
    (0..d)
        .map(|i| {
            let mut v = vec![Rational::zero(); d];
            v[i] = Rational::one();
            v
        })
        .collect()
}

fn check_square(alg: &impl GradedAlgebra, g: &Matrix) -> Result<()> {
    g.ensure_square()?;
    if g.rows() != alg.d() {
        return Err(Error::DimensionMismatch {
            expected: alg.d(),
            found: g.rows(),
        });
    }
    Ok(())
}

/// Image of a monomial under the automorphism `x_i ↦ Σ_j g_{ji} x_j`.
fn substitute_monomial<A: GradedAlgebra>(
    alg: &A,
    cols: &[Vec<Rational>],
    m: &A::Monomial,
) -> LinComb<A::Monomial> {
    let letters = alg.letters(m);
    if letters.is_empty() {
        return LinComb::monomial(m.clone());
    }
    let factors: Vec<&[Rational]> = letters.iter().map(|&i| cols[i].as_slice()).collect();
    evaluate_word(alg, &factors)
}

/// Diagonal action `f(x_1, ..., x_d) ↦ f(g(x_1), ..., g(x_d))`, where
/// `g(x_i) = Σ_j g_{ji} x_j` (column `i` of `g`). This is a left action:
/// `substitute(gh, v) = substitute(g, substitute(h, v))`.
pub fn substitute<A: GradedAlgebra>(
    alg: &A,
    g: &Matrix,
    elem: &LinComb<A::Monomial>,
) -> Result<LinComb<A::Monomial>> {
    check_square(alg, g)?;
    let cols = columns(g);
    Ok(elem.map_linear(|m| substitute_monomial(alg, &cols, m)))
}

fn derive_monomial<A: GradedAlgebra>(
    alg: &A,
    cols: &[Vec<Rational>],
    units: &[Vec<Rational>],
    m: &A::Monomial,
) -> LinComb<A::Monomial> {
    let letters = alg.letters(m);
    let mut out = LinComb::zero();
    for pos in 0..letters.len() {
        let image = &cols[letters[pos]];
        if image.iter().all(Zero::is_zero) {
            continue;
        }
        let factors: Vec<&[Rational]> = letters
            .iter()
            .enumerate()
            .map(|(k, &i)| if k == pos { image.as_slice() } else { units[i].as_slice() })
            .collect();
        out.add_scaled(&evaluate_word(alg, &factors), &Rational::one());
    }
    out
}

/// Derivation extending `x_i ↦ Σ_j δ_{ji} x_j` by the Leibniz rule.
pub fn derivation_apply<A: GradedAlgebra>(
    alg: &A,
    delta: &Matrix,
    elem: &LinComb<A::Monomial>,
) -> Result<LinComb<A::Monomial>> {
    check_square(alg, delta)?;
    let cols = columns(delta);
    let units = units(alg.d());
    Ok(elem.map_linear(|m| derive_monomial(alg, &cols, &units, m)))
}

/// Coordinates with respect to a fixed ordered basis.
pub struct BasisIndex<M> {
    basis: Vec<M>,
    index: HashMap<M, usize>,
}

impl<M: Clone + Ord + Hash> BasisIndex<M> {
    pub fn new(basis: Vec<M>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { basis, index }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[M] {
        &self.basis
    }

    /// Panics if `elem` has a term outside the basis.
    pub fn coordinates(&self, elem: &LinComb<M>) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.basis.len()];
        for (m, c) in elem.terms() {
            let i = *self.index.get(m).expect("term lies in the indexed component");
            v[i] = c.clone();
        }
        v
    }

    pub fn element(&self, coords: &[Rational]) -> LinComb<M> {
        LinComb::from_terms(
            self.basis
                .iter()
                .cloned()
                .zip(coords.iter().cloned()),
        )
    }
}

/// Matrix of a linear map on the degree-`n` component, columns indexed by
/// the basis. Fails on a zero component.
pub fn component_matrix<A: GradedAlgebra>(
    alg: &A,
    n: usize,
    f: impl Fn(&A::Monomial) -> LinComb<A::Monomial> + Sync + Send,
) -> Result<Matrix> {
    let index = BasisIndex::new(alg.basis(n));
    if index.is_empty() {
        return Err(Error::Invalid(format!(
            "the degree {n} component of {} is zero",
            alg.kind()
        )));
    }
    let cols = crate::par::map(index.basis(), |m| index.coordinates(&f(m)));
    Matrix::from_columns(index.len(), &cols)
}

/// Matrix of the diagonal action of `g` on the degree-`n` component.
pub fn action_matrix_in<A: GradedAlgebra>(alg: &A, g: &Matrix, n: usize) -> Result<Matrix> {
    check_square(alg, g)?;
    let cols = columns(g);
    component_matrix(alg, n, |m| substitute_monomial(alg, &cols, m))
}

/// Matrix of the derivation induced by `delta` on the degree-`n` component.
pub fn derivation_matrix_in<A: GradedAlgebra>(alg: &A, delta: &Matrix, n: usize) -> Result<Matrix> {
    check_square(alg, delta)?;
    let cols = columns(delta);
    let units = units(alg.d());
    component_matrix(alg, n, |m| derive_monomial(alg, &cols, &units, m))
}

/// Sorted index multisets of size `k` over `0..d`, in lexicographic order,
/// returned as exponent vectors.
pub(crate) fn multisets(d: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(d: usize, k: usize, start: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(exps.clone());
            return;
        }
        for i in start..d {
            exps[i] += 1;
            rec(d, k - 1, i, exps, out);
            exps[i] -= 1;
        }
    }
    let mut out = Vec::new();
    rec(d, k, 0, &mut vec![0; d], &mut out);
    out
}

/// Sorted index list of an exponent vector.
pub(crate) fn exponent_letters(exps: &[u32]) -> Vec<usize> {
    exps.iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
        .collect()
}

pub(crate) fn fmt_exponents(f: &mut fmt::Formatter<'_>, exps: &[u32]) -> fmt::Result {
    f.write_str("[")?;
    for (i, e) in exps.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str("]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets_in_lex_order() {
        assert_eq!(multisets(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(multisets(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(exponent_letters(&[1, 0, 2]), vec![0, 2, 2]);
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in AlgebraKind::ALL {
            assert_eq!(kind.name().parse::<AlgebraKind>().unwrap(), kind);
        }
        assert!("lie".parse::<AlgebraKind>().is_err());
    }
}
