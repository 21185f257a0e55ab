use num_traits::{One, Zero};

use super::matrix::{rref_in_place, Matrix};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, kept as the nonzero rows of its reduced
/// row-echelon basis so that equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| unit_vector(ambient, i))
            .collect::<Vec<_>>();
        Self { ambient, basis }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rational>>) -> Result<Self> {
        let mut rows = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            rows.push(v);
        }
        rref_in_place(&mut rows, ambient);
        Ok(Self {
            ambient,
            basis: rows,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let mut rest = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if rest[pivot].is_zero() {
                continue;
            }
            let factor = rest[pivot].clone();
            for (x, y) in rest.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Basis of `{v : m v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![None; cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let vectors = (0..cols)
        .filter(|&f| is_pivot[f].is_none())
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                if !rows[r][free].is_zero() {
                    v[c] = -rows[r][free].clone();
                }
            }
            v
        });
    Subspace::span(cols, vectors).expect("kernel vectors have the column dimension")
}

/// Vectors of `space` that extend a basis of `sub` to a basis of `space`.
pub fn span_complement(space: &Subspace, sub: &Subspace) -> Result<Subspace> {
    if !space.contains_subspace(sub) {
        return Err(Error::NotSubspace);
    }
    let mut echelon = Echelon::new(space.ambient);
    for v in sub.basis() {
        echelon.insert(v.clone());
    }
    let chosen: Vec<_> = space
        .basis()
        .iter()
        .filter(|v| echelon.insert((*v).clone()))
        .cloned()
        .collect();
    Subspace::span(space.ambient, chosen)
}

/// Incremental row echelon form for growing spans one vector at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((pivot, v));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.ambient, self.rows.into_iter().map(|(_, v)| v))
            .expect("rows have the ambient dimension")
    }
}
