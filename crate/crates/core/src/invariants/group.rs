use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::Matrix;

/// Default bound on the number of elements `group_closure` will produce.
pub const DEFAULT_CAP: usize = 10_000;

/// A finite group of invertible rational `d x d` matrices with its full
/// element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMatrixGroup {
    d: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
}

impl FiniteMatrixGroup {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    /// Elements in breadth-first order from the identity; each layer is
    /// sorted lexicographically by entries.
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Saturates the generators under multiplication.
pub fn group_closure(generators: &[Matrix], cap: usize) -> Result<FiniteMatrixGroup> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    first.ensure_square()?;
    let d = first.rows();
    for (i, g) in generators.iter().enumerate() {
        g.ensure_square()?;
        if g.rows() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: g.rows(),
            });
        }
        if g.inverse().is_none() {
            return Err(Error::SingularGenerator(i));
        }
    }

    let identity = Matrix::identity(d);
    let mut seen: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity.clone()];
    let mut layer = vec![identity];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for x in &layer {
            for g in generators {
                let y = g * x;
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
            if seen.len() > cap {
                return Err(Error::GroupNotFinite { cap });
            }
        }
        next.sort();
        elements.extend(next.iter().cloned());
        layer = next;
    }
    Ok(FiniteMatrixGroup {
        d,
        generators: generators.to_vec(),
        elements,
    })
}

/// On-disk group description: `{"d": 2, "generators": [[["0","-1"],["1","0"]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub d: usize,
    pub generators: Vec<Matrix>,
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GroupSpec =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("group spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::Invalid("group spec: d must be positive".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        for g in &self.generators {
            if g.rows() != self.d || g.cols() != self.d {
                return Err(Error::Invalid(format!(
                    "group spec: generator of shape {}x{} in dimension {}",
                    g.rows(),
                    g.cols(),
                    self.d
                )));
            }
        }
        Ok(())
    }

    pub fn close(&self, cap: usize) -> Result<FiniteMatrixGroup> {
        group_closure(&self.generators, cap)
    }
}

/// Small groups used throughout the tests, benches and docs.
pub mod standard {
    use super::*;

    pub fn trivial(d: usize) -> FiniteMatrixGroup {
        group_closure(&[Matrix::identity(d)], DEFAULT_CAP).expect("finite")
    }

    /// `{I, -I}`.
    pub fn minus_identity(d: usize) -> FiniteMatrixGroup {
        group_closure(&[Matrix::identity(d).scale(&int(-1))], DEFAULT_CAP).expect("finite")
    }

    /// Cyclic group of order 4 generated by the quarter-turn rotation.
    pub fn rotation_c4() -> FiniteMatrixGroup {
        group_closure(&[Matrix::from_i64(&[&[0, -1], &[1, 0]])], DEFAULT_CAP).expect("finite")
    }

    /// `x_1 <-> x_2`.
    pub fn swap() -> FiniteMatrixGroup {
        group_closure(&[Matrix::from_i64(&[&[0, 1], &[1, 0]])], DEFAULT_CAP).expect("finite")
    }

    /// Permutation matrices of `S_d`, generated by a transposition and a
    /// `d`-cycle.
    pub fn symmetric(d: usize) -> FiniteMatrixGroup {
        let perm = |p: &[usize]| {
            let mut m = Matrix::zeros(d, d);
            for (i, &j) in p.iter().enumerate() {
                m.set(j, i, int(1));
            }
            m
        };
        let mut transposition: Vec<usize> = (0..d).collect();
        transposition.swap(0, 1);
        let cycle: Vec<usize> = (0..d).map(|i| (i + 1) % d).collect();
        group_closure(&[perm(&transposition), perm(&cycle)], DEFAULT_CAP).expect("finite")
    }
}
