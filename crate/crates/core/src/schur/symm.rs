//! Graded `GL_d`-module decompositions and their characters at group
//! elements.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::{weyl_dim, Partition};
use crate::error::{Error, Result};
use crate::exact::{det_one_minus_gt, Matrix, PowerSeries, Rational};
use crate::par;

/// Multiplicities `λ ↦ m_λ` of `W_d(λ)` for `|λ| ≤ N`, at most `d` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmSeries {
    d: usize,
    max_degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SymmSeries {
    pub fn new(d: usize, max_degree: usize) -> Self {
        Self {
            d,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Adds `mult` to the multiplicity of `lambda`. Partitions beyond the
    /// truncation are ignored; partitions with more than `d` parts are
    /// rejected.
    pub fn add(&mut self, lambda: Partition, mult: i64) -> Result<()> {
        lambda.check_fits(self.d)?;
        if lambda.size() > self.max_degree || mult == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.terms.retain(|_, m| *m != 0);
        }
        Ok(())
    }

    pub fn mult(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero terms in partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn degree_terms(&self, n: usize) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms().filter(move |(p, _)| p.size() == n)
    }

    /// Dimension of each homogeneous component, degrees `0..=N`.
    pub fn dims(&self) -> Vec<i64> {
        let mut dims = vec![0i64; self.max_degree + 1];
        for (lambda, m) in self.terms() {
            let w = weyl_dim(lambda, self.d).expect("stored partitions fit") as i64;
            dims[lambda.size()] += m * w;
        }
        dims
    }

    /// Termwise difference, truncated to the smaller order.
    pub fn sub(&self, other: &SymmSeries) -> Result<SymmSeries> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: other.d,
            });
        }
        let mut out = SymmSeries::new(self.d, self.max_degree.min(other.max_degree));
        for (p, m) in self.terms() {
            out.add(p.clone(), m)?;
        }
        for (p, m) in other.terms() {
            out.add(p.clone(), -m)?;
        }
        Ok(out)
    }

    /// Keeps only the terms with `lo ≤ |λ| ≤ hi`.
    pub fn restrict_degrees(&self, lo: usize, hi: usize) -> SymmSeries {
        SymmSeries {
            d: self.d,
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| (lo..=hi).contains(&p.size()))
                .map(|(p, &m)| (p.clone(), m))
                .collect(),
        }
    }

    /// One line `λ_1,λ_2,...: m` per nonzero term.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (p, m) in self.terms() {
            let _ = writeln!(out, "{p}: {m}");
        }
        out
    }

    pub fn from_text(d: usize, max_degree: usize, text: &str) -> Result<Self> {
        let mut out = Self::new(d, max_degree);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (lhs, rhs) = line
                .rsplit_once(':')
                .ok_or_else(|| Error::Invalid(format!("bad series line {line:?}")))?;
            let mult = rhs
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Invalid(format!("bad multiplicity in {line:?}")))?;
            out.add(lhs.parse()?, mult)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> SymmSeriesJson {
        SymmSeriesJson {
            d: self.d,
            max_degree: self.max_degree,
            terms: self
                .terms()
                .map(|(p, m)| SymmTerm {
                    partition: p.clone(),
                    mult: m,
                })
                .collect(),
        }
    }

    pub fn from_json(json: &SymmSeriesJson) -> Result<Self> {
        let mut out = Self::new(json.d, json.max_degree);
        for t in &json.terms {
            out.add(t.partition.clone(), t.mult)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmSeriesJson {
    pub d: usize,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub terms: Vec<SymmTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmTerm {
    pub partition: Partition,
    pub mult: i64,
}

/// `F_d(𝔏) = W(1) + Σ_{n≥2} (W(n) + W(n-1,1))`.
pub fn glmodule_series_l(d: usize, max_degree: usize) -> SymmSeries {
    let mut s = SymmSeries::new(d, max_degree);
    push(&mut s, vec![1]);
    for n in 2..=max_degree {
        push(&mut s, vec![n]);
        push(&mut s, vec![n - 1, 1]);
    }
    s
}

/// Free metabelian Lie algebra: `W(1) + Σ_{n≥2} W(n-1,1)`.
pub fn glmodule_series_metabelian(d: usize, max_degree: usize) -> SymmSeries {
    let mut s = SymmSeries::new(d, max_degree);
    push(&mut s, vec![1]);
    for n in 2..=max_degree {
        push(&mut s, vec![n - 1, 1]);
    }
    s
}

/// Polynomial algebra: `Σ_{n≥0} W(n)`.
pub fn glmodule_series_poly(d: usize, max_degree: usize) -> SymmSeries {
    let mut s = SymmSeries::new(d, max_degree);
    push(&mut s, vec![]);
    for n in 1..=max_degree {
        push(&mut s, vec![n]);
    }
    s
}

fn push(s: &mut SymmSeries, parts: Vec<usize>) {
    let p = Partition::new(parts).expect("valid partition");
    if p.len() <= s.d {
        s.add(p, 1).expect("fits");
    }
}

/// Complete homogeneous symmetric functions `h_0..h_N` evaluated at the
/// eigenvalues of a matrix, read off from `1 / det(I - g t)`.
#[derive(Clone, Debug)]
pub struct Characters {
    h: Vec<Rational>,
}

impl Characters {
    pub fn new(g: &Matrix, order: usize) -> Result<Self> {
        let h = det_one_minus_gt(g, order)?.invert()?;
        Ok(Self {
            h: h.coeffs().to_vec(),
        })
    }

    fn h(&self, k: i64) -> Rational {
        match k {
            k if k < 0 => Rational::zero(),
            0 => Rational::one(),
            k => self.h.get(k as usize).cloned().expect("h order large enough"),
        }
    }

    /// `S_λ` at the eigenvalues via the Jacobi-Trudi determinant
    /// `det(h_{λ_i - i + j})`.
    pub fn schur(&self, lambda: &Partition) -> Rational {
        let k = lambda.len();
        if k == 0 {
            return Rational::one();
        }
        let entries = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| self.h(lambda.part(i) as i64 - i as i64 + j as i64))
            .collect();
        Matrix::new(k, k, entries)
            .expect("square Jacobi-Trudi matrix")
            .det()
            .expect("square")
    }
}

/// Trace of `g` on `W_d(λ)`.
pub fn schur_char(lambda: &Partition, g: &Matrix) -> Result<Rational> {
    g.ensure_square()?;
    lambda.check_fits(g.rows())?;
    let order = lambda.part(0) + lambda.len();
    Ok(Characters::new(g, order)?.schur(lambda))
}

/// `Σ_n (Σ_{|λ|=n} m_λ S_λ(ξ(g))) z^n`: the graded trace of `g`.
pub fn series_eval_at_element(s: &SymmSeries, g: &Matrix) -> Result<PowerSeries> {
    g.ensure_square()?;
    if g.rows() != s.d {
        return Err(Error::DimensionMismatch {
            expected: s.d,
            found: g.rows(),
        });
    }
    let chars = Characters::new(g, s.max_degree + s.d)?;
    let terms: Vec<(&Partition, i64)> = s.terms().collect();
    let values = par::map(&terms, |(lambda, m)| {
        (lambda.size(), chars.schur(lambda) * Rational::from_integer((*m).into()))
    });
    let mut coeffs = vec![Rational::zero(); s.max_degree + 1];
    for (n, v) in values {
        coeffs[n] += v;
    }
    Ok(PowerSeries::new(coeffs, s.max_degree))
}
