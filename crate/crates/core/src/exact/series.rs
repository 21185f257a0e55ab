//! Truncated univariate power series with rational coefficients.

use std::fmt;

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series of the given truncation order; `coeffs` is padded with zeros
    /// or cut to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect(),
            order,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect(),
            order,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse to the same truncation order.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let order = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rational::format_rational).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Inverse of a series with nonzero constant term.
pub fn series_invert(p: &PowerSeries) -> Result<PowerSeries> {
    p.invert()
}

/// Coefficients of `det(I - g t)`, padded to order `order`.
///
/// Uses the Faddeev-LeVerrier recursion: with `M_1 = I` and
/// `M_k = g M_{k-1} + c_{k-1} I`, the coefficient of `t^k` is
/// `c_k = -tr(g M_k) / k`.
pub fn det_one_minus_gt(g: &Matrix, order: usize) -> Result<PowerSeries> {
    g.ensure_square()?;
    let d = g.rows();
    let identity = Matrix::identity(d);
    let mut coeffs = vec![Rational::one()];
    let mut m = identity.clone();
    for k in 1..=d {
        if k > 1 {
            let prev = coeffs[k - 1].clone();
            m = &(g * &m) + &identity.scale(&prev);
        }
        let gm = g * &m;
        coeffs.push(-gm.trace() / rational::int(k as i64));
    }
    Ok(PowerSeries::new(coeffs, order))
}
