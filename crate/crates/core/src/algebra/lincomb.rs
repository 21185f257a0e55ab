use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{format_rational, Rational};

/// Finite linear combination of monomials with nonzero rational
/// coefficients, kept sorted by the monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<M: Ord> {
    terms: BTreeMap<M, Rational>,
}

impl<M: Ord + Clone> LinComb<M> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: M) -> Self {
        Self::term(m, Rational::one())
    }

    pub fn term(m: M, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, Rational)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, Rational)> {
        self.terms.into_iter()
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear<N: Ord + Clone>(&self, mut f: impl FnMut(&M) -> LinComb<N>) -> LinComb<N> {
        let mut out = LinComb::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Bilinear extension of a product given on monomials.
    pub fn bilinear<N: Ord + Clone, P: Ord + Clone>(
        &self,
        other: &LinComb<N>,
        mut f: impl FnMut(&M, &N) -> LinComb<P>,
    ) -> LinComb<P> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&f(a, b), &(x * y));
            }
        }
        out
    }
}

impl<M: Ord + Clone> Default for LinComb<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Ord + Clone> Add for &LinComb<M> {
    type Output = LinComb<M>;

    fn add(self, rhs: &LinComb<M>) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<M: Ord + Clone> Sub for &LinComb<M> {
    type Output = LinComb<M>;

    fn sub(self, rhs: &LinComb<M>) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<M: Ord + Clone> Neg for &LinComb<M> {
    type Output = LinComb<M>;

    fn neg(self) -> LinComb<M> {
        self.scale(&-Rational::one())
    }
}

impl<M: Ord + fmt::Display> fmt::Display for LinComb<M> {
    /// `c * m` terms joined by ` + `, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * {}", format_rational(c), m)?;
        }
        Ok(())
    }
}

impl<M: Ord + fmt::Display> fmt::Debug for LinComb<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
