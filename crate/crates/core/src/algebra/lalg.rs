//! The relatively free algebra of the variety of left-nilpotent (class 3)
//! right-symmetric algebras.
//!
//! Every nonzero product is left-normed, and the factors after the first
//! commute, so a basis monomial is a head generator followed by a
//! multiset of tail generators.

use std::cmp::Ordering;
use std::fmt;

use super::graded::{exponent_letters, fmt_exponents, multisets, GradedAlgebra};
use super::lincomb::LinComb;
use super::poly::PolyMonomial;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::schur::{glmodule_series_l, SymmSeries};

/// `x_head · x_1^{e_1} ⋯ x_d^{e_d}` (head 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LMonomial {
    head: usize,
    tail: Vec<u32>,
}

impl LMonomial {
    pub fn new(head: usize, tail: Vec<u32>) -> Result<Self> {
        if head >= tail.len() {
            return Err(Error::Invalid(format!(
                "head index {head} out of range for {} generators",
                tail.len()
            )));
        }
        Ok(Self { head, tail })
    }

    /// Left-normed word `x_{i_1} x_{i_2} ⋯ x_{i_n}` (0-based indices).
    pub fn from_word(d: usize, word: &[usize]) -> Result<Self> {
        let (&head, rest) = word
            .split_first()
            .ok_or_else(|| Error::Invalid("empty word".into()))?;
        let mut tail = vec![0; d];
        for &i in rest {
            if i >= d {
                return Err(Error::Invalid(format!("index {i} out of range")));
            }
            tail[i] += 1;
        }
        Self::new(head, tail)
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn tail(&self) -> &[u32] {
        &self.tail
    }

    pub fn degree(&self) -> usize {
        1 + self.tail.iter().map(|&e| e as usize).sum::<usize>()
    }
}

impl Ord for LMonomial {
    /// Degree, then head, then tail as a sorted index list in lex order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.head.cmp(&other.head))
            .then_with(|| other.tail.cmp(&self.tail))
    }
}

impl PartialOrd for LMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LMonomial {
    /// `x{h}[e1,...,ed]` with a 1-based head.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{{{}}}", self.head + 1)?;
        fmt_exponents(f, &self.tail)
    }
}

pub type LElement = LinComb<LMonomial>;

/// `F_d(𝔏)` on `d` generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LAlgebra {
    d: usize,
}

impl LAlgebra {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "need at least one generator");
        Self { d }
    }

    /// Generator `x_i` as an element.
    pub fn x(&self, i: usize) -> LElement {
        LinComb::monomial(self.generator(i))
    }

    /// Left-normed word as an element.
    pub fn word(&self, word: &[usize]) -> LElement {
        LinComb::monomial(LMonomial::from_word(self.d, word).expect("valid word"))
    }
}

impl GradedAlgebra for LAlgebra {
    type Monomial = LMonomial;

    fn kind(&self) -> super::AlgebraKind {
        super::AlgebraKind::L
    }

    fn d(&self) -> usize {
        self.d
    }

    fn basis(&self, n: usize) -> Vec<LMonomial> {
        l_basis(self.d, n)
    }

    fn degree(&self, m: &LMonomial) -> usize {
        m.degree()
    }

    fn generator(&self, i: usize) -> LMonomial {
        LMonomial {
            head: i,
            tail: vec![0; self.d],
        }
    }

    fn letters(&self, m: &LMonomial) -> Vec<usize> {
        let mut word = vec![m.head];
        word.extend(exponent_letters(&m.tail));
        word
    }

    fn mul_generator(&self, m: &LMonomial, j: usize) -> LElement {
        let mut out = m.clone();
        out.tail[j] += 1;
        LinComb::monomial(out)
    }

    fn glmodule_series(&self, max_degree: usize) -> SymmSeries {
        glmodule_series_l(self.d, max_degree)
    }
}

/// Degree-`n` basis: every head with every tail multiset of size `n - 1`,
/// ordered by head, then tail.
pub fn l_basis(d: usize, n: usize) -> Vec<LMonomial> {
    if n == 0 {
        return Vec::new();
    }
    let tails = multisets(d, n - 1);
    (0..d)
        .flat_map(|head| {
            tails.iter().map(move |tail| LMonomial {
                head,
                tail: tail.clone(),
            })
        })
        .collect()
}

/// Product in `F_d(𝔏)`: `u · x_j` appends `j` to the tail, and any product
/// whose right factor has degree at least two vanishes.
pub fn l_mul(a: &LElement, b: &LElement) -> LElement {
    a.bilinear(b, |u, v| {
        if v.degree() == 1 {
            let mut out = u.clone();
            out.tail[v.head] += 1;
            LinComb::monomial(out)
        } else {
            LinComb::zero()
        }
    })
}

/// Right `K[X_d]`-module action: `(x_p x^a) ∘ x^b = x_p x^{a+b}`.
pub fn l_module_action(w: &LElement, f: &LinComb<PolyMonomial>) -> LElement {
    w.bilinear(f, |u, m| {
        let mut out = u.clone();
        for (t, e) in out.tail.iter_mut().zip(m.exponents()) {
            *t += e;
        }
        LinComb::monomial(out)
    })
}

/// Associator `(a, b, c) = a(bc) - (ab)c`.
pub fn l_associator(a: &LElement, b: &LElement, c: &LElement) -> LElement {
    &l_mul(a, &l_mul(b, c)) - &l_mul(&l_mul(a, b), c)
}

/// Sum of `coeff · word` terms, for building test elements by hand.
pub fn l_element(d: usize, terms: &[(i64, &[usize])]) -> LElement {
    LinComb::from_terms(terms.iter().map(|(c, w)| {
        (
            LMonomial::from_word(d, w).expect("valid word"),
            Rational::from_integer((*c).into()),
        )
    }))
}
