//! The free metabelian Lie algebra.
//!
//! Basis: generators `x_i` and left-normed commutators
//! `[x_{i_1}, x_{i_2}, ..., x_{i_n}]` with `i_1 > i_2 ≤ i_3 ≤ ... ≤ i_n`.
//! In a metabelian algebra the entries after the first two commute, so a
//! commutator is `[a, b | T]` with `T` a multiset, antisymmetric in `a, b`.
//! Normal form puts the global minimum in second position using one Jacobi
//! step: `[a, b, c | T] = [a, c, b | T] + [c, b, a | T]`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use super::graded::GradedAlgebra;
use super::lincomb::LinComb;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::schur::{glmodule_series_metabelian, SymmSeries};

/// Basis monomial (indices 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MetabMonomial {
    Gen(usize),
    /// `[x_first, x_rest[0], x_rest[1], ...]` with `first > rest[0]` and
    /// `rest` weakly increasing.
    Comm { first: usize, rest: Vec<usize> },
}

impl MetabMonomial {
    pub fn comm(first: usize, rest: Vec<usize>) -> Result<Self> {
        let ok = !rest.is_empty()
            && first > rest[0]
            && rest.windows(2).all(|w| w[0] <= w[1]);
        if ok {
            Ok(Self::Comm { first, rest })
        } else {
            Err(Error::Invalid(format!(
                "[{first}, {rest:?}] is not a normal-form commutator"
            )))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Gen(_) => 1,
            Self::Comm { rest, .. } => 1 + rest.len(),
        }
    }

    fn key(&self) -> (usize, usize, &[usize]) {
        match self {
            Self::Gen(i) => (1, *i, &[]),
            Self::Comm { first, rest } => (1 + rest.len(), *first, rest),
        }
    }
}

impl Ord for MetabMonomial {
    /// Degree, then first index, then the rest lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for MetabMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MetabMonomial {
    /// `x{i}` for generators, `[i1,i2,...]` for commutators (1-based).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gen(i) => write!(f, "x{{{}}}", i + 1),
            Self::Comm { first, rest } => {
                write!(f, "[{}", first + 1)?;
                for r in rest {
                    write!(f, ",{}", r + 1)?;
                }
                f.write_str("]")
            }
        }
    }
}

pub type MetabElement = LinComb<MetabMonomial>;

/// Normal form of `[x_a, x_b, x_{t_1}, ..., x_{t_k}]` for any multiset `t`.
fn normalize(a: usize, b: usize, mut tail: Vec<usize>) -> MetabElement {
    if a == b {
        return LinComb::zero();
    }
    let (a, b, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
    let sign = Rational::from_integer(sign.into());
    tail.sort_unstable();
    match tail.first() {
        Some(&m) if m < b => {
            // [a,b,m|T'] = [a,m|T'+b] + [m,b|T'+a] = [a,m|T'+b] - [b,m|T'+a]
            let rest = &tail[1..];
            let first = comm_sorted(a, m, rest, b);
            let second = comm_sorted(b, m, rest, a);
            let mut out = LinComb::term(first, sign.clone());
            out.add_term(second, -sign);
            out
        }
        _ => {
            let mut rest = vec![b];
            rest.extend(tail);
            LinComb::term(MetabMonomial::Comm { first: a, rest }, sign)
        }
    }
}

/// `[x_first, x_second | rest + extra]` where `first > second` and
/// `second` is at most every tail entry.
fn comm_sorted(first: usize, second: usize, rest: &[usize], extra: usize) -> MetabMonomial {
    let mut tail: Vec<usize> = rest.to_vec();
    let pos = tail.partition_point(|&x| x <= extra);
    tail.insert(pos, extra);
    let mut full = vec![second];
    full.extend(tail);
    MetabMonomial::Comm { first, rest: full }
}

fn bracket_monomials(u: &MetabMonomial, v: &MetabMonomial) -> MetabElement {
    use MetabMonomial::*;
    match (u, v) {
        (Gen(i), Gen(j)) => normalize(*i, *j, Vec::new()),
        (Comm { first, rest }, Gen(j)) => {
            let mut tail = rest[1..].to_vec();
            tail.push(*j);
            normalize(*first, rest[0], tail)
        }
        (Gen(_), Comm { .. }) => bracket_monomials(v, u).scale(&-Rational::one()),
        (Comm { .. }, Comm { .. }) => LinComb::zero(),
    }
}

/// Lie bracket in the free metabelian Lie algebra.
pub fn metab_bracket(a: &MetabElement, b: &MetabElement) -> MetabElement {
    a.bilinear(b, bracket_monomials)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetabelianAlgebra {
    d: usize,
}

impl MetabelianAlgebra {
    pub fn new(d: usize) -> Self {
        assert!(d >= 1, "need at least one generator");
        Self { d }
    }

    pub fn x(&self, i: usize) -> MetabElement {
        LinComb::monomial(MetabMonomial::Gen(i))
    }

    /// Left-normed commutator of generators, in normal form.
    pub fn commutator(&self, word: &[usize]) -> MetabElement {
        let mut acc = self.x(word[0]);
        for &i in &word[1..] {
            acc = metab_bracket(&acc, &self.x(i));
        }
        acc
    }
}

impl GradedAlgebra for MetabelianAlgebra {
    type Monomial = MetabMonomial;

    fn kind(&self) -> super::AlgebraKind {
        super::AlgebraKind::Metabelian
    }

    fn d(&self) -> usize {
        self.d
    }

    fn basis(&self, n: usize) -> Vec<MetabMonomial> {
        metab_basis(self.d, n)
    }

    fn degree(&self, m: &MetabMonomial) -> usize {
        m.degree()
    }

    fn generator(&self, i: usize) -> MetabMonomial {
        MetabMonomial::Gen(i)
    }

    fn letters(&self, m: &MetabMonomial) -> Vec<usize> {
        match m {
            MetabMonomial::Gen(i) => vec![*i],
            MetabMonomial::Comm { first, rest } => {
                let mut w = vec![*first];
                w.extend_from_slice(rest);
                w
            }
        }
    }

    fn mul_generator(&self, m: &MetabMonomial, j: usize) -> MetabElement {
        bracket_monomials(m, &MetabMonomial::Gen(j))
    }

    fn glmodule_series(&self, max_degree: usize) -> SymmSeries {
        glmodule_series_metabelian(self.d, max_degree)
    }
}

/// Degree-`n` basis ordered by first index, then the rest lexicographically.
pub fn metab_basis(d: usize, n: usize) -> Vec<MetabMonomial> {
    match n {
        0 => Vec::new(),
        1 => (0..d).map(MetabMonomial::Gen).collect(),
        _ => {
            let mut out = Vec::new();
            for first in 1..d {
                for second in 0..first {
                    for tail in super::graded::multisets(d - second, n - 2) {
                        let mut rest = vec![second];
                        rest.extend(super::graded::exponent_letters(&tail).iter().map(|&i| i + second));
                        out.push(MetabMonomial::Comm { first, rest });
                    }
                }
            }
            out.sort();
            out
        }
    }
}
