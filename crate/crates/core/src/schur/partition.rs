use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition `λ_1 ≥ λ_2 ≥ ... ≥ λ_k ≥ 1`; the empty list is the
/// partition of zero.
///
/// Ordered by size first, then lexicographically by parts in descending
/// order, so `(2)` precedes `(1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let valid = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if valid {
            Ok(Self(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn check_fits(&self, d: usize) -> Result<()> {
        if self.len() > d {
            Err(Error::TooManyParts {
                parts: self.len(),
                d,
            })
        } else {
            Ok(())
        }
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// All partitions of `n` with at most `max_parts` parts, in the
    /// type's ordering.
    pub fn all_of(n: usize, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, max_parts, &mut current, &mut out);
        out
    }
}

fn fill(rest: usize, cap: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        current.push(p);
        fill(rest - p, p, slots - 1, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Invalid(format!("bad partition {s:?}")))?;
        Self::new(parts)
    }
}

/// Dimension of the irreducible polynomial `GL_d`-module `W_d(λ)`, i.e. the
/// number of semistandard tableaux of shape `λ` with entries in `1..=d`,
/// via the hook-content formula.
pub fn weyl_dim(lambda: &Partition, d: usize) -> Result<u64> {
    lambda.check_fits(d)?;
    let conj = lambda.conjugate();
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = d as i64 + j as i64 - i as i64;
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            numer *= BigInt::from(content);
            denom *= BigInt::from(hook);
        }
    }
    let (q, r) = numer.div_rem(&denom);
    debug_assert!(r == BigInt::from(0));
    Ok(q.to_u64().expect("dimension fits in u64"))
}

/// Partitions with at most `d` parts obtained from `λ` by adding one box.
pub fn branch_add_box(lambda: &Partition, d: usize) -> Result<Vec<Partition>> {
    lambda.check_fits(d)?;
    let mut out = Vec::new();
    for i in 0..=lambda.len() {
        if i >= d {
            break;
        }
        if i > 0 && lambda.part(i - 1) == lambda.part(i) {
            continue;
        }
        let mut parts = lambda.parts().to_vec();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        out.push(Partition(parts));
    }
    Ok(out)
}

/// Binomial coefficient as `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim(&p(&[3]), 2).unwrap(), 4);
        assert_eq!(weyl_dim(&p(&[1, 1]), 2).unwrap(), 1);
        assert_eq!(weyl_dim(&p(&[2, 1]), 3).unwrap(), 8);
        assert_eq!(weyl_dim(&Partition::empty(), 3).unwrap(), 1);
        assert_eq!(weyl_dim(&p(&[2, 2]), 3).unwrap(), 6);
        assert!(matches!(
            weyl_dim(&p(&[1, 1, 1]), 2),
            Err(Error::TooManyParts { parts: 3, d: 2 })
        ));
    }

    #[test]
    fn one_row_dims_are_binomials() {
        for d in 1..6 {
            for n in 0..8 {
                assert_eq!(
                    weyl_dim(&Partition::from_unsorted(vec![n]), d).unwrap(),
                    binomial((n + d - 1) as u64, (d - 1) as u64)
                );
            }
        }
    }

    #[test]
    fn branching() {
        assert_eq!(branch_add_box(&Partition::empty(), 2).unwrap(), vec![p(&[1])]);
        assert_eq!(
            branch_add_box(&p(&[2, 1]), 3).unwrap(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(branch_add_box(&p(&[2, 1]), 2).unwrap(), vec![p(&[3, 1]), p(&[2, 2])]);
        assert!(branch_add_box(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn enumeration_and_order() {
        let parts = Partition::all_of(4, 4);
        assert_eq!(
            parts,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(Partition::all_of(4, 2).len(), 3);
        assert_eq!(Partition::all_of(0, 0), vec![Partition::empty()]);
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(sorted, parts);
        assert!(p(&[1]) < p(&[1, 1]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }
}
