//! Sufficient conditions for the invariant algebras of every variety
//! containing 𝔏 to be infinitely generated.
//!
//! Two kinds of verdict come out of here. The finite-group and
//! Weitzenböck rules compare a known transcendence degree (`d` for finite
//! groups, `d - 1` for Weitzenböck constants) with the dimension of the
//! linear invariants; when the former is larger the conclusion holds
//! outright. The metabelian rule can only collect evidence from a
//! truncated dimension table, and its verdicts are labelled as such.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{component_dim, l_mul, AlgebraKind, BasisIndex, GradedAlgebra, LAlgebra, LElement};
use crate::error::{Error, Result};
use crate::exact::{Echelon, Subspace};
use crate::invariants::{
    delta_constants, fixed_space, linear_invariants, weitzenbock_from_blocks, FiniteMatrixGroup,
    WeitzenbockDerivation,
};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    NotFinitelyGenerated,
    Inconclusive,
    TrivialGroup,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NotFinitelyGenerated => "NotFinitelyGenerated",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::TrivialGroup => "TrivialGroup",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Finite nontrivial group: transcendence degree `d` exceeds `dim (KX_d)^G`.
    FiniteGroup,
    /// Weitzenböck derivation with `p` blocks: `d - 1 > p` when `p < d - 1`.
    WeitzenbockBlocks,
    /// No linear invariants and metabelian invariants keep appearing.
    MetabelianEvidence,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::FiniteGroup => "finite-group",
            Rule::WeitzenbockBlocks => "weitzenbock-blocks",
            Rule::MetabelianEvidence => "metabelian-evidence",
        })
    }
}

/// Whether a verdict is a consequence of exact facts or only of a
/// truncated computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Exact,
    EvidenceAtTruncation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    /// Transcendence degree of the polynomial invariants (a known value,
    /// never computed).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transcendence_degree: Option<usize>,
    /// Dimension of the linear invariants or linear constants.
    pub linear_invariant_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<usize>>,
    /// Metabelian invariant dimensions for degrees `1..=N`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence_degree: Option<usize>,
}

impl Witness {
    fn exact(linear_invariant_dim: usize) -> Self {
        Self {
            kind: WitnessKind::Exact,
            transcendence_degree: None,
            linear_invariant_dim,
            group_order: None,
            blocks: None,
            dims: None,
            evidence_degree: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub verdict: Verdict,
    pub rule: Rule,
    pub witness: Witness,
}

/// Every nontrivial finite group yields infinitely generated invariants.
pub fn check_finite_group(group: &FiniteMatrixGroup) -> Result<CriterionVerdict> {
    let d = group.d();
    let m = linear_invariants(group)?.dim();
    let mut witness = Witness::exact(m);
    witness.group_order = Some(group.order());
    if group.is_trivial() {
        return Ok(CriterionVerdict {
            verdict: Verdict::TrivialGroup,
            rule: Rule::FiniteGroup,
            witness,
        });
    }
    // A group acting trivially on KX_d is trivial inside GL_d.
    assert!(m < d, "nontrivial group fixes every linear form");
    witness.transcendence_degree = Some(d);
    Ok(CriterionVerdict {
        verdict: Verdict::NotFinitelyGenerated,
        rule: Rule::FiniteGroup,
        witness,
    })
}

/// Fewer than `d - 1` Jordan blocks (with `d > 2`) decides the question;
/// exactly `d - 1` blocks is left open; `d` blocks means `δ = 0`.
pub fn check_weitzenbock(delta: &WeitzenbockDerivation) -> CriterionVerdict {
    let d = delta.d();
    let p = delta.p();
    let mut witness = Witness::exact(p);
    witness.blocks = Some(delta.blocks().to_vec());
    let verdict = if p == d {
        Verdict::TrivialGroup
    } else if d > 2 && p < d - 1 {
        witness.transcendence_degree = Some(d - 1);
        Verdict::NotFinitelyGenerated
    } else {
        Verdict::Inconclusive
    };
    CriterionVerdict {
        verdict,
        rule: Rule::WeitzenbockBlocks,
        witness,
    }
}

/// Without linear invariants, infinitely many metabelian invariants force
/// infinite generation. A finite table cannot show infinitude, so the rule
/// fires when invariants still occur in the upper half `(N/2, N]` of the
/// sampled degrees, and the witness is marked as truncation evidence.
pub fn check_metabelian(group: &FiniteMatrixGroup, max_degree: usize) -> Result<CriterionVerdict> {
    let m = linear_invariants(group)?.dim();
    let mut witness = Witness::exact(m);
    witness.group_order = Some(group.order());
    if m > 0 {
        return Ok(CriterionVerdict {
            verdict: Verdict::Inconclusive,
            rule: Rule::MetabelianEvidence,
            witness,
        });
    }
    let dims = par::map_range(1..max_degree + 1, |n| {
        fixed_space(group, AlgebraKind::Metabelian, n).map(|b| b.dim())
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let persistent = (max_degree / 2 + 1..=max_degree).any(|n| dims[n - 1] > 0);
    witness.kind = WitnessKind::EvidenceAtTruncation;
    witness.dims = Some(dims);
    witness.evidence_degree = Some(max_degree);
    Ok(CriterionVerdict {
        verdict: if persistent {
            Verdict::NotFinitelyGenerated
        } else {
            Verdict::Inconclusive
        },
        rule: Rule::MetabelianEvidence,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkRow {
    pub n: usize,
    pub span_dim: usize,
    pub constants_dim: usize,
    pub generated: bool,
}

/// For `δ(x_1) = x_2`, `δ(x_i) = 0` (`i ≥ 2`), checks degree by degree
/// that the constants of `F_d(𝔏)` are spanned by products of
/// `x_1 x_2 - x_2 x_1, x_2, ..., x_d`.
pub fn remark_generation_check(d: usize, max_degree: usize) -> Result<Vec<RemarkRow>> {
    if d < 2 {
        return Err(Error::Invalid("the derivation needs d >= 2".into()));
    }
    let mut blocks = vec![2];
    blocks.extend(std::iter::repeat_n(1, d - 2));
    let delta = weitzenbock_from_blocks(&blocks)?;
    let alg = LAlgebra::new(d);
    let linear: Vec<LElement> = (1..d).map(|i| alg.x(i)).collect();
    let commutator = &alg.word(&[0, 1]) - &alg.word(&[1, 0]);

    let mut rows = Vec::new();
    let mut current: Vec<LElement> = linear.clone();
    for n in 1..=max_degree {
        if n > 1 {
            let pairs: Vec<(usize, usize)> = (0..current.len())
                .flat_map(|i| (0..linear.len()).map(move |j| (i, j)))
                .collect();
            let mut products = par::map(&pairs, |&(i, j)| l_mul(&current[i], &linear[j]));
            if n == 2 {
                products.push(commutator.clone());
            }
            current = independent(&alg, n, products);
        }
        let index = BasisIndex::new(alg.basis(n));
        let span = Subspace::span(
            component_dim(AlgebraKind::L, d, n),
            current.iter().map(|e| index.coordinates(e)),
        )?;
        let constants = delta_constants(&delta, AlgebraKind::L, n)?.space;
        rows.push(RemarkRow {
            n,
            span_dim: span.dim(),
            constants_dim: constants.dim(),
            generated: span == constants,
        });
    }
    Ok(rows)
}

/// Drops linearly dependent elements, keeping the first occurrences.
fn independent(alg: &LAlgebra, n: usize, elems: Vec<LElement>) -> Vec<LElement> {
    let index = BasisIndex::new(alg.basis(n));
    let mut echelon = Echelon::new(index.len());
    elems
        .into_iter()
        .filter(|e| echelon.insert(index.coordinates(e)))
        .collect()
}
