//! Derivation metrics: running counts of theory-axiom and all-axiom leaves in
//! a clause's derivation tree, the theory fraction, and the theory distance.
//!
//! Counts are taken with multiplicity. A clause used twice in a derivation
//! tree contributes its leaves twice, so counts can grow exponentially with
//! derivation depth and are kept as unbounded integers.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::Zero;
use thiserror::Error;

/// How an input clause entered the problem.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum AxiomKind {
    InputAxiom,
    TheoryAxiom,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxiomCounts {
    pub theory: BigUint,
    pub all: BigUint,
}

impl AxiomCounts {
    pub fn new(theory: impl Into<BigUint>, all: impl Into<BigUint>) -> Self {
        AxiomCounts {
            theory: theory.into(),
            all: all.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("derived clause has no parents")]
    EmptyParents,
    #[error("theory split parameter d must be at least 1")]
    ZeroD,
}

/// Parameter `d`: the derivation of a refutation is expected to contain at
/// most one theory axiom per `d` axioms.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct TheorySplitParams {
    d: u32,
}

impl TheorySplitParams {
    pub fn new(d: u32) -> Result<Self, MetricsError> {
        if d == 0 {
            return Err(MetricsError::ZeroD);
        }
        Ok(TheorySplitParams { d })
    }

    pub fn d(self) -> u32 {
        self.d
    }
}

pub fn init_counts(kind: AxiomKind) -> AxiomCounts {
    match kind {
        AxiomKind::TheoryAxiom => AxiomCounts::new(1u32, 1u32),
        AxiomKind::InputAxiom => AxiomCounts::new(0u32, 1u32),
    }
}

/// Componentwise sum over the parents of a derived clause.
pub fn combine_counts<'a>(
    parents: impl IntoIterator<Item = &'a AxiomCounts>,
) -> Result<AxiomCounts, MetricsError> {
    let mut seen = false;
    let mut sum = AxiomCounts::new(0u32, 0u32);
    for p in parents {
        seen = true;
        sum.theory += &p.theory;
        sum.all += &p.all;
    }
    if !seen {
        return Err(MetricsError::EmptyParents);
    }
    Ok(sum)
}

/// Exact theory fraction `thAx / allAx`. Requires `all >= 1`.
pub fn frac(counts: &AxiomCounts) -> Ratio<BigUint> {
    Ratio::new(counts.theory.clone(), counts.all.clone())
}

/// `max(thAx * d - allAx, 0)`: how many further non-theory leaves the
/// derivation would need before its theory fraction drops to `1/d`.
pub fn th_distance(counts: &AxiomCounts, params: TheorySplitParams) -> BigUint {
    let scaled = &counts.theory * BigUint::from(params.d);
    if scaled > counts.all {
        scaled - &counts.all
    } else {
        BigUint::zero()
    }
}

pub fn is_zero_distance(counts: &AxiomCounts, params: TheorySplitParams) -> bool {
    th_distance(counts, params).is_zero()
}
