use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigUint;
use num_rational::Ratio;

use super::signature::Signature;
use super::term::{display_literals, weight, Literal, Var};
use crate::metrics::{self, AxiomCounts, AxiomKind, MetricsError, TheorySplitParams};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClauseId(pub u64);

impl fmt::Display for ClauseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiplicative hashing for clause ids, which are small and mostly
/// consecutive. Not resistant to adversarial keys.
#[derive(Default)]
pub struct IdHasher(u64);

impl Hasher for IdHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0.rotate_left(8) ^ u64::from(b)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        }
    }

    fn write_u64(&mut self, n: u64) {
        self.0 = (self.0 ^ n).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }
}

pub type IdMap<V> = HashMap<ClauseId, V, BuildHasherDefault<IdHasher>>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Inference {
    Resolution,
    Factoring,
}

impl Inference {
    pub fn name(self) -> &'static str {
        match self {
            Inference::Resolution => "resolution",
            Inference::Factoring => "factoring",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    InputAxiom,
    TheoryAxiom,
    Derived(Inference),
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::InputAxiom => "axiom",
            Origin::TheoryAxiom => "theory_axiom",
            Origin::Derived(inf) => inf.name(),
        }
    }
}

impl From<AxiomKind> for Origin {
    fn from(kind: AxiomKind) -> Self {
        match kind {
            AxiomKind::InputAxiom => Origin::InputAxiom,
            AxiomKind::TheoryAxiom => Origin::TheoryAxiom,
        }
    }
}

/// A clause together with the bookkeeping clause selection needs: birth
/// order, symbol weight, and the axiom counts of its derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    id: ClauseId,
    literals: Vec<Literal>,
    age: u64,
    weight: u64,
    counts: AxiomCounts,
    origin: Origin,
    parents: Vec<ClauseId>,
}

impl Clause {
    pub fn axiom(id: ClauseId, age: u64, literals: Vec<Literal>, kind: AxiomKind) -> Clause {
        Clause {
            id,
            weight: weight(&literals),
            literals,
            age,
            counts: metrics::init_counts(kind),
            origin: kind.into(),
            parents: Vec::new(),
        }
    }

    /// A clause produced by `inference` from `parents`. Counts are the sums
    /// over the full parent list; repeated parents count repeatedly.
    pub fn derived(
        id: ClauseId,
        age: u64,
        literals: Vec<Literal>,
        inference: Inference,
        parents: &[&Clause],
    ) -> Result<Clause, MetricsError> {
        let counts = metrics::combine_counts(parents.iter().map(|p| &p.counts))?;
        Ok(Clause {
            id,
            weight: weight(&literals),
            literals,
            age,
            counts,
            origin: Origin::Derived(inference),
            parents: parents.iter().map(|p| p.id).collect(),
        })
    }

    pub fn id(&self) -> ClauseId {
        self.id
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn age(&self) -> u64 {
        self.age
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn counts(&self) -> &AxiomCounts {
        &self.counts
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn parents(&self) -> &[ClauseId] {
        &self.parents
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn frac(&self) -> Ratio<BigUint> {
        metrics::frac(&self.counts)
    }

    pub fn th_distance(&self, params: TheorySplitParams) -> BigUint {
        metrics::th_distance(&self.counts, params)
    }

    /// One past the largest variable id, or 0 for ground clauses.
    pub fn var_bound(&self) -> u32 {
        var_bound(&self.literals)
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut vs = Vec::new();
        for l in &self.literals {
            l.for_each_var(&mut |v| {
                if !vs.contains(&v) {
                    vs.push(v)
                }
            });
        }
        vs
    }

    /// Same literals counted as a multiset; order is ignored.
    pub fn same_literals(&self, other: &Clause) -> bool {
        same_literal_multiset(&self.literals, &other.literals)
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        ClauseDisplay { clause: self, sig }
    }

    fn with_literals(&self, literals: Vec<Literal>) -> Clause {
        Clause {
            literals,
            ..self.clone()
        }
    }
}

struct ClauseDisplay<'a> {
    clause: &'a Clause,
    sig: &'a Signature,
}

impl fmt::Display for ClauseDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_literals(&self.clause.literals, self.sig))
    }
}

pub fn var_bound(literals: &[Literal]) -> u32 {
    let mut bound = 0;
    for l in literals {
        l.for_each_var(&mut |v| bound = bound.max(v.0 + 1));
    }
    bound
}

pub fn same_literal_multiset(a: &[Literal], b: &[Literal]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    b.sort();
    a == b
}

/// Shifts every variable of `literals` by `offset`.
pub fn shift_vars(literals: &[Literal], offset: u32) -> Vec<Literal> {
    literals
        .iter()
        .map(|l| l.map_vars(&mut |v| Var(v.0 + offset)))
        .collect()
}

/// Renumbers variables to 0, 1, ... in order of first occurrence.
pub fn normalize_vars(literals: &[Literal]) -> Vec<Literal> {
    let mut out = literals.to_vec();
    normalize_vars_in_place(&mut out);
    out
}

pub(crate) fn normalize_vars_in_place(literals: &mut [Literal]) {
    let mut seen: Vec<Var> = Vec::new();
    for l in literals {
        l.rename_vars(&mut |v| match seen.iter().position(|w| *w == v) {
            Some(i) => Var(i as u32),
            None => {
                seen.push(v);
                Var(seen.len() as u32 - 1)
            }
        });
    }
}

/// Variable-disjoint variants of two clauses. The second clause is always
/// renamed, to ids above every variable of the first.
pub fn rename_apart(c1: &Clause, c2: &Clause) -> (Clause, Clause) {
    let offset = c1.var_bound();
    let renamed = c2.with_literals(shift_vars(&c2.literals, offset));
    (c1.clone(), renamed)
}
