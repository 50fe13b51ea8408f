//! Given-clause saturation (Otter loop) with binary resolution and
//! factoring, tautology deletion and forward subsumption.

mod inference;
mod subsumption;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::kernel::{shift_vars, Clause, ClauseId, IdMap, Literal, Origin, SymbolId};
use crate::metrics::AxiomCounts;
use crate::passive::PassiveStore;
use crate::problem_io::{ProverResult, Statistics, Status};
use crate::theory::InjectedProblem;

pub use inference::{binary_resolution, factoring, is_tautology, Births};
pub use subsumption::subsumes;

use inference::{literals_are_tautology, resolve_with_shifted};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_activations: Option<u64>,
    pub max_generated: Option<u64>,
    pub time_budget: Option<Duration>,
}

impl Limits {
    pub fn activations(n: u64) -> Self {
        Limits {
            max_activations: Some(n),
            ..Limits::default()
        }
    }

    pub fn is_unbounded(&self) -> bool {
        self.max_activations.is_none() && self.max_generated.is_none() && self.time_budget.is_none()
    }
}

/// One proof step: the clause as it was born and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationRecord {
    pub id: ClauseId,
    pub origin: Origin,
    pub parents: Vec<ClauseId>,
    pub literals: Vec<Literal>,
    pub counts: AxiomCounts,
}

impl From<&Clause> for DerivationRecord {
    fn from(c: &Clause) -> Self {
        DerivationRecord {
            id: c.id(),
            origin: c.origin(),
            parents: c.parents().to_vec(),
            literals: c.literals().to_vec(),
            counts: c.counts().clone(),
        }
    }
}

type LitKey = (SymbolId, bool);

/// Activated clauses, indexed by literal sign and predicate.
#[derive(Default)]
pub struct ActiveSet {
    clauses: Vec<Arc<Clause>>,
    by_id: IdMap<usize>,
    /// Every clause under each distinct key of its literals.
    by_literal: HashMap<LitKey, Vec<usize>>,
    /// Every clause under the key of its first literal only.
    by_first: HashMap<LitKey, Vec<usize>>,
}

impl ActiveSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn get(&self, id: ClauseId) -> Option<&Arc<Clause>> {
        self.by_id.get(&id).map(|&i| &self.clauses[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<Clause>> {
        self.clauses.iter()
    }

    /// Panics if the clause is already active.
    pub fn insert(&mut self, c: Arc<Clause>) {
        let idx = self.clauses.len();
        assert!(
            self.by_id.insert(c.id(), idx).is_none(),
            "clause {} activated twice",
            c.id()
        );
        let mut keys: Vec<LitKey> = c.literals().iter().map(|l| (l.predicate, l.positive)).collect();
        if let Some(&first) = keys.first() {
            self.by_first.entry(first).or_default().push(idx);
        }
        keys.sort();
        keys.dedup();
        for k in keys {
            self.by_literal.entry(k).or_default().push(idx);
        }
        self.clauses.push(c);
    }

    /// Active clauses holding a literal complementary in sign and predicate
    /// to some literal of `c`, in activation order.
    fn resolution_partners(&self, c: &Clause) -> Vec<usize> {
        let mut idxs = BTreeSet::new();
        for l in c.literals() {
            if let Some(v) = self.by_literal.get(&(l.predicate, !l.positive)) {
                idxs.extend(v.iter().copied());
            }
        }
        idxs.into_iter().collect()
    }

    fn subsumes_literals(&self, lits: &[Literal]) -> bool {
        let mut keys: Vec<LitKey> = lits.iter().map(|l| (l.predicate, l.positive)).collect();
        keys.sort();
        keys.dedup();
        keys.iter()
            .filter_map(|k| self.by_first.get(k))
            .flatten()
            .any(|&i| subsumes(self.clauses[i].literals(), lits))
    }
}

/// True iff some active clause subsumes `c`.
pub fn forward_subsumed(c: &Clause, active: &ActiveSet) -> bool {
    active.subsumes_literals(c.literals())
}

/// Runs the given-clause loop until the empty clause, saturation, or a limit.
///
/// Input clauses enter passive in list order; their ids must be `0..n`.
/// Children are born with consecutive ids after the inputs. Panics if
/// `store` is not empty.
pub fn saturate(problem: &InjectedProblem, mut store: PassiveStore, limits: &Limits) -> ProverResult {
    assert!(store.is_empty(), "saturation needs an empty passive store");
    let start = Instant::now();
    let eq = problem.signature.equality_id();
    let mut stats = Statistics::default();
    let mut active = ActiveSet::new();
    let mut births = Births::starting_at(problem.clauses.len() as u64);

    let finish = |status: Status, stats: &mut Statistics, proof: Option<Vec<DerivationRecord>>| {
        stats.elapsed = start.elapsed();
        ProverResult {
            status,
            statistics: stats.clone(),
            proof,
        }
    };

    for (i, c) in problem.clauses.iter().enumerate() {
        assert_eq!(c.id(), ClauseId(i as u64), "input ids must follow list order");
        if c.is_empty() {
            let proof = vec![DerivationRecord::from(c)];
            return finish(Status::Refutation, &mut stats, Some(proof));
        }
        store
            .insert(Arc::new(c.clone()))
            .expect("input ids are distinct");
    }

    loop {
        if let Some(budget) = limits.time_budget {
            if start.elapsed() >= budget {
                return finish(Status::ResourceOut, &mut stats, None);
            }
        }
        if store.is_empty() {
            return finish(Status::Saturated, &mut stats, None);
        }
        if limits.max_activations.is_some_and(|m| stats.activations >= m) {
            return finish(Status::ResourceOut, &mut stats, None);
        }
        let given = store.select().expect("store is not empty");
        if literals_are_tautology(given.literals(), eq) || forward_subsumed(&given, &active) {
            continue;
        }
        active.insert(given.clone());
        stats.activations += 1;

        let mut children = factoring(&given, &mut births);
        let partners = active.resolution_partners(&given);
        if !partners.is_empty() {
            let bound = partners
                .iter()
                .map(|&i| active.clauses[i].var_bound())
                .max()
                .unwrap_or(0);
            let shifted = shift_vars(given.literals(), bound);
            for idx in partners {
                let partner = &active.clauses[idx];
                resolve_with_shifted(&given, &shifted, partner, &mut births, &mut children);
            }
        }
        for child in children {
            stats.generated += 1;
            if child.is_empty() {
                let proof = extract_proof(&child, &active);
                return finish(Status::Refutation, &mut stats, Some(proof));
            }
            store.insert(Arc::new(child)).expect("birth ids are fresh");
        }
        if limits.max_generated.is_some_and(|m| stats.generated >= m) {
            return finish(Status::ResourceOut, &mut stats, None);
        }
    }
}

/// The empty clause and all its ancestors, in id order. Every parent of a
/// derived clause is an active clause.
fn extract_proof(empty: &Clause, active: &ActiveSet) -> Vec<DerivationRecord> {
    let mut seen: BTreeSet<ClauseId> = BTreeSet::new();
    let mut stack: Vec<ClauseId> = empty.parents().to_vec();
    while let Some(id) = stack.pop() {
        if seen.insert(id) {
            let c = active.get(id).expect("parents are active");
            stack.extend_from_slice(c.parents());
        }
    }
    let mut proof: Vec<DerivationRecord> = seen
        .into_iter()
        .map(|id| DerivationRecord::from(active.get(id).expect("parents are active").as_ref()))
        .collect();
    proof.push(DerivationRecord::from(empty));
    proof
}
