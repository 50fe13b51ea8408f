//! Passive clause store with layered selection.
//!
//! Clauses are split into nested groups by theory distance: group `i` holds
//! every passive clause whose distance is at most cutoff `i`, and the last
//! cutoff is infinite so the last group holds everything. A second-layer
//! round-robin over the group ratios decides which group to draw from; inside
//! a group, an age queue and a weight queue alternate by the age:weight
//! ratio. Plain age/weight selection is the one-group special case.

mod queues;
mod schedule;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::kernel::{Clause, ClauseId, IdMap};
use crate::metrics::{th_distance, TheorySplitParams};

pub use queues::{AgeWeightQueues, QueueKind};
pub use schedule::RatioSchedule;

use queues::Entry;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("bad selection config: at least one group is required")]
    NoGroups,
    #[error("bad selection config: {cutoffs} cutoffs but {ratios} ratio entries")]
    LengthMismatch { cutoffs: usize, ratios: usize },
    #[error("bad selection config: cutoffs must increase, got {prev} then {next}")]
    NotIncreasing { prev: Cutoff, next: Cutoff },
    #[error("bad selection config: the last cutoff must be inf")]
    MissingInfinity,
    #[error("bad selection config: ratio entry {index} is zero")]
    ZeroRatio { index: usize },
    #[error("bad selection config: d must be at least 1")]
    ZeroD,
    #[error("bad selection config: age:weight ratio {0} picks from neither queue")]
    ZeroAgeWeight(AgeWeightRatio),
    #[error("bad selection config: cannot parse `{input}`: {reason}")]
    Syntax { input: String, reason: String },
}

impl ConfigError {
    fn syntax(input: &str, reason: &str) -> Self {
        ConfigError::Syntax {
            input: input.to_string(),
            reason: reason.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PassiveError {
    #[error("clause {0} is already passive")]
    DuplicateId(ClauseId),
    #[error("no passive clauses")]
    EmptyStore,
}

/// Upper bound on theory distance for membership in a group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cutoff {
    At(u64),
    Infinite,
}

impl Cutoff {
    fn admits(self, distance: Option<u64>) -> bool {
        match (self, distance) {
            (Cutoff::Infinite, _) => true,
            (Cutoff::At(c), Some(d)) => d <= c,
            (Cutoff::At(_), None) => false,
        }
    }
}

impl fmt::Display for Cutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cutoff::At(c) => write!(f, "{c}"),
            Cutoff::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Cutoff {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" => Ok(Cutoff::Infinite),
            t => t
                .parse()
                .map(Cutoff::At)
                .map_err(|_| ConfigError::syntax(s, "expected a natural number or `inf`")),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AgeWeightRatio {
    pub age: u32,
    pub weight: u32,
}

impl AgeWeightRatio {
    pub fn new(age: u32, weight: u32) -> Result<Self, ConfigError> {
        let r = AgeWeightRatio { age, weight };
        if age == 0 && weight == 0 {
            return Err(ConfigError::ZeroAgeWeight(r));
        }
        Ok(r)
    }
}

impl Default for AgeWeightRatio {
    fn default() -> Self {
        AgeWeightRatio { age: 1, weight: 1 }
    }
}

impl fmt::Display for AgeWeightRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.age, self.weight)
    }
}

impl FromStr for AgeWeightRatio {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = parse_ratio_list(s)?;
        match parts[..] {
            [a, w] => AgeWeightRatio::new(a, w),
            _ => Err(ConfigError::syntax(s, "expected `age:weight`")),
        }
    }
}

/// Parses `r1:r2:...:rk`.
pub fn parse_ratio_list(s: &str) -> Result<Vec<u32>, ConfigError> {
    s.split(':')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| ConfigError::syntax(s, "expected colon-separated natural numbers"))
        })
        .collect()
}

/// Parses `c1,c2,...,inf`.
pub fn parse_cutoff_list(s: &str) -> Result<Vec<Cutoff>, ConfigError> {
    s.split(',').map(str::parse).collect()
}

/// Parameters of the multi-split layer: `d`, the cutoffs and the group ratio.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LayeredConfig {
    params: TheorySplitParams,
    cutoffs: Vec<Cutoff>,
    ratios: Vec<u32>,
}

impl LayeredConfig {
    pub fn new(d: u32, cutoffs: Vec<Cutoff>, ratios: Vec<u32>) -> Result<Self, ConfigError> {
        let params = TheorySplitParams::new(d).map_err(|_| ConfigError::ZeroD)?;
        if cutoffs.is_empty() {
            return Err(ConfigError::NoGroups);
        }
        if cutoffs.len() != ratios.len() {
            return Err(ConfigError::LengthMismatch {
                cutoffs: cutoffs.len(),
                ratios: ratios.len(),
            });
        }
        for pair in cutoffs.windows(2) {
            if pair[0] >= pair[1] {
                return Err(ConfigError::NotIncreasing {
                    prev: pair[0],
                    next: pair[1],
                });
            }
        }
        if cutoffs.last() != Some(&Cutoff::Infinite) {
            return Err(ConfigError::MissingInfinity);
        }
        if let Some(index) = ratios.iter().position(|&r| r == 0) {
            return Err(ConfigError::ZeroRatio { index });
        }
        Ok(LayeredConfig {
            params,
            cutoffs,
            ratios,
        })
    }

    /// The single catch-all group: plain age/weight selection.
    pub fn single_group() -> Self {
        LayeredConfig {
            params: TheorySplitParams::new(1).expect("1 is a valid d"),
            cutoffs: vec![Cutoff::Infinite],
            ratios: vec![1],
        }
    }

    pub fn d(&self) -> u32 {
        self.params.d()
    }

    pub fn params(&self) -> TheorySplitParams {
        self.params
    }

    pub fn cutoffs(&self) -> &[Cutoff] {
        &self.cutoffs
    }

    pub fn ratios(&self) -> &[u32] {
        &self.ratios
    }

    pub fn groups(&self) -> usize {
        self.cutoffs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SelectionKind {
    AgeWeightOnly,
    Layered(LayeredConfig),
}

/// What `select` took and where it came from.
#[derive(Clone, Debug)]
pub struct Selection {
    pub clause: Arc<Clause>,
    /// Zero-based group the round-robin drew from.
    pub group: usize,
    pub queue: QueueKind,
}

struct Member {
    clause: Arc<Clause>,
    first_group: usize,
}

impl Member {
    fn entry(&self) -> Entry {
        Entry {
            id: self.clause.id(),
            age: self.clause.age(),
            weight: self.clause.weight(),
        }
    }
}

pub struct PassiveStore {
    config: LayeredConfig,
    age_weight: AgeWeightRatio,
    groups: Vec<AgeWeightQueues>,
    schedule: RatioSchedule,
    members: IdMap<Member>,
}

/// Builds an empty store. Age/weight-only selection becomes the one-group
/// layered configuration, so both kinds share every code path.
pub fn make_strategy(kind: SelectionKind, age_weight: AgeWeightRatio) -> Result<PassiveStore, ConfigError> {
    PassiveStore::new(kind, age_weight)
}

impl PassiveStore {
    pub fn new(kind: SelectionKind, age_weight: AgeWeightRatio) -> Result<Self, ConfigError> {
        let age_weight = AgeWeightRatio::new(age_weight.age, age_weight.weight)?;
        let config = match kind {
            SelectionKind::AgeWeightOnly => LayeredConfig::single_group(),
            SelectionKind::Layered(c) => LayeredConfig::new(c.d(), c.cutoffs, c.ratios)?,
        };
        let groups = (0..config.groups())
            .map(|_| AgeWeightQueues::new(age_weight.age, age_weight.weight))
            .collect();
        Ok(PassiveStore {
            schedule: RatioSchedule::new(config.ratios.clone()),
            groups,
            config,
            age_weight,
            members: IdMap::default(),
        })
    }

    pub fn config(&self) -> &LayeredConfig {
        &self.config
    }

    pub fn age_weight(&self) -> AgeWeightRatio {
        self.age_weight
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, index: usize) -> &AgeWeightQueues {
        &self.groups[index]
    }

    pub fn contains(&self, id: ClauseId) -> bool {
        self.members.contains_key(&id)
    }

    /// Index of the smallest group holding `id`.
    pub fn first_group_of(&self, id: ClauseId) -> Option<usize> {
        self.members.get(&id).map(|m| m.first_group)
    }

    /// Sum of group sizes; a clause counts once per group it belongs to.
    pub fn membership_total(&self) -> usize {
        self.groups.iter().map(AgeWeightQueues::len).sum()
    }

    /// Adds `clause` to every group whose cutoff admits its theory distance.
    pub fn insert(&mut self, clause: Arc<Clause>) -> Result<(), PassiveError> {
        let id = clause.id();
        if self.members.contains_key(&id) {
            return Err(PassiveError::DuplicateId(id));
        }
        let first_group = if self.groups.len() == 1 {
            0
        } else {
            let distance = th_distance(clause.counts(), self.config.params).to_u64();
            self.config
                .cutoffs
                .iter()
                .position(|c| c.admits(distance))
                .expect("last cutoff is infinite")
        };
        let member = Member { clause, first_group };
        let entry = member.entry();
        for g in &mut self.groups[first_group..] {
            g.insert(entry);
        }
        self.members.insert(id, member);
        Ok(())
    }

    pub fn select(&mut self) -> Result<Arc<Clause>, PassiveError> {
        self.select_traced().map(|s| s.clause)
    }

    /// Picks a group by the round-robin, skipping (and consuming the turn
    /// of) empty groups, then pops from that group's age or weight queue and
    /// removes the clause from every group.
    pub fn select_traced(&mut self) -> Result<Selection, PassiveError> {
        if self.members.is_empty() {
            return Err(PassiveError::EmptyStore);
        }
        let (group, id, queue) = loop {
            let g = self.schedule.next_slot();
            if let Some((id, queue)) = self.groups[g].next_candidate() {
                break (g, id, queue);
            }
        };
        let member = self.members.remove(&id).expect("queued clause is a member");
        let entry = member.entry();
        for g in &mut self.groups[member.first_group..] {
            g.remove(entry);
        }
        Ok(Selection {
            clause: member.clause,
            group,
            queue,
        })
    }
}

impl fmt::Debug for PassiveStore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PassiveStore")
            .field("config", &self.config)
            .field("age_weight", &self.age_weight)
            .field("len", &self.members.len())
            .field(
                "group_sizes",
                &self.groups.iter().map(AgeWeightQueues::len).collect::<Vec<_>>(),
            )
            .finish()
    }
}
