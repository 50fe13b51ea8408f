use std::collections::BTreeSet;

use crate::kernel::ClauseId;

use super::schedule::RatioSchedule;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum QueueKind {
    Age,
    Weight,
}

/// Key of a passive clause inside one group.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) struct Entry {
    pub id: ClauseId,
    pub age: u64,
    pub weight: u64,
}

/// One age queue and one weight queue over the same clause set, picked from
/// alternately according to the age:weight ratio. Ties go to the smaller id.
#[derive(Clone, Debug)]
pub struct AgeWeightQueues {
    by_age: BTreeSet<(u64, ClauseId)>,
    by_weight: BTreeSet<(u64, ClauseId)>,
    schedule: RatioSchedule,
}

impl AgeWeightQueues {
    pub(crate) fn new(age_ratio: u32, weight_ratio: u32) -> Self {
        AgeWeightQueues {
            by_age: BTreeSet::new(),
            by_weight: BTreeSet::new(),
            schedule: RatioSchedule::new(vec![age_ratio, weight_ratio]),
        }
    }

    pub fn len(&self) -> usize {
        self.by_age.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_age.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ClauseId> + '_ {
        self.by_age.iter().map(|&(_, id)| id)
    }

    pub(crate) fn insert(&mut self, e: Entry) {
        self.by_age.insert((e.age, e.id));
        self.by_weight.insert((e.weight, e.id));
    }

    pub(crate) fn remove(&mut self, e: Entry) {
        let a = self.by_age.remove(&(e.age, e.id));
        let w = self.by_weight.remove(&(e.weight, e.id));
        debug_assert!(a && w, "queues out of sync for clause {}", e.id);
    }

    /// Advances the alternation and returns the minimal clause of the queue
    /// whose turn it is. The caller removes it. `None` when empty; the
    /// alternation is not advanced then.
    pub(crate) fn next_candidate(&mut self) -> Option<(ClauseId, QueueKind)> {
        if self.is_empty() {
            return None;
        }
        let (kind, first) = match self.schedule.next_slot() {
            0 => (QueueKind::Age, self.by_age.first()),
            _ => (QueueKind::Weight, self.by_weight.first()),
        };
        first.map(|&(_, id)| (id, kind))
    }
}
