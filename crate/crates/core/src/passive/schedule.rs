/// Deterministic weighted round-robin over `weights.len()` slots.
///
/// Each turn goes to the slot that has used the smallest share
/// `served[i] / weights[i]` of its quota in the current round, ties going to
/// the lower index. A round lasts `sum(weights)` turns and every slot gets
/// exactly `weights[i]` of them, so the pick sequence is periodic and any
/// `sum(weights)` consecutive picks contain slot `i` exactly `weights[i]`
/// times. The very first pick is slot 0 (unless its weight is 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSchedule {
    weights: Vec<u32>,
    served: Vec<u32>,
    turn: u64,
    period: u64,
}

impl RatioSchedule {
    /// Panics when every weight is zero.
    pub fn new(weights: Vec<u32>) -> Self {
        let period: u64 = weights.iter().map(|&w| w as u64).sum();
        assert!(period > 0, "round-robin needs a positive weight");
        RatioSchedule {
            served: vec![0; weights.len()],
            weights,
            turn: 0,
            period,
        }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn next_slot(&mut self) -> usize {
        let mut best: Option<usize> = None;
        for (i, &w) in self.weights.iter().enumerate() {
            if w == 0 || self.served[i] >= w {
                continue;
            }
            best = match best {
                None => Some(i),
                Some(b) => {
                    // served[i]/w < served[b]/w[b]
                    let lhs = self.served[i] as u64 * self.weights[b] as u64;
                    let rhs = self.served[b] as u64 * w as u64;
                    if lhs < rhs {
                        Some(i)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let slot = best.expect("a round always has an unserved slot");
        self.served[slot] += 1;
        self.turn += 1;
        if self.turn == self.period {
            self.turn = 0;
            self.served.iter_mut().for_each(|s| *s = 0);
        }
        slot
    }
}
