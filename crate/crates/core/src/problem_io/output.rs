use std::fmt::Write;
use std::time::Duration;

use crate::engine::DerivationRecord;
use crate::kernel::{display_literals, Signature};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Refutation,
    Saturated,
    ResourceOut,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Refutation => "Refutation",
            Status::Saturated => "Saturated",
            Status::ResourceOut => "ResourceOut",
        }
    }

    /// SZS vocabulary name.
    pub fn szs(self) -> &'static str {
        match self {
            Status::Refutation => "Unsatisfiable",
            Status::Saturated => "Satisfiable",
            Status::ResourceOut => "ResourceOut",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Statistics {
    pub activations: u64,
    pub generated: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProverResult {
    pub status: Status,
    pub statistics: Statistics,
    /// Present exactly when `status` is `Refutation`; listed parents first,
    /// ending with the empty clause.
    pub proof: Option<Vec<DerivationRecord>>,
}

impl ProverResult {
    pub fn refutation(&self) -> Option<&[DerivationRecord]> {
        self.proof.as_deref()
    }

    /// The empty clause closing the proof.
    pub fn root(&self) -> Option<&DerivationRecord> {
        self.proof.as_ref().and_then(|p| p.last())
    }
}

/// SZS status line, a statistics line, then one line per proof step:
///
/// ```text
/// SZS status Unsatisfiable
/// % activations=2 generated=1 elapsed_ms=0
/// 0. p(a) [axiom] thAx/allAx=0/1
/// 1. ~p(X0) [axiom] thAx/allAx=0/1
/// 2. $false [resolution 1,0] thAx/allAx=0/2
/// ```
pub fn emit_result(result: &ProverResult, sig: &Signature) -> String {
    let mut out = String::new();
    let stats = &result.statistics;
    let _ = writeln!(out, "SZS status {}", result.status.szs());
    let _ = writeln!(
        out,
        "% activations={} generated={} elapsed_ms={}",
        stats.activations,
        stats.generated,
        stats.elapsed.as_millis()
    );
    if let Some(proof) = &result.proof {
        for step in proof {
            let _ = write!(
                out,
                "{}. {} [{}",
                step.id,
                display_literals(&step.literals, sig),
                step.origin.name()
            );
            if !step.parents.is_empty() {
                let parents: Vec<String> = step.parents.iter().map(|p| p.to_string()).collect();
                let _ = write!(out, " {}", parents.join(","));
            }
            let _ = writeln!(
                out,
                "] thAx/allAx={}/{}",
                step.counts.theory, step.counts.all
            );
        }
    }
    out
}
