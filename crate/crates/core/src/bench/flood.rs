//! Generator for the theory-flood problem family.
//!
//! Each problem pairs a short refutation that needs no theory reasoning with
//! a block of theory axioms over separate symbols. The theory block is
//! satisfiable on its own but keeps producing light consequences: unit facts
//! `t_j(z)` feed unary rules that wrap terms in `s(_)` or `r(_)` or just
//! rename the predicate, and rules compose with each other, so the number of
//! theory consequences grows exponentially with term depth. The non-theory
//! part is a chain `p0(c)`, `~p_i(X) | p_{i+1}(f(X))`, `~p_L(f^L(c))` whose
//! clauses are no lighter than the theory consequences of the same depth.
//!
//! With `n` theory clauses there are `n / 4` theory predicates (at least 3),
//! half of them seeded with a fact. Rule endpoints are drawn from a seeded
//! ChaCha8 stream, so a problem is a pure function of its parameters.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Chain lengths of the standard corpus.
pub const DEFAULT_SIZES: [usize; 6] = [4, 8, 12, 16, 20, 24];
/// Seeds per chain length in the standard corpus.
pub const DEFAULT_VARIANTS: u64 = 5;
pub const DEFAULT_THEORY_CLAUSES: usize = 40;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct FloodParams {
    /// Number of chain rules between the fact and the negated goal.
    pub chain_length: usize,
    /// Number of injected theory clauses.
    pub theory_clauses: usize,
    pub seed: u64,
}

impl FloodParams {
    pub fn name(&self) -> String {
        format!(
            "flood_l{:02}_t{:02}_s{}",
            self.chain_length, self.theory_clauses, self.seed
        )
    }
}

fn nest(f: &str, depth: usize, inner: &str) -> String {
    let mut t = inner.to_string();
    for _ in 0..depth {
        t = format!("{f}({t})");
    }
    t
}

/// Problem text for one flood instance. Deterministic in `params`.
pub fn flood_problem(params: &FloodParams) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ ((params.chain_length as u64) << 32));
    let mut out = String::new();
    let _ = writeln!(
        out,
        "% theory flood: chain length {}, {} theory clauses, seed {}",
        params.chain_length, params.theory_clauses, params.seed
    );
    let l = params.chain_length;
    let _ = writeln!(out, "cnf(chain_start, axiom, p0(c)).");
    for i in 0..l {
        let _ = writeln!(out, "cnf(chain_{i}, axiom, ~p{i}(X) | p{}(f(X))).", i + 1);
    }
    let _ = writeln!(out, "cnf(goal, negated_conjecture, ~p{l}({})).", nest("f", l, "c"));

    let n = params.theory_clauses;
    let preds = (n / 4).max(3);
    let facts = (preds / 2).min(n);
    for j in 0..facts {
        let _ = writeln!(out, "cnf(th_fact_{j}, theory_axiom, t{j}(z)).");
    }
    for k in 0..n - facts {
        let from = rng.gen_range(0..preds);
        let to = rng.gen_range(0..preds);
        let head = match k % 3 {
            0 => "s(X)",
            1 => "r(X)",
            _ => "X",
        };
        // `t_i(X) -> t_i(X)` would be a tautology
        let to = if head == "X" && to == from { (to + 1) % preds } else { to };
        let _ = writeln!(out, "cnf(th_rule_{k}, theory_axiom, ~t{from}(X) | t{to}({head})).");
    }
    out
}

/// Writes one file per (size, variant) pair and returns the paths in order.
pub fn write_flood_corpus(
    dir: &Path,
    sizes: &[usize],
    variants: u64,
    theory_clauses: usize,
) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for &chain_length in sizes {
        for seed in 0..variants {
            let params = FloodParams {
                chain_length,
                theory_clauses,
                seed,
            };
            let path = dir.join(format!("{}.p", params.name()));
            std::fs::write(&path, flood_problem(&params))?;
            paths.push(path);
        }
    }
    Ok(paths)
}
