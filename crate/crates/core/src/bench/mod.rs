//! Strategy presets, single-problem runs and the corpus benchmark.

pub mod flood;

use std::fmt::{self, Write as _};
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::engine::{saturate, Limits};
use crate::passive::{
    parse_cutoff_list, AgeWeightRatio, ConfigError, LayeredConfig, PassiveStore, SelectionKind,
};
use crate::problem_io::{load_problem, ProblemError, ProblemSpec, ProverResult, Status};
use crate::theory::{
    inject_theory_axioms, InjectOptions, InjectedProblem, TheoryCatalog, TheoryError,
};

/// Name of the baseline every other strategy is compared against.
pub const BASELINE: &str = "default";

/// Process exit code for errors before or outside the proof search.
pub const EXIT_ERROR: i32 = 3;

/// 0 for a refutation, 1 for saturation, 2 when a limit was hit.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Refutation => 0,
        Status::Saturated => 1,
        Status::ResourceOut => 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyPreset {
    pub name: String,
    pub selection: SelectionKind,
    pub age_weight: AgeWeightRatio,
}

impl StrategyPreset {
    pub fn new(name: &str, selection: SelectionKind, age_weight: AgeWeightRatio) -> Self {
        StrategyPreset {
            name: name.to_string(),
            selection,
            age_weight,
        }
    }

    pub fn store(&self) -> Result<PassiveStore, ConfigError> {
        PassiveStore::new(self.selection.clone(), self.age_weight)
    }
}

fn layered(name: &str, d: u32, cutoffs: &str, ratios: Vec<u32>) -> StrategyPreset {
    let cutoffs = parse_cutoff_list(cutoffs).expect("preset cutoffs parse");
    let config = LayeredConfig::new(d, cutoffs, ratios).expect("preset is well formed");
    StrategyPreset::new(name, SelectionKind::Layered(config), AgeWeightRatio::default())
}

/// The bundled presets: plain 1:1 age/weight, then the two-, three- and
/// four-group layered configurations.
pub fn presets() -> Vec<StrategyPreset> {
    vec![
        StrategyPreset::new(BASELINE, SelectionKind::AgeWeightOnly, AgeWeightRatio::default()),
        layered("layered2", 10, "23,inf", vec![33, 8]),
        layered("layered3", 7, "0,30,inf", vec![16, 8, 1]),
        layered("layered4", 8, "16,41,59,inf", vec![84, 9, 2, 2]),
    ]
}

pub fn preset(name: &str) -> Option<StrategyPreset> {
    presets().into_iter().find(|p| p.name == name)
}

/// Comma-separated preset names, in the given order.
pub fn parse_strategies(list: &str) -> Result<Vec<StrategyPreset>, BenchError> {
    let mut out: Vec<StrategyPreset> = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let p = preset(name).ok_or_else(|| BenchError::UnknownStrategy(name.to_string()))?;
        if !out.iter().any(|q| q.name == p.name) {
            out.push(p);
        }
    }
    if out.is_empty() {
        return Err(BenchError::NoStrategies);
    }
    Ok(out)
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub limits: Limits,
    pub catalog: TheoryCatalog,
    pub inject: InjectOptions,
    /// Theories requested in addition to those named in the problem.
    pub extra_theories: Vec<String>,
}

impl RunOptions {
    pub fn with_limits(limits: Limits) -> Self {
        RunOptions {
            limits,
            ..RunOptions::default()
        }
    }
}

/// Injects the requested theories and saturates with `strategy`.
pub fn prove_problem(
    spec: &ProblemSpec,
    strategy: &StrategyPreset,
    options: &RunOptions,
) -> Result<(InjectedProblem, ProverResult), RunError> {
    let store = strategy.store()?;
    let injected = if options.extra_theories.is_empty() {
        inject_theory_axioms(spec, &options.catalog, options.inject)?
    } else {
        let mut spec = spec.clone();
        spec.theories.extend(options.extra_theories.iter().cloned());
        inject_theory_axioms(&spec, &options.catalog, options.inject)?
    };
    let result = saturate(&injected, store, &options.limits);
    Ok((injected, result))
}

pub fn run_problem(
    path: &Path,
    strategy: &StrategyPreset,
    options: &RunOptions,
) -> Result<(InjectedProblem, ProverResult), RunError> {
    let spec = load_problem(path)?;
    prove_problem(&spec, strategy, options)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub problem: String,
    pub strategy: String,
    pub status: Status,
    pub activations: u64,
    pub generated: u64,
    pub elapsed_ms: u128,
    /// Counts of the empty clause; present only for refutations.
    pub thax_root: Option<BigUint>,
    pub allax_root: Option<BigUint>,
}

impl BenchRow {
    fn new(problem: &str, strategy: &str, result: &ProverResult) -> Self {
        let root = result.root();
        BenchRow {
            problem: problem.to_string(),
            strategy: strategy.to_string(),
            status: result.status,
            activations: result.statistics.activations,
            generated: result.statistics.generated,
            elapsed_ms: result.statistics.elapsed.as_millis(),
            thax_root: root.map(|r| r.counts.theory.clone()),
            allax_root: root.map(|r| r.counts.all.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub path: PathBuf,
    pub reason: String,
}

/// Δbase% in tenths of a percent: `100·delta/base` rounded to one decimal,
/// halves away from zero. `None` when the baseline refuted nothing.
pub fn delta_percent_tenths(delta: i64, base: u64) -> Option<i64> {
    if base == 0 {
        return None;
    }
    let num = 1000 * i128::from(delta.unsigned_abs());
    let den = i128::from(base);
    let rounded = ((2 * num + den) / (2 * den)) as i64;
    Some(if delta < 0 { -rounded } else { rounded })
}

/// Tenths of a percent as `12.3`, `-0.5`.
pub fn format_tenths(t: i64) -> String {
    let sign = if t < 0 { "-" } else { "" };
    format!("{sign}{}.{}", t.unsigned_abs() / 10, t.unsigned_abs() % 10)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub strategy: String,
    pub refuted: u64,
    /// `None` when the baseline strategy was not run.
    pub delta: Option<i64>,
    pub delta_pct_tenths: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BenchReport {
    pub strategies: Vec<String>,
    /// Problems in file-name order, strategies in the requested order.
    pub rows: Vec<BenchRow>,
    pub skipped: Vec<Skipped>,
}

pub const CSV_HEADER: [&str; 8] = [
    "problem",
    "strategy",
    "status",
    "activations",
    "generated",
    "elapsed_ms",
    "thax_root",
    "allax_root",
];

impl BenchReport {
    pub fn problems(&self) -> usize {
        match self.strategies.len() {
            0 => 0,
            k => self.rows.len() / k,
        }
    }

    pub fn refuted(&self, strategy: &str) -> u64 {
        self.rows
            .iter()
            .filter(|r| r.strategy == strategy && r.status == Status::Refutation)
            .count() as u64
    }

    pub fn summary(&self) -> Vec<SummaryRow> {
        let base = self
            .strategies
            .iter()
            .any(|s| s == BASELINE)
            .then(|| self.refuted(BASELINE));
        self.strategies
            .iter()
            .map(|s| {
                let refuted = self.refuted(s);
                let delta = base.map(|b| refuted as i64 - b as i64);
                SummaryRow {
                    strategy: s.clone(),
                    refuted,
                    delta,
                    delta_pct_tenths: base.zip(delta).and_then(|(b, d)| delta_percent_tenths(d, b)),
                }
            })
            .collect()
    }

    pub fn write_csv<W: io::Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER)?;
        let opt = |v: &Option<BigUint>| v.as_ref().map(BigUint::to_string).unwrap_or_default();
        for r in &self.rows {
            out.write_record([
                r.problem.clone(),
                r.strategy.clone(),
                r.status.name().to_string(),
                r.activations.to_string(),
                r.generated.to_string(),
                r.elapsed_ms.to_string(),
                opt(&r.thax_root),
                opt(&r.allax_root),
            ])?;
        }
        out.flush()?;
        Ok(())
    }

    /// Writes `results.csv` and `skipped.txt` (one `path: reason` per line).
    pub fn write_to_dir(&self, dir: &Path) -> Result<(), BenchError> {
        let io_err = |path: &Path| {
            let path = path.display().to_string();
            move |source| BenchError::Io { path, source }
        };
        std::fs::create_dir_all(dir).map_err(io_err(dir))?;
        let csv_path = dir.join("results.csv");
        let file = std::fs::File::create(&csv_path).map_err(io_err(&csv_path))?;
        self.write_csv(file).map_err(|e| BenchError::Io {
            path: csv_path.display().to_string(),
            source: e.into(),
        })?;
        let mut skipped = String::new();
        for s in &self.skipped {
            let _ = writeln!(skipped, "{}: {}", s.path.display(), s.reason);
        }
        let skipped_path = dir.join("skipped.txt");
        std::fs::write(&skipped_path, skipped).map_err(io_err(&skipped_path))?;
        Ok(())
    }
}

impl fmt::Display for BenchReport {
    /// The summary table: strategy, refuted, Δbase, Δbase%.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.summary();
        let width = rows.iter().map(|r| r.strategy.len()).max().unwrap_or(0).max(8);
        writeln!(f, "{:<width$} {:>8} {:>7} {:>8}", "strategy", "refuted", "Δbase", "Δbase%")?;
        for r in rows {
            let delta = r.delta.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            let pct = r.delta_pct_tenths.map(format_tenths).unwrap_or_else(|| "-".into());
            writeln!(f, "{:<width$} {:>8} {:>7} {:>8}", r.strategy, r.refuted, delta, pct)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown strategy `{0}` (known: default, layered2, layered3, layered4)")]
    UnknownStrategy(String),
    #[error("no strategies given")]
    NoStrategies,
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("no problem in {0} could be run")]
    NoProblems(String),
    #[error("cannot start worker threads: {0}")]
    Threads(String),
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub run: RunOptions,
    /// Problems solved concurrently; each prover run stays single-threaded.
    pub jobs: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            run: RunOptions::with_limits(Limits::activations(5000)),
            jobs: 1,
        }
    }
}

const PROBLEM_EXTENSIONS: [&str; 3] = ["p", "cnf", "tptp"];

/// Problem files directly inside `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, BenchError> {
    let io_err = |source| BenchError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io_err)? {
        let path = entry.map_err(io_err)?.path();
        let is_problem = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| PROBLEM_EXTENSIONS.contains(&e));
        if is_problem && path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

fn run_file(path: &Path, strategies: &[StrategyPreset], options: &RunOptions) -> Result<Vec<BenchRow>, Skipped> {
    let skip = |reason: String| Skipped {
        path: path.to_path_buf(),
        reason,
    };
    let spec = load_problem(path).map_err(|e| skip(e.to_string()))?;
    strategies
        .iter()
        .map(|s| {
            prove_problem(&spec, s, options)
                .map(|(_, result)| BenchRow::new(&spec.name, &s.name, &result))
                .map_err(|e| skip(e.to_string()))
        })
        .collect()
}

/// Runs every strategy on every problem file in `dir`. Files that fail to
/// parse, or name an unknown theory, are listed in `skipped`.
pub fn run_corpus(
    dir: &Path,
    strategies: &[StrategyPreset],
    options: &BenchOptions,
) -> Result<BenchReport, BenchError> {
    if strategies.is_empty() {
        return Err(BenchError::NoStrategies);
    }
    let files = corpus_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| BenchError::Threads(e.to_string()))?;
    let outcomes: Vec<Result<Vec<BenchRow>, Skipped>> = pool.install(|| {
        files
            .par_iter()
            .map(|path| run_file(path, strategies, &options.run))
            .collect()
    });
    let mut report = BenchReport {
        strategies: strategies.iter().map(|s| s.name.clone()).collect(),
        ..BenchReport::default()
    };
    for outcome in outcomes {
        match outcome {
            Ok(rows) => report.rows.extend(rows),
            Err(skipped) => report.skipped.push(skipped),
        }
    }
    if report.rows.is_empty() {
        return Err(BenchError::NoProblems(dir.display().to_string()));
    }
    Ok(report)
}
