use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use strata::bench::flood::{self, write_flood_corpus};
use strata::bench::{
    exit_code, parse_strategies, preset, run_corpus, run_problem, BenchOptions, RunOptions,
    StrategyPreset, EXIT_ERROR,
};
use strata::engine::Limits;
use strata::passive::{
    parse_cutoff_list, parse_ratio_list, AgeWeightRatio, LayeredConfig, SelectionKind,
};
use strata::problem_io::{emit_result, Status};
use strata::theory::InjectOptions;

#[derive(Parser)]
#[command(name = "strata", version, about = "Resolution prover with layered clause selection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Prove one problem and print the SZS result.
    Prove(ProveArgs),
    /// Run strategies over every problem file in a directory.
    Bench(BenchArgs),
    /// Write the theory-flood corpus.
    GenFlood(GenFloodArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SelectionFlag {
    /// Plain age/weight alternation.
    Aw,
    /// Nested groups by theory distance.
    Layered,
}

#[derive(Args)]
struct ProveArgs {
    file: PathBuf,
    /// Bundled preset: default, layered2, layered3 or layered4.
    #[arg(long, default_value = "default")]
    strategy: String,
    /// Override the preset's selection kind.
    #[arg(long, value_enum)]
    selection: Option<SelectionFlag>,
    /// Theory-distance multiplier for layered selection.
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated increasing cutoffs ending in `inf`, e.g. `0,30,inf`.
    #[arg(long)]
    cutoffs: Option<String>,
    /// Colon-separated group ratios, e.g. `16:8:1`.
    #[arg(long)]
    ratios: Option<String>,
    /// Age:weight ratio inside every group, e.g. `1:1`.
    #[arg(long)]
    aw_ratio: Option<AgeWeightRatio>,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args)]
struct RunFlags {
    #[arg(long)]
    max_activations: Option<u64>,
    #[arg(long)]
    max_generated: Option<u64>,
    /// Wall-clock budget; results then depend on machine speed.
    #[arg(long)]
    timeout_ms: Option<u64>,
    /// Extra theories to inject, e.g. `arrays,equality`.
    #[arg(long, value_delimiter = ',')]
    theories: Vec<String>,
    /// Count generated equality axioms as input axioms instead of theory axioms.
    #[arg(long)]
    equality_as_input: bool,
}

impl RunFlags {
    fn options(&self, default_activations: Option<u64>) -> RunOptions {
        RunOptions {
            limits: Limits {
                max_activations: self.max_activations.or(default_activations),
                max_generated: self.max_generated,
                time_budget: self.timeout_ms.map(Duration::from_millis),
            },
            inject: InjectOptions {
                equality_counts_as_theory: !self.equality_as_input,
            },
            extra_theories: self.theories.clone(),
            ..RunOptions::default()
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    dir: PathBuf,
    #[arg(long, default_value = "default,layered2,layered3,layered4")]
    strategies: String,
    /// Directory for results.csv and skipped.txt.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Problems to run at the same time.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args)]
struct GenFloodArgs {
    #[arg(long)]
    out: PathBuf,
    /// Chain lengths, comma-separated.
    #[arg(long, value_delimiter = ',', default_values_t = flood::DEFAULT_SIZES)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = flood::DEFAULT_THEORY_CLAUSES)]
    theory_clauses: usize,
    /// Seeds per chain length.
    #[arg(long, default_value_t = flood::DEFAULT_VARIANTS)]
    variants: u64,
}

/// The named preset with any explicit selection flags applied on top.
fn strategy(args: &ProveArgs) -> anyhow::Result<StrategyPreset> {
    let mut s = preset(&args.strategy).with_context(|| {
        format!(
            "unknown strategy `{}` (known: default, layered2, layered3, layered4)",
            args.strategy
        )
    })?;
    if let Some(aw) = args.aw_ratio {
        s.age_weight = aw;
    }
    let layered_flags = args.d.is_some() || args.cutoffs.is_some() || args.ratios.is_some();
    match args.selection {
        Some(SelectionFlag::Aw) => {
            if layered_flags {
                bail!("--d, --cutoffs and --ratios need layered selection");
            }
            s.selection = SelectionKind::AgeWeightOnly;
        }
        Some(SelectionFlag::Layered) => s.selection = layered(args, &s.selection)?,
        None if layered_flags => s.selection = layered(args, &s.selection)?,
        None => {}
    }
    Ok(s)
}

fn layered(args: &ProveArgs, base: &SelectionKind) -> anyhow::Result<SelectionKind> {
    let base = match base {
        SelectionKind::Layered(c) => Some(c),
        SelectionKind::AgeWeightOnly => None,
    };
    let d = match (args.d, base) {
        (Some(d), _) => d,
        (None, Some(c)) => c.d(),
        (None, None) => bail!("layered selection needs --d"),
    };
    let cutoffs = match (&args.cutoffs, base) {
        (Some(s), _) => parse_cutoff_list(s)?,
        (None, Some(c)) => c.cutoffs().to_vec(),
        (None, None) => bail!("layered selection needs --cutoffs"),
    };
    let ratios = match (&args.ratios, base) {
        (Some(s), _) => parse_ratio_list(s)?,
        (None, Some(c)) if c.groups() == cutoffs.len() => c.ratios().to_vec(),
        _ => vec![1; cutoffs.len()],
    };
    Ok(SelectionKind::Layered(LayeredConfig::new(d, cutoffs, ratios)?))
}

fn prove(args: ProveArgs) -> anyhow::Result<i32> {
    let strategy = strategy(&args)?;
    let options = args.run.options(None);
    let (problem, result) = run_problem(&args.file, &strategy, &options)?;
    print!("{}", emit_result(&result, &problem.signature));
    if result.status == Status::Saturated && problem.injected > 0 {
        println!(
            "% caveat: {} theory axioms were injected and they axiomatize their theories only partially, so Satisfiable is not a theory model",
            problem.injected
        );
    }
    Ok(exit_code(result.status))
}

fn bench(args: BenchArgs) -> anyhow::Result<i32> {
    let strategies = parse_strategies(&args.strategies)?;
    let options = BenchOptions {
        run: args.run.options(Some(5000)),
        jobs: args.jobs,
    };
    let report = run_corpus(&args.dir, &strategies, &options)?;
    for s in &report.skipped {
        eprintln!("warning: skipped {}: {}", s.path.display(), s.reason);
    }
    report.write_to_dir(&args.out)?;
    print!("{report}");
    Ok(0)
}

fn gen_flood(args: GenFloodArgs) -> anyhow::Result<i32> {
    let paths = write_flood_corpus(&args.out, &args.sizes, args.variants, args.theory_clauses)
        .with_context(|| format!("writing corpus to {}", args.out.display()))?;
    println!("wrote {} problems to {}", paths.len(), args.out.display());
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not errors
            return if e.use_stderr() {
                ExitCode::from(EXIT_ERROR as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Prove(a) => prove(a),
        Command::Bench(a) => bench(a),
        Command::GenFlood(a) => gen_flood(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
