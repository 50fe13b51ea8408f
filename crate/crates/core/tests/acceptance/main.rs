//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL
//! line each, and exits nonzero if any failed.


use std::cell::RefCell;
use std::collections::HashMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strata::bench::flood::{write_flood_corpus, DEFAULT_SIZES, DEFAULT_THEORY_CLAUSES, DEFAULT_VARIANTS};
use strata::bench::{preset, presets, prove_problem, run_corpus, BenchOptions, BenchReport, RunOptions};
use strata::engine::{DerivationRecord, Limits};
use strata::kernel::{Clause, ClauseId, Inference, Literal, Signature, SymbolKind, Term};
use strata::metrics::{frac, th_distance, AxiomCounts, AxiomKind, TheorySplitParams};
use strata::passive::{
    parse_cutoff_list, AgeWeightRatio, Cutoff, LayeredConfig, PassiveStore, QueueKind, SelectionKind,
};
use strata::problem_io::{parse_named_problem, Status};

use ground::{dpll, satisfies, Grounder};
use reference::{Item, Queue, ReferenceAgeWeight, ReferenceStore};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

// 1 ------------------------------------------------------------------------

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn metric_formulas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    for n in 0..1000 {
        // small, medium and near-u64::MAX magnitudes
        let top = [20u64, 1 << 20, u64::MAX][n % 3];
        let all = rng.gen_range(1..=top);
        let theory = rng.gen_range(0..=all);
        let d = rng.gen_range(1..=1000u32);
        let counts = AxiomCounts::new(theory, all);
        let params = TheorySplitParams::new(d).unwrap();

        let expected = (u128::from(theory) * u128::from(d)).saturating_sub(u128::from(all));
        let got = th_distance(&counts, params);
        check(got == BigUint::from(expected), || {
            format!("th_distance({theory}, {all}, d={d}) = {got}, expected {expected}")
        })?;

        let g = gcd(theory, all);
        let f = frac(&counts);
        let (num, den) = (f.numer().to_u64(), f.denom().to_u64());
        check(num == Some(theory / g) && den == Some(all / g), || {
            format!("frac({theory}, {all}) = {f}, expected {}/{}", theory / g, all / g)
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("1000 triples in {elapsed:?}"))
}

// 2 ------------------------------------------------------------------------

enum Node {
    Leaf(AxiomKind),
    Inner(Vec<usize>),
}

/// Leaf counts of the full tree expansion below `root`, by explicit
/// traversal. `None` once more than `cap` leaves have been visited.
fn expand(nodes: &[Node], root: usize, cap: u64) -> Option<(u64, u64)> {
    let (mut theory, mut all) = (0u64, 0u64);
    let mut stack = vec![root];
    while let Some(n) = stack.pop() {
        match &nodes[n] {
            Node::Leaf(kind) => {
                all += 1;
                if *kind == AxiomKind::TheoryAxiom {
                    theory += 1;
                }
                if all > cap {
                    return None;
                }
            }
            Node::Inner(parents) => stack.extend(parents),
        }
    }
    Some((theory, all))
}

fn tree_semantics() -> Outcome {
    const CAP: u64 = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let start = Instant::now();
    let mut checked = 0usize;
    let mut largest = 0u64;
    for _ in 0..200 {
        let size: usize = rng.gen_range(1..=50);
        let mut nodes: Vec<Node> = Vec::new();
        let mut clauses: Vec<Clause> = Vec::new();
        for i in 0..size {
            let id = ClauseId(i as u64);
            let leaf = |rng: &mut ChaCha8Rng| {
                let kind = if rng.gen_bool(0.4) { AxiomKind::TheoryAxiom } else { AxiomKind::InputAxiom };
                (Node::Leaf(kind), Clause::axiom(id, i as u64, vec![], kind))
            };
            let (node, clause) = if i == 0 || rng.gen_bool(0.1) {
                leaf(&mut rng)
            } else {
                // one parent (factoring) or two, repeats allowed; recent
                // parents make deep, heavily shared DAGs
                let arity = if rng.gen_bool(0.2) { 1 } else { 2 };
                let parents: Vec<usize> = (0..arity)
                    .map(|_| {
                        let from = if rng.gen_bool(0.7) { i.saturating_sub(4) } else { 0 };
                        rng.gen_range(from..i)
                    })
                    .collect();
                nodes.push(Node::Inner(parents.clone()));
                let too_big = expand(&nodes, i, CAP).is_none();
                nodes.pop();
                if too_big {
                    leaf(&mut rng)
                } else {
                    let inference = if arity == 1 { Inference::Factoring } else { Inference::Resolution };
                    let refs: Vec<&Clause> = parents.iter().map(|&p| &clauses[p]).collect();
                    let c = Clause::derived(id, i as u64, vec![], inference, &refs).unwrap();
                    (Node::Inner(parents), c)
                }
            };
            nodes.push(node);
            clauses.push(clause);
        }
        for (i, c) in clauses.iter().enumerate() {
            let (theory, all) = expand(&nodes, i, u64::MAX).unwrap();
            largest = largest.max(all);
            check(c.counts() == &AxiomCounts::new(theory, all), || {
                format!("clause {i}: running sums {:?}, tree expansion ({theory}, {all})", c.counts())
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("200 DAGs, {checked} clauses, up to {largest} leaves, in {elapsed:?}"))
}

// 3 ------------------------------------------------------------------------

/// A clause of symbol weight `weight >= 2` whose counts come from a real
/// parent list of `theory` theory leaves and `all - theory` input leaves.
fn weighted_clause(it: &Item) -> Arc<Clause> {
    let mut sig = Signature::new();
    let p = sig.intern("p", 1, SymbolKind::Predicate).unwrap();
    let f = sig.intern("f", 1, SymbolKind::Function).unwrap();
    let a = sig.intern("a", 0, SymbolKind::Function).unwrap();
    let mut t = Term::constant(a);
    for _ in 2..it.weight {
        t = Term::App(f, vec![t]);
    }
    let lits = vec![Literal::new(true, p, vec![t])];
    let th = Clause::axiom(ClauseId(u64::MAX), 0, vec![], AxiomKind::TheoryAxiom);
    let inp = Clause::axiom(ClauseId(u64::MAX - 1), 0, vec![], AxiomKind::InputAxiom);
    let mut parents: Vec<&Clause> = Vec::new();
    parents.extend((0..it.theory).map(|_| &th));
    parents.extend((0..it.all - it.theory).map(|_| &inp));
    let c = Clause::derived(ClauseId(it.id), it.age, lits, Inference::Resolution, &parents).unwrap();
    assert_eq!(c.weight(), it.weight);
    Arc::new(c)
}

struct Script {
    d: u32,
    cutoffs: Vec<Option<u64>>,
    ratios: Vec<u32>,
    age: u32,
    weight: u32,
}

impl Script {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        let k = rng.gen_range(1..=4);
        let mut finite: Vec<u64> = (0..k - 1).map(|_| rng.gen_range(0..80)).collect();
        finite.sort_unstable();
        finite.dedup();
        let mut cutoffs: Vec<Option<u64>> = finite.into_iter().map(Some).collect();
        cutoffs.push(None);
        let ratios = (0..cutoffs.len()).map(|_| rng.gen_range(1..=5)).collect();
        let (age, weight) = loop {
            let (a, w) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            if a + w > 0 {
                break (a, w);
            }
        };
        Script {
            d: rng.gen_range(1..=10),
            cutoffs,
            ratios,
            age,
            weight,
        }
    }

    fn store(&self) -> PassiveStore {
        let cutoffs = self
            .cutoffs
            .iter()
            .map(|c| c.map_or(Cutoff::Infinite, Cutoff::At))
            .collect();
        let config = LayeredConfig::new(self.d, cutoffs, self.ratios.clone()).unwrap();
        let aw = AgeWeightRatio::new(self.age, self.weight).unwrap();
        PassiveStore::new(SelectionKind::Layered(config), aw).unwrap()
    }

    fn reference(&self) -> ReferenceStore {
        ReferenceStore::new(self.d as u64, self.cutoffs.clone(), &self.ratios, self.age, self.weight)
    }
}

fn random_item(rng: &mut ChaCha8Rng, id: u64) -> Item {
    let all = rng.gen_range(1..=40);
    Item {
        id,
        age: rng.gen_range(0..30),
        weight: rng.gen_range(2..12),
        theory: rng.gen_range(0..=all),
        all,
    }
}

fn store_groups(store: &PassiveStore) -> Vec<Vec<u64>> {
    (0..store.group_count())
        .map(|g| {
            let mut ids: Vec<u64> = store.group(g).ids().map(|i| i.0).collect();
            ids.sort_unstable();
            ids
        })
        .collect()
}

fn queue_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = Instant::now();
    let mut selections = 0usize;
    for script_no in 0..10_000 {
        let script = Script::random(&mut rng);
        let mut store = script.store();
        let mut oracle = script.reference();
        let ops = rng.gen_range(1..60);
        let mut next_id = 0;
        for _ in 0..ops {
            if rng.gen_bool(0.6) {
                let it = random_item(&mut rng, next_id);
                next_id += 1;
                store.insert(weighted_clause(&it)).unwrap();
                oracle.insert(it);
            } else {
                let got = store.select_traced().ok();
                let want = oracle.select();
                let got = got.map(|s| {
                    let q = match s.queue {
                        QueueKind::Age => Queue::Age,
                        QueueKind::Weight => Queue::Weight,
                    };
                    (s.group, q, s.clause.id().0)
                });
                check(got == want, || format!("script {script_no}: selected {got:?}, oracle {want:?}"))?;
                if let Some((_, _, id)) = got {
                    check(!store.contains(ClauseId(id)), || format!("script {script_no}: {id} still stored"))?;
                }
                selections += 1;
            }
            let groups = store_groups(&store);
            let expected: Vec<Vec<u64>> = oracle.groups.iter().map(|g| g.ids()).collect();
            check(groups == expected, || {
                format!("script {script_no}: groups {groups:?}, oracle {expected:?}")
            })?;
            for pair in groups.windows(2) {
                check(pair[0].iter().all(|id| pair[1].binary_search(id).is_ok()), || {
                    format!("script {script_no}: groups not nested: {groups:?}")
                })?;
            }
            check(store.len() == oracle.len(), || format!("script {script_no}: size mismatch"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("10000 scripts, {selections} selections, in {elapsed:?}"))
}

// 4 ------------------------------------------------------------------------

fn frequency_windows() -> Outcome {
    let mut summary = Vec::new();
    for name in ["layered2", "layered3", "layered4"] {
        let strategy = preset(name).unwrap();
        let SelectionKind::Layered(config) = &strategy.selection else {
            return Err(format!("{name} is not layered"));
        };
        let period: u32 = config.ratios().iter().sum();
        let rounds = 6;
        let selections = (period * rounds) as usize;
        let d = config.d() as u64;
        let mut store = strategy.store().unwrap();
        // enough clauses in every band that no group runs dry
        let mut id = 0;
        let mut lower = 0u64;
        for c in config.cutoffs() {
            let target = match c {
                Cutoff::At(c) => *c,
                Cutoff::Infinite => lower + 50,
            };
            // theory leaves t <= all leaves a with t*d - a = target
            let theory = target / (d - 1) + 1;
            let all = theory * d - target;
            for _ in 0..selections {
                let it = Item {
                    id,
                    age: id,
                    weight: 2 + id % 7,
                    theory,
                    all,
                };
                assert_eq!(it.distance(d), target);
                store.insert(weighted_clause(&it)).unwrap();
                id += 1;
            }
            lower = target + 1;
        }
        let mut drawn = Vec::new();
        for _ in 0..selections {
            for g in 0..store.group_count() {
                check(!store.group(g).is_empty(), || format!("{name}: group {g} ran dry"))?;
            }
            drawn.push(store.select_traced().unwrap().group);
        }
        for (start, window) in drawn.windows(period as usize).enumerate() {
            for (g, &r) in config.ratios().iter().enumerate() {
                let n = window.iter().filter(|&&x| x == g).count();
                check(n == r as usize, || {
                    format!("{name}: window at {start} drew {n} from group {g}, expected {r}")
                })?;
            }
        }
        let ratios: Vec<String> = config.ratios().iter().map(u32::to_string).collect();
        summary.push(format!("{name} {} over {} windows", ratios.join(":"), drawn.len() + 1 - period as usize));
    }
    Ok(summary.join(", "))
}

// 5 ------------------------------------------------------------------------

fn fallback_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let one_group = LayeredConfig::new(1, parse_cutoff_list("inf").unwrap(), vec![1]).unwrap();
    for script_no in 0..1000 {
        let (age, weight) = loop {
            let (a, w) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
            if a + w > 0 {
                break (a, w);
            }
        };
        let aw = AgeWeightRatio::new(age, weight).unwrap();
        let mut layered = PassiveStore::new(SelectionKind::Layered(one_group.clone()), aw).unwrap();
        let mut plain = PassiveStore::new(SelectionKind::AgeWeightOnly, aw).unwrap();
        let mut oracle = ReferenceAgeWeight::new(age, weight);
        let (mut got_layered, mut got_plain, mut want) = (String::new(), String::new(), String::new());
        let mut next_id = 0;
        for _ in 0..rng.gen_range(1..80) {
            if rng.gen_bool(0.55) {
                let it = random_item(&mut rng, next_id);
                next_id += 1;
                layered.insert(weighted_clause(&it)).unwrap();
                plain.insert(weighted_clause(&it)).unwrap();
                oracle.insert(it);
            } else {
                let show = |c: Option<ClauseId>| c.map_or("-".to_string(), |c| c.to_string());
                got_layered += &format!("{} ", show(layered.select().ok().map(|c| c.id())));
                got_plain += &format!("{} ", show(plain.select().ok().map(|c| c.id())));
                want += &format!("{} ", show(oracle.select()));
            }
        }
        check(got_layered.as_bytes() == want.as_bytes(), || {
            format!("script {script_no}: one-group layered `{got_layered}`, reference `{want}`")
        })?;
        check(got_plain.as_bytes() == want.as_bytes(), || {
            format!("script {script_no}: age/weight store `{got_plain}`, reference `{want}`")
        })?;
    }
    Ok("1000 scripts byte-identical".into())
}

// 6 ------------------------------------------------------------------------

/// Random problem with a finite relevant universe: variables appear only
/// directly under predicates, function symbols only in ground terms of
/// depth at most 2. Predicates have arity at most 2; some clauses are
/// theory axioms.
fn epr_problem(rng: &mut ChaCha8Rng) -> String {
    let constants = rng.gen_range(1..=3);
    let preds: Vec<usize> = (0..rng.gen_range(2..=4)).map(|_| rng.gen_range(0..=2)).collect();
    let functions = rng.gen_bool(0.6);
    let mut text = String::new();
    for n in 0..rng.gen_range(3..=9) {
        let mut lits = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let p = rng.gen_range(0..preds.len());
            let args: Vec<String> = (0..preds[p])
                .map(|_| {
                    let c = |rng: &mut ChaCha8Rng| format!("c{}", rng.gen_range(0..constants));
                    match rng.gen_range(0..10) {
                        0..=4 => ["X", "Y", "Z"][rng.gen_range(0..3)].to_string(),
                        5 if functions => format!("f({})", c(rng)),
                        6 if functions => format!("g({},{})", c(rng), c(rng)),
                        7 if functions => format!("f(f({}))", c(rng)),
                        _ => c(rng),
                    }
                })
                .collect();
            let atom = if args.is_empty() {
                format!("p{p}")
            } else {
                format!("p{p}({})", args.join(","))
            };
            lits.push(if rng.gen_bool(0.5) { atom } else { format!("~{atom}") });
        }
        let role = if rng.gen_bool(0.3) { "theory_axiom" } else { "axiom" };
        text += &format!("cnf(c{n}, {role}, {}).\n", lits.join(" | "));
    }
    text
}

/// Every ground instance of `child` follows from the ground instances of
/// its parents.
fn step_is_entailed(g: &mut Grounder, child: &[Literal], parents: &[&[Literal]]) -> bool {
    let mut premises = Vec::new();
    for p in parents {
        premises.extend(g.instances(p));
    }
    for a in g.assignments(child) {
        let negated = g.ground(child, &a);
        let mut clauses = premises.clone();
        clauses.extend(negated.iter().map(|&l| vec![-l]));
        if dpll(&clauses, g.atom_count()).is_some() {
            return false;
        }
    }
    true
}

fn validate_proof(
    g: &mut Grounder,
    inputs: &[Clause],
    proof: &[DerivationRecord],
) -> Result<(), String> {
    let by_id: HashMap<ClauseId, &DerivationRecord> = proof.iter().map(|r| (r.id, r)).collect();
    let root = proof.last().ok_or("empty proof")?;
    check(root.literals.is_empty(), || "proof does not end in the empty clause".into())?;
    for step in proof {
        if step.parents.is_empty() {
            let input = inputs
                .get(step.id.0 as usize)
                .ok_or_else(|| format!("leaf {} is not an input clause", step.id))?;
            check(input.literals() == step.literals.as_slice(), || {
                format!("leaf {} differs from input clause", step.id)
            })?;
            continue;
        }
        let parents: Vec<&[Literal]> = step
            .parents
            .iter()
            .map(|p| by_id.get(p).map(|r| r.literals.as_slice()).ok_or(format!("missing parent {p}")))
            .collect::<Result<_, _>>()?;
        check(step_is_entailed(g, &step.literals, &parents), || {
            format!("step {} does not follow from {:?}", step.id, step.parents)
        })?;
    }
    Ok(())
}

fn soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let start = Instant::now();
    let strategies = [preset("default").unwrap(), preset("layered3").unwrap()];
    let options = RunOptions::with_limits(Limits::activations(3000));
    let (mut refuted, mut saturated, mut out, mut steps) = (0, 0, 0, 0);
    for n in 0..50 {
        let text = epr_problem(&mut rng);
        let spec = parse_named_problem(&format!("epr{n}"), &text).map_err(|e| format!("epr{n}: {e}"))?;
        for strategy in &strategies {
            let (problem, result) = prove_problem(&spec, strategy, &options).map_err(|e| e.to_string())?;
            let mut sig = problem.signature.clone();
            let inputs: Vec<&[Literal]> = problem.clauses.iter().map(Clause::literals).collect();
            let mut g = Grounder::new(&mut sig, &inputs);
            let mut ground = Vec::new();
            for c in &problem.clauses {
                ground.extend(g.instances(c.literals()));
            }
            let label = format!("epr{n} with {}", strategy.name);
            match result.status {
                Status::Refutation => {
                    refuted += 1;
                    let proof = result.refutation().unwrap();
                    steps += proof.len();
                    validate_proof(&mut g, &problem.clauses, proof)
                        .map_err(|e| format!("{label}: {e}\n{text}"))?;
                    check(dpll(&ground, g.atom_count()).is_none(), || {
                        format!("{label}: refuted but the oracle found a model\n{text}")
                    })?;
                }
                Status::Saturated => {
                    saturated += 1;
                    let model = dpll(&ground, g.atom_count());
                    check(model.as_ref().is_some_and(|m| satisfies(&ground, m)), || {
                        format!("{label}: saturated but the oracle found no model\n{text}")
                    })?;
                }
                Status::ResourceOut => out += 1,
            }
        }
    }
    check(refuted > 0 && saturated > 0, || {
        format!("degenerate corpus: {refuted} refutations, {saturated} saturations")
    })?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "50 problems x 2 strategies: {refuted} refutations ({steps} steps) validated, {saturated} saturations with models, {out} resource-out, in {elapsed:?}"
    ))
}

// 7, 8 ---------------------------------------------------------------------

fn flood_bench(dir: &std::path::Path) -> Result<BenchReport, String> {
    let options = BenchOptions {
        run: RunOptions::with_limits(Limits::activations(5000)),
        jobs: 1,
    };
    run_corpus(dir, &presets(), &options).map_err(|e| e.to_string())
}

fn flood_differential(dir: &std::path::Path, report: &mut Option<BenchReport>) -> Outcome {
    let start = Instant::now();
    let paths = write_flood_corpus(dir, &DEFAULT_SIZES, DEFAULT_VARIANTS, DEFAULT_THEORY_CLAUSES)
        .map_err(|e| e.to_string())?;
    check(paths.len() >= 30, || format!("only {} problems", paths.len()))?;
    let r = flood_bench(dir)?;
    let elapsed = start.elapsed();
    print!("{r}");
    check(r.skipped.is_empty() && r.problems() == paths.len(), || "some problems did not run".into())?;
    let base = r.refuted("default");
    for s in ["layered3", "layered4"] {
        let n = r.refuted(s);
        // n >= 1.25 * base
        check(4 * n >= 5 * base, || format!("{s} refuted {n}, default {base}: less than 25% more"))?;
    }
    within(elapsed, Duration::from_secs(300))?;
    let line = format!(
        "{} problems: default {base}, layered3 {}, layered4 {} refuted, in {elapsed:?}",
        paths.len(),
        r.refuted("layered3"),
        r.refuted("layered4")
    );
    *report = Some(r);
    Ok(line)
}

/// CSV text with the elapsed_ms column removed.
fn csv_without_elapsed(r: &BenchReport) -> Result<Vec<Vec<String>>, String> {
    let mut buf = Vec::new();
    r.write_csv(&mut buf).map_err(|e| e.to_string())?;
    let mut reader = csv::ReaderBuilder::new().has_headers(false).from_reader(buf.as_slice());
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        rows.push(
            rec.iter()
                .enumerate()
                .filter(|&(i, _)| i != 5)
                .map(|(_, f)| f.to_string())
                .collect(),
        );
    }
    Ok(rows)
}

fn determinism(dir: &std::path::Path, first: Option<&BenchReport>) -> Outcome {
    let first = first.ok_or("no first run (flood criterion did not finish)")?;
    let second = flood_bench(dir)?;
    let (a, b) = (csv_without_elapsed(first)?, csv_without_elapsed(&second)?);
    check(a.len() > 1, || "empty CSV".into())?;
    if let Some(i) = (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i)) {
        return Err(format!("row {i} differs: {:?} vs {:?}", a.get(i), b.get(i)));
    }
    Ok(format!("{} CSV rows identical apart from elapsed_ms", a.len()))
}

// --------------------------------------------------------------------------

fn run(label: &str, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = panic::catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
    match &outcome {
        Ok(detail) => println!("PASS  {label}: {detail}"),
        Err(detail) => println!("FAIL  {label}: {detail}"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    // optional arguments pick criteria by number, e.g. `-- 3 4`
    let wanted: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let dir = tempfile::tempdir().expect("temporary directory");
    let corpus = dir.path().join("flood");
    let report = RefCell::new(None);
    let criteria: [(&str, Box<dyn FnOnce() -> Outcome + '_>); 8] = [
        ("1 metric formulas", Box::new(metric_formulas)),
        ("2 tree semantics", Box::new(tree_semantics)),
        ("3 queue invariants", Box::new(queue_invariants)),
        ("4 frequency windows", Box::new(frequency_windows)),
        ("5 fallback equivalence", Box::new(fallback_equivalence)),
        ("6 soundness", Box::new(soundness)),
        ("7 flood differential", Box::new(|| flood_differential(&corpus, &mut report.borrow_mut()))),
        ("8 determinism", Box::new(|| determinism(&corpus, report.borrow().as_ref()))),
    ];
    let (mut passed, mut failed) = (0, 0);
    for (label, f) in criteria {
        let number = label.split(' ').next().unwrap();
        if !wanted.is_empty() && !wanted.iter().any(|w| w == number) {
            continue;
        }
        if run(label, f) {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    println!("acceptance: {passed} passed, {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
