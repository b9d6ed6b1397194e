//! `jaya-lab`: run the optimizers, evaluate the closed-form models, and
//! reproduce the published study tables.
//!
//! Every numeric value printed here comes straight from a library call; the
//! binary only arranges cells into tables and applies tolerance verdicts.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use jaya_lab::reference::{
    BestUpdateRow, BEST_UPDATE_BY_SIZE, BEST_UPDATE_LIMITS_ROW, EMPIRICAL_BEST, EMPIRICAL_WORST,
    INITIAL_WORST_DISTRIBUTION, MAX_WORST_EXPECTATION, STUDY_GENERATIONS, STUDY_RUNS,
    TRANSITION_MATRIX, TRANSITION_SIZE,
};
use jaya_lab::{
    benchmark, benchmark_with_dimension, best_update_bound, best_update_decay_check,
    best_update_expectation, best_update_limit, estimate_transition_matrix,
    initial_distribution_table, jaya_run_cost, oracle_pmf_estimate, row_side_means, run,
    run_ensemble, run_trace_table, sjaya_run_cost_with_rescan_rate, transition_table,
    worst_update_expectation, worst_update_pmf, Algorithm, Cell, CostConstants, DistributionKind,
    EnsembleConfig, EnsembleReport, Format, ProblemSpec, RngStream, RunConfig, Table,
    WorstModelParams, DEFAULT_WORST_RESCAN_RATE,
};

/// Fixed default seed; documented so every README output reproduces
/// verbatim.
const DEFAULT_SEED: u64 = 7;

#[derive(Parser)]
#[command(
    name = "jaya-lab",
    version,
    about = "Optimizer runs, re-scan/best-update models, cost accounting and table reproduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: csv or markdown.
    #[arg(long, global = true, default_value = "markdown")]
    format: Format,

    /// Write tables to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for ensembles (falls back to JAYA_LAB_JOBS, then all
    /// cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// key=value file; each key supplies the flag of the same name unless it
    /// was given on the command line.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Expected per-generation worst re-scan counts E(X|n).
    TheoryWorst(TheoryWorstArgs),
    /// Expected best-update counts E(Y_g; n, F) with the family's bound and
    /// limit.
    TheoryBest(TheoryBestArgs),
    /// Expected operation cost of a full run, term by term.
    Cost(CostArgs),
    /// One optimizer run with per-generation counters.
    Run(RunArgs),
    /// Aggregate an ensemble of independent runs.
    Ensemble(EnsembleArgs),
    /// Monte-Carlo check of the re-scan count distribution.
    Oracle(OracleArgs),
    /// Empirical worst-position transition matrix.
    Transition(TransitionArgs),
    /// Reproduce the published tables next to computed values.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct TheoryWorstArgs {
    /// Population sizes, comma separated; defaults to the published list.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "10,50,100,500,1500,2500,3500,4500,10000,20000,30000,40000"
    )]
    n: Vec<u64>,

    /// Replacement probability at the tracked worst slot.
    #[arg(long, default_value_t = 1.0)]
    p: f64,
}

#[derive(Args)]
struct TheoryBestArgs {
    /// Sampling family: uniform, exponential, normal or logistic.
    #[arg(long, value_parser = parse_family)]
    dist: DistributionKind<f64>,

    /// Population sizes, comma separated; defaults to the published list.
    #[arg(long, value_delimiter = ',', default_value = "1,10,50,100,500,5000,10000")]
    n: Vec<u64>,

    /// Generation number.
    #[arg(long, default_value_t = 1)]
    g: u64,
}

#[derive(Args)]
struct CostArgs {
    /// jaya or sjaya.
    #[arg(long, default_value = "sjaya")]
    algorithm: Algorithm,

    #[arg(long, default_value_t = 100)]
    n: usize,

    /// Problem dimension d.
    #[arg(long, default_value_t = 30)]
    dimension: usize,

    #[arg(long, default_value_t = 20)]
    generations: usize,

    /// Family supplying the expected best re-pointings per generation.
    #[arg(long, default_value = "uniform", value_parser = parse_family)]
    dist: DistributionKind<f64>,

    /// Full worst re-scans charged per generation.
    #[arg(long, default_value_t = DEFAULT_WORST_RESCAN_RATE)]
    rescan_rate: f64,

    /// Cost of one comparison.
    #[arg(long, default_value_t = 1.0)]
    comparison_cost: f64,

    /// Cost of one assignment.
    #[arg(long, default_value_t = 1.0)]
    assignment_cost: f64,

    /// Per-dimension step-weight setup cost.
    #[arg(long, default_value_t = 1.0)]
    param_cost: f64,

    /// Per-dimension candidate-construction cost.
    #[arg(long, default_value_t = 1.0)]
    op_cost: f64,

    /// Fitness evaluation cost per dimension (phi(d) = coeff * d).
    #[arg(long, default_value_t = 1.0)]
    eval_coeff: f64,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value = "sjaya")]
    algorithm: Algorithm,

    #[arg(long, default_value = "chung_reynolds")]
    function: String,

    /// Population size.
    #[arg(long, default_value_t = 20)]
    n: usize,

    #[arg(long, default_value_t = 10)]
    generations: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Override the catalogue dimension.
    #[arg(long)]
    dimension: Option<usize>,
}

#[derive(Args)]
struct EnsembleArgs {
    #[arg(long, default_value = "sjaya")]
    algorithm: Algorithm,

    #[arg(long, default_value = "chung_reynolds")]
    function: String,

    /// Population size.
    #[arg(long, default_value_t = 20)]
    n: usize,

    #[arg(long, default_value_t = 20)]
    generations: usize,

    #[arg(long, default_value_t = 500)]
    runs: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Override the catalogue dimension.
    #[arg(long)]
    dimension: Option<usize>,
}

#[derive(Args)]
struct OracleArgs {
    /// Population size.
    #[arg(long, default_value_t = 10)]
    n: u64,

    /// Start position of the tracked worst (defaults to the middle).
    #[arg(long)]
    k: Option<u64>,

    /// Replacement probability.
    #[arg(long, default_value_t = 0.5)]
    p: f64,

    #[arg(long, default_value_t = 1_000_000)]
    trials: u64,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct TransitionArgs {
    #[arg(long, default_value = "chung_reynolds")]
    function: String,

    /// Population size.
    #[arg(long, default_value_t = 10)]
    n: usize,

    #[arg(long, default_value_t = 10)]
    dimension: usize,

    #[arg(long, default_value_t = 10)]
    generations: usize,

    #[arg(long, default_value_t = 5000)]
    runs: usize,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct ReproduceArgs {
    /// 1, 2, 3, 4, 5, matrix or all.
    #[arg(long, default_value = "all")]
    table: String,

    /// Override the published run counts (tables 2, 3, 5 and the matrix).
    #[arg(long)]
    runs: Option<usize>,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn parse_family(name: &str) -> Result<DistributionKind<f64>, String> {
    match name {
        "uniform" => Ok(DistributionKind::uniform(0.0, 1.0).expect("valid bounds")),
        "exponential" => Ok(DistributionKind::exponential(1.0).expect("valid rate")),
        "normal" => Ok(DistributionKind::normal(0.0, 1.0).expect("valid scale")),
        "logistic" => Ok(DistributionKind::logistic()),
        other => Err(format!(
            "unknown family `{other}` (expected uniform, exponential, normal or logistic)"
        )),
    }
}

fn family_name(dist: &DistributionKind<f64>) -> &'static str {
    match dist {
        DistributionKind::Uniform { .. } => "uniform",
        DistributionKind::Exponential { .. } => "exponential",
        DistributionKind::Normal { .. } => "normal",
        DistributionKind::Logistic => "logistic",
    }
}

fn problem_for(function: &str, dimension: Option<usize>) -> Result<ProblemSpec<f64>> {
    let spec = match dimension {
        Some(d) => benchmark_with_dimension::<f64>(function, d)?,
        None => benchmark::<f64>(function)?,
    };
    Ok(spec)
}

fn verdict_cell(ok: bool) -> Cell {
    Cell::from(if ok { "pass" } else { "FAIL" })
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch() -> Result<bool> {
    let args = inject_config(std::env::args().collect())?;
    let cli = Cli::parse_from(args);
    configure_jobs(cli.jobs)?;
    let (tables, passed) = match &cli.command {
        Command::TheoryWorst(a) => (cmd_theory_worst(a)?, true),
        Command::TheoryBest(a) => (cmd_theory_best(a)?, true),
        Command::Cost(a) => (cmd_cost(a)?, true),
        Command::Run(a) => (cmd_run(a)?, true),
        Command::Ensemble(a) => (cmd_ensemble(a)?, true),
        Command::Oracle(a) => (cmd_oracle(a)?, true),
        Command::Transition(a) => (cmd_transition(a)?, true),
        Command::Reproduce(a) => cmd_reproduce(a)?,
    };
    let body = tables
        .iter()
        .map(|t| t.render(cli.format))
        .collect::<Vec<_>>()
        .join("\n");
    match &cli.output {
        Some(path) => fs::write(path, body)
            .with_context(|| format!("writing output to {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(passed)
}

/// Reads `--config FILE` (if present) and appends `--key value` for every
/// `key=value` line whose flag is absent from the command line, so explicit
/// flags always win over the file.
fn inject_config(mut args: Vec<String>) -> Result<Vec<String>> {
    let mut path = None;
    for (i, arg) in args.iter().enumerate() {
        if arg == "--config" {
            path = args.get(i + 1).cloned();
        } else if let Some(value) = arg.strip_prefix("--config=") {
            path = Some(value.to_owned());
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let text =
        fs::read_to_string(&path).with_context(|| format!("reading config file {path}"))?;
    for (number, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config file {path}: line {} is not key=value", number + 1);
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || key == "config" {
            continue;
        }
        let flag = format!("--{key}");
        let given = args
            .iter()
            .any(|a| *a == flag || a.starts_with(&format!("{flag}=")));
        if !given {
            args.push(flag);
            args.push(value.to_owned());
        }
    }
    Ok(args)
}

fn configure_jobs(flag: Option<usize>) -> Result<()> {
    let jobs = match flag {
        Some(j) => Some(j),
        None => match std::env::var("JAYA_LAB_JOBS") {
            Ok(raw) => Some(
                raw.parse::<usize>()
                    .with_context(|| format!("JAYA_LAB_JOBS: invalid thread count `{raw}`"))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(jobs) = jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        // Ignore the error if a pool already exists (e.g. repeated tests in
        // one process); the pool is process-global.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    Ok(())
}

fn cmd_theory_worst(args: &TheoryWorstArgs) -> Result<Vec<Table>> {
    let mut table = Table::new(
        format!("expected worst re-scans per generation (p = {})", args.p),
        &["n", "expected_rescans"],
    );
    for &n in &args.n {
        let value: f64 = worst_update_expectation(WorstModelParams::new(n, args.p)?)?;
        table.push_row(vec![Cell::from(n), Cell::from(value)]);
    }
    Ok(vec![table])
}

fn cmd_theory_best(args: &TheoryBestArgs) -> Result<Vec<Table>> {
    let family = family_name(&args.dist);
    let mut table = Table::new(
        format!("expected best updates (family = {family}, g = {})", args.g),
        &["n", "expected_best_updates"],
    );
    for &n in &args.n {
        let value: f64 = best_update_expectation(args.dist, n, args.g)?;
        table.push_row(vec![Cell::from(n), Cell::from(value)]);
    }
    match best_update_limit(args.dist) {
        Some(limit) => table.push_row(vec![Cell::from("inf"), Cell::from(limit)]),
        None => table.push_row(vec![Cell::from("inf"), Cell::from("-")]),
    }
    table.push_row(vec![
        Cell::from("bound"),
        Cell::from(best_update_bound(args.dist)),
    ]);
    Ok(vec![table])
}

fn cmd_cost(args: &CostArgs) -> Result<Vec<Table>> {
    let eval_coeff = args.eval_coeff;
    let constants = CostConstants::<f64> {
        comparison: args.comparison_cost,
        assignment: args.assignment_cost,
        param_setup: args.param_cost,
        op_per_dimension: args.op_cost,
        fitness_eval: Arc::new(move |d| eval_coeff * d as f64),
    };
    let breakdown = match args.algorithm {
        Algorithm::Jaya => {
            jaya_run_cost(&constants, args.n, args.dimension, args.generations)?
        }
        Algorithm::SJaya => {
            let mean_best_updates: f64 = best_update_expectation(args.dist, args.n as u64, 1)?;
            sjaya_run_cost_with_rescan_rate(
                &constants,
                args.n,
                args.dimension,
                args.generations,
                mean_best_updates,
                args.rescan_rate,
            )?
        }
    };
    let mut table = Table::new(
        format!(
            "{} expected run cost (n = {}, d = {}, G = {})",
            args.algorithm.name(),
            args.n,
            args.dimension,
            args.generations
        ),
        &["term", "cost"],
    );
    for term in &breakdown.terms {
        table.push_row(vec![Cell::from(term.label), Cell::from(term.amount)]);
    }
    table.push_row(vec![Cell::from("total"), Cell::from(breakdown.total)]);
    Ok(vec![table])
}

fn cmd_run(args: &RunArgs) -> Result<Vec<Table>> {
    let config = RunConfig {
        algorithm: args.algorithm,
        problem: problem_for(&args.function, args.dimension)?,
        population_size: args.n,
        generations: args.generations,
        seed: args.seed,
    };
    let trace = run(&config)?;
    Ok(vec![run_trace_table(&trace)])
}

fn ensemble_report(
    algorithm: Algorithm,
    problem: ProblemSpec<f64>,
    n: usize,
    generations: usize,
    runs: usize,
    seed: u64,
) -> Result<EnsembleReport<f64>> {
    let config = EnsembleConfig {
        base: RunConfig {
            algorithm,
            problem,
            population_size: n,
            generations,
            seed,
        },
        runs,
        keep_traces: false,
    };
    Ok(run_ensemble(&config)?)
}

fn cmd_ensemble(args: &EnsembleArgs) -> Result<Vec<Table>> {
    let problem = problem_for(&args.function, args.dimension)?;
    let problem_name = problem.name.clone();
    let report = ensemble_report(
        args.algorithm,
        problem,
        args.n,
        args.generations,
        args.runs,
        args.seed,
    )?;
    let optional = |value: Option<f64>| match value {
        Some(v) => Cell::from(v),
        None => Cell::from("n/a"),
    };
    let mut summary = Table::new(
        format!(
            "ensemble summary ({} on {problem_name})",
            args.algorithm.name()
        ),
        &["metric", "value"],
    );
    summary.push_row(vec![Cell::from("population_size"), Cell::from(args.n)]);
    summary.push_row(vec![Cell::from("generations"), Cell::from(args.generations)]);
    summary.push_row(vec![Cell::from("runs"), Cell::from(args.runs)]);
    summary.push_row(vec![Cell::from("seed"), Cell::from(args.seed)]);
    summary.push_row(vec![Cell::from("empirical_p"), optional(report.empirical_p)]);
    summary.push_row(vec![
        Cell::from("empirical_rescans_per_generation"),
        optional(report.empirical_rescans_per_generation),
    ]);
    summary.push_row(vec![
        Cell::from("model_rescans_per_generation"),
        optional(report.model_rescans_per_generation),
    ]);
    summary.push_row(vec![
        Cell::from("runs_without_encounters"),
        Cell::from(report.runs_without_encounters),
    ]);
    summary.push_row(vec![
        Cell::from("mean_best_updates"),
        Cell::from(report.mean_best_updates),
    ]);
    summary.push_row(vec![
        Cell::from("mean_final_best_fitness"),
        Cell::from(report.mean_final_best_fitness),
    ]);

    let mut by_generation = Table::new(
        "per-generation means",
        &["generation", "mean_best_updates", "mean_best_fitness"],
    );
    by_generation.push_row(vec![
        Cell::from(0u64),
        Cell::from("-"),
        Cell::from(report.mean_best_fitness_history[0]),
    ]);
    for g in 1..=args.generations {
        by_generation.push_row(vec![
            Cell::from(g),
            Cell::from(report.best_updates_by_generation[g - 1]),
            Cell::from(report.mean_best_fitness_history[g]),
        ]);
    }
    Ok(vec![summary, by_generation])
}

fn cmd_oracle(args: &OracleArgs) -> Result<Vec<Table>> {
    let k = args.k.unwrap_or(args.n.div_ceil(2));
    let params = WorstModelParams::new(args.n, args.p)?;
    let mut rng = RngStream::new(args.seed, 0);
    let observed = oracle_pmf_estimate(k, params, args.trials, &mut rng)?;
    let mut table = Table::new(
        format!(
            "re-scan count distribution (n = {}, k = {k}, p = {}, trials = {})",
            args.n, args.p, args.trials
        ),
        &["m", "observed_frequency", "model_probability"],
    );
    for (m, &frequency) in observed.iter().enumerate() {
        let model: f64 = worst_update_pmf(m as u64, k, params)?;
        table.push_row(vec![
            Cell::from(m),
            Cell::from(frequency),
            Cell::from(model),
        ]);
    }
    Ok(vec![table])
}

fn transition_estimate_for(
    function: &str,
    n: usize,
    dimension: usize,
    generations: usize,
    runs: usize,
    seed: u64,
) -> Result<jaya_lab::TransitionEstimate> {
    let config = EnsembleConfig {
        base: RunConfig {
            algorithm: Algorithm::SJaya,
            problem: benchmark_with_dimension::<f64>(function, dimension)?,
            population_size: n,
            generations,
            seed,
        },
        runs,
        keep_traces: false,
    };
    Ok(estimate_transition_matrix(&config)?)
}

fn cmd_transition(args: &TransitionArgs) -> Result<Vec<Table>> {
    let estimate = transition_estimate_for(
        &args.function,
        args.n,
        args.dimension,
        args.generations,
        args.runs,
        args.seed,
    )?;
    Ok(vec![
        transition_table(&estimate),
        initial_distribution_table(&estimate),
    ])
}

fn cmd_reproduce(args: &ReproduceArgs) -> Result<(Vec<Table>, bool)> {
    let mut tables = Vec::new();
    let mut all_pass = true;
    let mut record = |name: &str, mut out: (Vec<Table>, bool)| {
        eprintln!(
            "reproduce {name}: {}",
            if out.1 { "PASS" } else { "FAIL" }
        );
        all_pass &= out.1;
        tables.append(&mut out.0);
    };
    match args.table.as_str() {
        "1" => record("table 1", reproduce_table1()?),
        "2" => record("table 2", reproduce_table2(&study_reports(args)?)),
        "3" => record("table 3", reproduce_table3(args)?),
        "4" => record("table 4", reproduce_table4()?),
        "5" => record("table 5", reproduce_table5(&study_reports(args)?)),
        "matrix" => record("matrix", reproduce_matrix(args)?),
        "all" => {
            record("table 1", reproduce_table1()?);
            let study = study_reports(args)?;
            record("table 2", reproduce_table2(&study));
            record("table 3", reproduce_table3(args)?);
            record("table 4", reproduce_table4()?);
            record("table 5", reproduce_table5(&study));
            record("matrix", reproduce_matrix(args)?);
        }
        other => bail!("unknown table `{other}` (expected 1, 2, 3, 4, 5, matrix or all)"),
    }
    Ok((tables, all_pass))
}

fn reproduce_table1() -> Result<(Vec<Table>, bool)> {
    let mut table = Table::new(
        "table 1: maximum expected worst re-scans per generation",
        &["n", "published", "computed", "verdict"],
    );
    let mut pass = true;
    for &(n, published) in MAX_WORST_EXPECTATION.iter() {
        let computed: f64 = worst_update_expectation(WorstModelParams::new(n, 1.0)?)?;
        let ok = (computed - published).abs() <= 1e-6;
        pass &= ok;
        table.push_row(vec![
            Cell::from(n),
            Cell::from(published),
            Cell::from(computed),
            verdict_cell(ok),
        ]);
    }
    Ok((vec![table], pass))
}

struct StudyReport {
    function: &'static str,
    n: usize,
    report: EnsembleReport<f64>,
}

/// The full published grid at the published parameters (500 runs x 20
/// generations unless overridden).
fn study_reports(args: &ReproduceArgs) -> Result<Vec<StudyReport>> {
    let runs = args.runs.unwrap_or(STUDY_RUNS);
    EMPIRICAL_WORST
        .iter()
        .map(|row| {
            let report = ensemble_report(
                Algorithm::SJaya,
                benchmark::<f64>(row.function)?,
                row.n,
                STUDY_GENERATIONS,
                runs,
                args.seed,
            )?;
            Ok(StudyReport {
                function: row.function,
                n: row.n,
                report,
            })
        })
        .collect()
}

fn reproduce_table2(study: &[StudyReport]) -> (Vec<Table>, bool) {
    let mut table = Table::new(
        "table 2: empirical and theoretical worst re-scans",
        &[
            "function",
            "n",
            "published_p",
            "computed_p",
            "published_ex",
            "computed_ex",
            "published_model",
            "computed_model",
            "verdict",
        ],
    );
    let mut pass = true;
    for published in EMPIRICAL_WORST.iter() {
        let row = study
            .iter()
            .find(|r| r.function == published.function && r.n == published.n)
            .expect("full grid");
        let p = row.report.empirical_p.expect("sjaya ensemble");
        let ex = row
            .report
            .empirical_rescans_per_generation
            .expect("sjaya ensemble");
        let model = row
            .report
            .model_rescans_per_generation
            .expect("sjaya ensemble");
        let ok = (p - published.p).abs() <= 0.02
            && (ex - published.empirical).abs() <= 0.15
            && (model - published.theoretical).abs() <= 0.02;
        pass &= ok;
        table.push_row(vec![
            Cell::from(published.function),
            Cell::from(published.n),
            Cell::from(published.p),
            Cell::from(p),
            Cell::from(published.empirical),
            Cell::from(ex),
            Cell::from(published.theoretical),
            Cell::from(model),
            verdict_cell(ok),
        ]);
    }
    (vec![table], pass)
}

fn reproduce_table3(args: &ReproduceArgs) -> Result<(Vec<Table>, bool)> {
    let estimate = transition_estimate_for(
        "chung_reynolds",
        TRANSITION_SIZE,
        10,
        10,
        args.runs.unwrap_or(5000),
        args.seed,
    )?;
    let mut table = Table::new(
        "table 3: initial worst-position distribution",
        &["k", "published", "computed", "verdict"],
    );
    let mut pass = true;
    for &(k, published) in INITIAL_WORST_DISTRIBUTION.iter() {
        let computed = estimate.initial_distribution[k as usize - 1];
        let ok = (0.08..=0.12).contains(&computed);
        pass &= ok;
        table.push_row(vec![
            Cell::from(k),
            Cell::from(published),
            Cell::from(computed),
            verdict_cell(ok),
        ]);
    }
    Ok((vec![table], pass))
}

fn reproduce_table4() -> Result<(Vec<Table>, bool)> {
    let mut table = Table::new(
        "table 4: first-generation best updates by family",
        &["family", "n", "published", "computed", "verdict"],
    );
    let mut pass = true;
    let pick = |row: &BestUpdateRow, family: &str| match family {
        "exponential" => row.exponential,
        "logistic" => row.logistic,
        "normal" => row.normal,
        _ => row.uniform,
    };
    for (family, _) in BEST_UPDATE_LIMITS_ROW.iter() {
        let dist = parse_family(family).expect("known family");
        for row in BEST_UPDATE_BY_SIZE.iter() {
            let published = pick(row, family);
            let computed: f64 = best_update_expectation(dist, row.n, 1)?;
            let ok = (computed - published).abs() <= 5e-5;
            pass &= ok;
            table.push_row(vec![
                Cell::from(*family),
                Cell::from(row.n),
                Cell::from(published),
                Cell::from(computed),
                verdict_cell(ok),
            ]);
        }
    }
    for &(family, published) in BEST_UPDATE_LIMITS_ROW.iter() {
        let dist = parse_family(family).expect("known family");
        let computed = best_update_limit(dist);
        let ok = match (computed, published) {
            (None, None) => true,
            (Some(c), Some(p)) => (c - p).abs() <= 5e-5,
            _ => false,
        };
        pass &= ok;
        table.push_row(vec![
            Cell::from(family),
            Cell::from("inf"),
            published.map_or(Cell::from("-"), Cell::from),
            computed.map_or(Cell::from("-"), Cell::from),
            verdict_cell(ok),
        ]);
    }
    Ok((vec![table], pass))
}

fn reproduce_table5(study: &[StudyReport]) -> (Vec<Table>, bool) {
    let mut table = Table::new(
        "table 5: empirical best updates by generation",
        &[
            "function",
            "n",
            "published_g1",
            "computed_g1",
            "published_g10",
            "computed_g10",
            "published_g20",
            "computed_g20",
            "published_mean",
            "computed_mean",
            "decay",
            "verdict",
        ],
    );
    let mut pass = true;
    for published in EMPIRICAL_BEST.iter() {
        let row = study
            .iter()
            .find(|r| r.function == published.function && r.n == published.n)
            .expect("full grid");
        let series = &row.report.best_updates_by_generation;
        let trend = best_update_decay_check(series);
        // The n = 1000 rows decay too slowly for endpoint checks at this run
        // count (the published reference rows themselves are non-monotone
        // there), so they are shown but not gated.
        let verdict = if published.n <= 100 {
            let ok = (series[0] - published.gen1).abs() <= 0.1 && trend.passes;
            pass &= ok;
            verdict_cell(ok)
        } else {
            Cell::from("-")
        };
        table.push_row(vec![
            Cell::from(published.function),
            Cell::from(published.n),
            Cell::from(published.gen1),
            Cell::from(series[0]),
            Cell::from(published.gen10),
            Cell::from(series[9]),
            Cell::from(published.gen20),
            Cell::from(series[19]),
            Cell::from(published.mean),
            Cell::from(row.report.mean_best_updates),
            Cell::from(if trend.passes { "yes" } else { "no" }),
            verdict,
        ]);
    }
    (vec![table], pass)
}

fn reproduce_matrix(args: &ReproduceArgs) -> Result<(Vec<Table>, bool)> {
    let estimate = transition_estimate_for(
        "chung_reynolds",
        TRANSITION_SIZE,
        10,
        10,
        args.runs.unwrap_or(5000),
        args.seed,
    )?;
    let computed = transition_table(&estimate);

    let mut published = Table::new(
        "worst-position transitions (published)",
        &computed.columns[..computed.columns.len() - 1]
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>(),
    );
    for (i, row) in TRANSITION_MATRIX.iter().enumerate() {
        let mut cells = vec![Cell::from((TRANSITION_SIZE - i) as u64)];
        cells.extend(row.iter().map(|&v| Cell::from(v)));
        published.push_row(cells);
    }

    let rows_stochastic = estimate
        .matrix
        .iter()
        .all(|row| (row.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
    let diagonal_in_band = (0..TRANSITION_SIZE)
        .all(|i| (0.02..=0.08).contains(&estimate.matrix[i][i]));
    let side_holds = row_side_means(&estimate)
        .iter()
        .filter(|balance| match (balance.below_mean, balance.above_mean) {
            (Some(below), Some(above)) => below >= above,
            _ => true,
        })
        .count();
    let initial_in_band = estimate
        .initial_distribution
        .iter()
        .all(|mass| (0.08..=0.12).contains(mass));

    let mut checks = Table::new("transition matrix checks", &["check", "verdict"]);
    let mut pass = true;
    for (label, ok) in [
        ("every row sums to one within 1e-9", rows_stochastic),
        ("diagonal entries within [0.02, 0.08]", diagonal_in_band),
        (
            "not-yet-traversed side outweighs traversed side in at least 9 of 10 rows",
            side_holds >= 9,
        ),
        (
            "initial distribution entries within [0.08, 0.12]",
            initial_in_band,
        ),
    ] {
        pass &= ok;
        checks.push_row(vec![Cell::from(label), verdict_cell(ok)]);
    }

    Ok((
        vec![computed, published, checks, initial_distribution_table(&estimate)],
        pass,
    ))
}
