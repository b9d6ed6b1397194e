//! Population-heuristic laboratory: two related optimizers with full event
//! instrumentation, closed-form models of their bookkeeping behaviour, and
//! Monte-Carlo harnesses that confront the models with the real thing.
//!
//! The pieces fit together like this:
//!
//! * [`optimizer`] runs the per-generation-rescan and semi-steady-state
//!   variants over the [`benchmarks`] catalog (or any [`problem`]),
//!   counting worst re-scans, best re-pointings, replacements, and
//!   worst-slot encounters as it goes;
//! * [`stochastic`] evaluates the closed-form laws of those counters — the
//!   re-scan count distribution, the best-update decay across generations,
//!   and the order-statistic machinery underneath;
//! * [`experiments`] estimates the same quantities by simulation: run
//!   ensembles, an independent chain oracle, and worst-position transition
//!   tallies;
//! * [`cost`] prices whole runs in abstract operation units and bounds the
//!   saving of incremental extreme tracking;
//! * [`report`] renders everything as CSV or Markdown, and [`reference`]
//!   pins the recorded results the `reproduce` pipelines check against.
//!
//! Everything numeric is generic over the scalar type through [`Real`]
//! (`f64` by default, `f32` supported); model evaluation that needs
//! quadrature always integrates in double precision internally.
//!
//! Determinism: every stochastic entry point takes a seed (and a stream id
//! for ensemble members); identical inputs give bit-identical outputs,
//! including across thread counts.

pub mod benchmarks;
pub mod cost;
pub mod error;
pub mod experiments;
pub mod optimizer;
pub mod population;
pub mod problem;
pub mod real;
pub mod reference;
pub mod report;
pub mod rng;
pub mod stochastic;

pub use benchmarks::{benchmark, benchmark_with_dimension, BENCHMARK_NAMES};
pub use cost::{
    additional_cost_bound, expected_percentile, expected_replacements, jaya_run_cost,
    naive_scan_counts, scan_cost, sjaya_run_cost, sjaya_run_cost_with_rescan_rate,
    AdditionalCostBound, CostBreakdown, CostConstants, CostTerm, DEFAULT_WORST_RESCAN_RATE,
};
pub use error::{Error, Result};
pub use experiments::{
    best_update_decay_check, estimate_transition_matrix, oracle_expectation_estimate,
    oracle_pmf_estimate, oracle_worst_process, row_side_means, run_ensemble, tally_transitions,
    DecayCheck, EnsembleConfig, EnsembleReport, RowBalance, TransitionEstimate,
};
pub use optimizer::{
    jaya_generation, make_candidate, run, run_with_stream, sjaya_generation, Algorithm,
    CounterRecord, RunConfig, RunTrace, WorstMove,
};
pub use population::{find_extreme, init_population, Extreme, Individual, Population, ScanOutcome};
pub use problem::{Objective, OptimumLocation, ProblemSpec};
pub use real::{Real, EULER_GAMMA};
pub use report::{
    initial_distribution_table, run_trace_table, transition_table, Cell, Format, Table,
};
pub use rng::RngStream;
pub use stochastic::{
    best_update_bound, best_update_expectation, best_update_limit, harmonic,
    standard_normal_expected_max, worst_update_expectation, worst_update_expectation_given_k,
    worst_update_pmf, DistributionKind, HarmonicTable, WorstModelParams,
};

/// Single-precision aliases; the unsuffixed names default their scalar to
/// `f64`.
pub type ProblemSpec32 = problem::ProblemSpec<f32>;
pub type RunConfig32 = optimizer::RunConfig<f32>;
pub type RunTrace32 = optimizer::RunTrace<f32>;
pub type DistributionKind32 = stochastic::DistributionKind<f32>;
pub type CostConstants32 = cost::CostConstants<f32>;
