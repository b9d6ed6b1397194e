//! Repeated runs with aggregated instrumentation.
//!
//! Run `r` of an ensemble uses stream `r` of the configured seed, so the
//! ensemble is reproducible as a whole while runs stay independent. Runs
//! execute in parallel; all aggregation happens afterwards in run order, so
//! the report never depends on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::optimizer::{run_with_stream, Algorithm, RunConfig, RunTrace};
use crate::real::{real, Real};
use crate::stochastic::worst::{worst_update_expectation, WorstModelParams};

#[derive(Clone, Debug)]
pub struct EnsembleConfig<T: Real = f64> {
    pub base: RunConfig<T>,
    pub runs: usize,
    /// Keep every full trace in the report (memory scales with
    /// `runs × generations`).
    pub keep_traces: bool,
}

/// Aggregates over an ensemble. The three `Option` fields describe the
/// worst-slot re-scan behaviour and are populated only for the
/// semi-steady-state algorithm; the per-generation scan of the other one is
/// fixed by construction, so the model has nothing to predict there.
#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleReport<T: Real = f64> {
    pub algorithm: Algorithm,
    pub problem_name: String,
    pub population_size: usize,
    pub generations: usize,
    pub runs: usize,
    pub seed: u64,
    /// Acceptance rate at the tracked worst slot: per-run pooled
    /// replacements over encounters, averaged across runs that had any
    /// encounters.
    pub empirical_p: Option<f64>,
    /// Observed worst re-scans per generation, averaged across runs.
    pub empirical_rescans_per_generation: Option<f64>,
    /// Model mean re-scan count evaluated at `empirical_p`.
    pub model_rescans_per_generation: Option<f64>,
    /// Runs whose walk never arrived at the tracked worst slot; possible
    /// only for zero-generation runs.
    pub runs_without_encounters: usize,
    /// Mean mid-generation best re-pointings per run; index `g` holds
    /// generation `g + 1`.
    pub best_updates_by_generation: Vec<f64>,
    pub mean_best_updates: f64,
    /// Mean best fitness after initialization and after each generation.
    pub mean_best_fitness_history: Vec<T>,
    pub mean_final_best_fitness: T,
    pub traces: Option<Vec<RunTrace<T>>>,
}

/// Trend diagnostics for a per-generation best-update series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecayCheck {
    /// Least-squares slope of the series against the generation number.
    pub slope: f64,
    pub first: f64,
    pub last: f64,
    /// Negative slope and a first mean above the last one; noise between
    /// individual generations is allowed.
    pub passes: bool,
}

/// Fits the decaying-trend expectation to an observed mean best-update
/// series (index `g` holding generation `g + 1`).
pub fn best_update_decay_check(series: &[f64]) -> DecayCheck {
    let g = series.len();
    if g < 2 {
        let value = series.first().copied().unwrap_or(0.0);
        return DecayCheck {
            slope: 0.0,
            first: value,
            last: value,
            passes: false,
        };
    }
    let n = g as f64;
    let mean_x = (n + 1.0) / 2.0;
    let mean_y = series.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    for (i, &y) in series.iter().enumerate() {
        let dx = (i + 1) as f64 - mean_x;
        sxy += dx * (y - mean_y);
        sxx += dx * dx;
    }
    let slope = sxy / sxx;
    let first = series[0];
    let last = series[g - 1];
    DecayCheck {
        slope,
        first,
        last,
        passes: slope < 0.0 && first > last,
    }
}

pub fn run_ensemble<T: Real>(config: &EnsembleConfig<T>) -> Result<EnsembleReport<T>> {
    if config.runs == 0 {
        return Err(Error::ZeroRuns);
    }
    let traces: Vec<RunTrace<T>> = (0..config.runs)
        .into_par_iter()
        .map(|r| run_with_stream(&config.base, r as u64))
        .collect::<Result<_>>()?;

    let runs = config.runs as f64;
    let generations = config.base.generations;

    let mut runs_without_encounters = 0;
    let mut p_sum = 0.0;
    let mut p_runs = 0u64;
    let mut rescan_sum = 0.0;
    let mut best_updates_by_generation = vec![0.0; generations];
    for trace in &traces {
        let encounters: u64 = trace.records.iter().map(|r| r.worst_encounters).sum();
        let replacements: u64 = trace.records.iter().map(|r| r.worst_replacements).sum();
        if encounters == 0 {
            runs_without_encounters += 1;
        } else {
            p_sum += replacements as f64 / encounters as f64;
            p_runs += 1;
        }
        if generations > 0 {
            let rescans: u64 = trace.records.iter().map(|r| r.worst_recomputations).sum();
            rescan_sum += rescans as f64 / generations as f64;
        }
        for (slot, rec) in best_updates_by_generation.iter_mut().zip(&trace.records) {
            *slot += rec.best_updates as f64;
        }
    }
    for slot in &mut best_updates_by_generation {
        *slot /= runs;
    }
    let mean_best_updates = if generations > 0 {
        best_updates_by_generation.iter().sum::<f64>() / generations as f64
    } else {
        0.0
    };

    let mut mean_best_fitness_history = vec![T::zero(); generations + 1];
    for trace in &traces {
        for (acc, &value) in mean_best_fitness_history.iter_mut().zip(&trace.best_fitness) {
            *acc += value;
        }
    }
    for acc in &mut mean_best_fitness_history {
        *acc = *acc / real::<T>(runs);
    }
    let mean_final_best_fitness = *mean_best_fitness_history.last().expect("length g + 1");

    let incremental = config.base.algorithm == Algorithm::SJaya && generations > 0;
    let empirical_p = (incremental && p_runs > 0).then(|| p_sum / p_runs as f64);
    let empirical_rescans_per_generation = incremental.then(|| rescan_sum / runs);
    let model_rescans_per_generation = match empirical_p {
        Some(p) => Some(worst_update_expectation(WorstModelParams::new(
            config.base.population_size as u64,
            p,
        )?)?),
        None => None,
    };

    Ok(EnsembleReport {
        algorithm: config.base.algorithm,
        problem_name: config.base.problem.name.clone(),
        population_size: config.base.population_size,
        generations,
        runs: config.runs,
        seed: config.base.seed,
        empirical_p,
        empirical_rescans_per_generation,
        model_rescans_per_generation,
        runs_without_encounters,
        best_updates_by_generation,
        mean_best_updates,
        mean_best_fitness_history,
        mean_final_best_fitness,
        traces: config.keep_traces.then_some(traces),
    })
}
