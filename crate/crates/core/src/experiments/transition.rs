//! Empirical law of where the tracked worst slot moves when re-scanned.
//!
//! Positions use the same end-of-pass convention as the re-scan model: the
//! worst at array slot `s` (0-based, walked in ascending order) has
//! `k = n - s` slots still to walk, so `k = n` is the first slot touched and
//! `k = 1` the last. Every accepted replacement of the tracked worst yields
//! one transition `k_from -> k_to`.

use crate::error::{Error, Result};
use crate::experiments::ensemble::{run_ensemble, EnsembleConfig};
use crate::optimizer::RunTrace;
use crate::real::Real;

/// Row-normalized transition tallies in ascending-`k` order:
/// `matrix[from - 1][to - 1]` estimates `P(to | from)`. Rows with no
/// observations are all zero and flagged by `row_samples`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionEstimate {
    pub size: usize,
    pub matrix: Vec<Vec<f64>>,
    pub row_samples: Vec<u64>,
    /// Observed law of the position right after initialization; uniform in
    /// expectation because the initial worst is exchangeable across slots.
    pub initial_distribution: Vec<f64>,
    pub initial_samples: u64,
}

/// Per-row comparison of the transition mass on either side of the diagonal.
/// The destinations `j < k` are the slots the walk has not reached yet, so
/// their side carries more mass; `None` marks an empty side (`k = 1` has
/// nothing below, `k = n` nothing above).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RowBalance {
    pub k: u64,
    pub samples: u64,
    pub below_mean: Option<f64>,
    pub above_mean: Option<f64>,
}

/// Tallies the worst-slot moves of already-run traces.
pub fn tally_transitions<T: Real>(
    population_size: usize,
    traces: &[RunTrace<T>],
) -> Result<TransitionEstimate> {
    if population_size == 0 {
        return Err(Error::EmptyPopulation);
    }
    let n = population_size;
    let mut counts = vec![vec![0u64; n]; n];
    let mut initial_counts = vec![0u64; n];
    for trace in traces {
        initial_counts[n - 1 - trace.initial_worst_slot] += 1;
        for mv in &trace.worst_moves {
            let from_k = n - mv.from_slot;
            let to_k = n - mv.to_slot;
            counts[from_k - 1][to_k - 1] += 1;
        }
    }
    let row_samples: Vec<u64> = counts.iter().map(|row| row.iter().sum()).collect();
    let matrix = counts
        .iter()
        .zip(&row_samples)
        .map(|(row, &total)| {
            row.iter()
                .map(|&c| if total == 0 { 0.0 } else { c as f64 / total as f64 })
                .collect()
        })
        .collect();
    let initial_samples = traces.len() as u64;
    let initial_distribution = initial_counts
        .iter()
        .map(|&c| {
            if initial_samples == 0 {
                0.0
            } else {
                c as f64 / initial_samples as f64
            }
        })
        .collect();
    Ok(TransitionEstimate {
        size: n,
        matrix,
        row_samples,
        initial_distribution,
        initial_samples,
    })
}

/// Runs the ensemble and tallies its worst-slot moves. Only the
/// semi-steady-state algorithm produces moves; anything else yields empty
/// rows.
pub fn estimate_transition_matrix<T: Real>(
    config: &EnsembleConfig<T>,
) -> Result<TransitionEstimate> {
    let mut cfg = config.clone();
    cfg.keep_traces = true;
    let report = run_ensemble(&cfg)?;
    let traces = report.traces.expect("requested traces");
    tally_transitions(config.base.population_size, &traces)
}

/// Side means for every row, ascending in `k`.
pub fn row_side_means(estimate: &TransitionEstimate) -> Vec<RowBalance> {
    let n = estimate.size;
    (1..=n)
        .map(|k| {
            let row = &estimate.matrix[k - 1];
            let below = &row[..k - 1];
            let above = &row[k..];
            let mean = |side: &[f64]| {
                (!side.is_empty()).then(|| side.iter().sum::<f64>() / side.len() as f64)
            };
            RowBalance {
                k: k as u64,
                samples: estimate.row_samples[k - 1],
                below_mean: mean(below),
                above_mean: mean(above),
            }
        })
        .collect()
}
