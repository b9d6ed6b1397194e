//! Monte-Carlo harnesses that confront the closed-form models with the
//! actual optimizer and with an independent chain simulation.

pub mod ensemble;
pub mod oracle;
pub mod transition;

pub use ensemble::{
    best_update_decay_check, run_ensemble, DecayCheck, EnsembleConfig, EnsembleReport,
};
pub use oracle::{oracle_expectation_estimate, oracle_pmf_estimate, oracle_worst_process};
pub use transition::{
    estimate_transition_matrix, row_side_means, tally_transitions, RowBalance, TransitionEstimate,
};
