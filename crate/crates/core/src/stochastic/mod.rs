//! Closed-form stochastic models of the bookkeeping both optimizers perform:
//! how often the tracked worst slot forces a re-scan, and how often the
//! tracked best slot is reassigned.

pub mod best;
pub mod dist;
pub mod harmonic;
pub mod quad;
pub mod worst;

pub use best::{best_update_bound, best_update_expectation, best_update_limit};
pub use dist::{standard_normal_expected_max, DistributionKind};
pub use harmonic::{harmonic, HarmonicTable};
pub use quad::integrate;
pub use worst::{
    worst_update_expectation, worst_update_expectation_given_k, worst_update_pmf,
    WorstModelParams,
};
