//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("population size must be at least 1")]
    EmptyPopulation,

    #[error("problem dimension must be at least 1")]
    ZeroDimension,

    #[error("bounds list has {bounds} entries but the problem has {dimension} variables")]
    BoundsDimensionMismatch { bounds: usize, dimension: usize },

    #[error("bounds for variable {index} are inverted: lower {lower} > upper {upper}")]
    InvertedBounds { index: usize, lower: f64, upper: f64 },

    #[error("bounds for variable {index} are not finite")]
    NonFiniteBounds { index: usize },

    #[error("unknown benchmark function `{0}`")]
    UnknownBenchmark(String),

    #[error("benchmark `{name}` is only defined for {expected} variables, got {got}")]
    FixedDimension {
        name: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{what} must be positive and finite, got {value}")]
    NonPositiveParameter { what: &'static str, value: f64 },

    #[error("{what} must be finite, got {value}")]
    NonFiniteParameter { what: &'static str, value: f64 },

    #[error("probability must lie in [0, 1], got {0}")]
    ProbabilityOutOfRange(f64),

    #[error("position {k} is outside the population range 1..={n}")]
    PositionOutOfRange { k: u64, n: u64 },

    #[error("sample count must be at least 1")]
    ZeroSamples,

    #[error("generation index must be at least 1")]
    ZeroGenerationIndex,

    #[error("an ensemble needs at least one run")]
    ZeroRuns,

    #[error("quadrature did not reach tolerance {tolerance:e} on [{lower}, {upper}]")]
    Quadrature {
        lower: f64,
        upper: f64,
        tolerance: f64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
