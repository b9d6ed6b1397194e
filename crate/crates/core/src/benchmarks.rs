//! Benchmark objective functions and their problem catalog.
//!
//! All five functions are minimization problems over symmetric boxes. The
//! catalog hands out ready-made [`ProblemSpec`]s keyed by the names the CLI
//! accepts: `ackley`, `rosenbrock`, `chung_reynolds`, `step`, and
//! `goldstein_price`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::problem::{OptimumLocation, ProblemSpec};
use crate::real::{real, Real};

pub const BENCHMARK_NAMES: [&str; 5] = [
    "ackley",
    "rosenbrock",
    "chung_reynolds",
    "step",
    "goldstein_price",
];

/// Ackley function; minimum 0 at the origin.
pub fn ackley<T: Real>(x: &[T]) -> T {
    let d = real::<T>(x.len() as f64);
    let sum_sq: T = x.iter().map(|&v| v * v).sum();
    let sum_cos: T = x
        .iter()
        .map(|&v| (real::<T>(std::f64::consts::TAU) * v).cos())
        .sum();
    let a = real::<T>(20.0);
    let b = real::<T>(0.2);
    -a * (-b * (sum_sq / d).sqrt()).exp() - (sum_cos / d).exp() + a + T::one().exp()
}

/// Rosenbrock function; minimum 0 at (1, .., 1).
pub fn rosenbrock<T: Real>(x: &[T]) -> T {
    let hundred = real::<T>(100.0);
    let mut total = T::zero();
    for w in x.windows(2) {
        let a = w[1] - w[0] * w[0];
        let b = w[0] - T::one();
        total += hundred * a * a + b * b;
    }
    total
}

/// Sum of squares; exposed so tests can relate `chung_reynolds` to its square.
pub fn sphere<T: Real>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).sum()
}

/// Chung-Reynolds function, the squared sphere; minimum 0 at the origin.
pub fn chung_reynolds<T: Real>(x: &[T]) -> T {
    let s = sphere(x);
    s * s
}

/// Step function, a plateau staircase; minimum 0 anywhere in (-1, 1)^d.
pub fn step<T: Real>(x: &[T]) -> T {
    x.iter().map(|&v| v.abs().floor()).sum()
}

/// Goldstein-Price function (two variables); minimum 3 at (0, -1).
pub fn goldstein_price<T: Real>(x: &[T]) -> T {
    assert_eq!(x.len(), 2, "goldstein_price takes exactly two variables");
    let (x1, x2) = (x[0], x[1]);
    let c = |v: f64| real::<T>(v);
    let s = x1 + x2 + T::one();
    let first = T::one()
        + s * s
            * (c(19.0) - c(14.0) * x1 + c(3.0) * x1 * x1 - c(14.0) * x2
                + c(6.0) * x1 * x2
                + c(3.0) * x2 * x2);
    let t = c(2.0) * x1 - c(3.0) * x2;
    let second = c(30.0)
        + t * t
            * (c(18.0) - c(32.0) * x1 + c(12.0) * x1 * x1 + c(48.0) * x2 - c(36.0) * x1 * x2
                + c(27.0) * x2 * x2);
    first * second
}

struct CatalogEntry {
    name: &'static str,
    default_dimension: usize,
    fixed_dimension: Option<usize>,
    half_width: f64,
    optimum: f64,
}

const CATALOG: [CatalogEntry; 5] = [
    CatalogEntry {
        name: "ackley",
        default_dimension: 30,
        fixed_dimension: None,
        half_width: 10.0,
        optimum: 0.0,
    },
    CatalogEntry {
        name: "rosenbrock",
        default_dimension: 30,
        fixed_dimension: None,
        half_width: 10.0,
        optimum: 0.0,
    },
    CatalogEntry {
        name: "chung_reynolds",
        default_dimension: 30,
        fixed_dimension: None,
        half_width: 10.0,
        optimum: 0.0,
    },
    CatalogEntry {
        name: "step",
        default_dimension: 30,
        fixed_dimension: None,
        half_width: 100.0,
        optimum: 0.0,
    },
    CatalogEntry {
        name: "goldstein_price",
        default_dimension: 2,
        fixed_dimension: Some(2),
        half_width: 2.0,
        optimum: 3.0,
    },
];

/// Looks up a benchmark at its default dimension.
pub fn benchmark<T: Real>(name: &str) -> Result<ProblemSpec<T>> {
    let entry = find(name)?;
    build(entry, entry.default_dimension)
}

/// Looks up a benchmark at a caller-chosen dimension. Functions that are only
/// defined for a fixed dimension reject any other value.
pub fn benchmark_with_dimension<T: Real>(name: &str, dimension: usize) -> Result<ProblemSpec<T>> {
    let entry = find(name)?;
    if let Some(expected) = entry.fixed_dimension {
        if dimension != expected {
            return Err(Error::FixedDimension {
                name: entry.name,
                expected,
                got: dimension,
            });
        }
    }
    build(entry, dimension)
}

fn find(name: &str) -> Result<&'static CatalogEntry> {
    CATALOG
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownBenchmark(name.to_string()))
}

fn build<T: Real>(entry: &'static CatalogEntry, dimension: usize) -> Result<ProblemSpec<T>> {
    if dimension == 0 {
        return Err(Error::ZeroDimension);
    }
    let half = real::<T>(entry.half_width);
    let bounds = vec![(-half, half); dimension];
    let objective: Arc<dyn Fn(&[T]) -> T + Send + Sync> = match entry.name {
        "ackley" => Arc::new(|x: &[T]| ackley(x)),
        "rosenbrock" => Arc::new(|x: &[T]| rosenbrock(x)),
        "chung_reynolds" => Arc::new(|x: &[T]| chung_reynolds(x)),
        "step" => Arc::new(|x: &[T]| step(x)),
        "goldstein_price" => Arc::new(|x: &[T]| goldstein_price(x)),
        _ => unreachable!("catalog names are exhaustive"),
    };
    let location = match entry.name {
        "rosenbrock" => OptimumLocation::Point(vec![T::one(); dimension]),
        "step" => OptimumLocation::Region("any point with every |x_i| < 1"),
        "goldstein_price" => OptimumLocation::Point(vec![T::zero(), -T::one()]),
        _ => OptimumLocation::Point(vec![T::zero(); dimension]),
    };
    ProblemSpec::new(
        entry.name,
        bounds,
        objective,
        real::<T>(entry.optimum),
        location,
    )
}
