//! Closed-form model of best-slot updates per generation.
//!
//! During generation `g` (counting from 1) the i-th slot improves on the
//! running best with probability `P(x > E(max of gn+i-1 draws))`, where `x` is
//! a fresh draw from the gene-fitness distribution. Summing over the slots
//! gives the expected number of best-slot updates in that generation.

use crate::error::{Error, Result};
use crate::real::{real, Real, EULER_GAMMA};
use crate::stochastic::dist::{standard_normal_expected_max, DistributionKind};
use crate::stochastic::harmonic::HarmonicTable;

/// E(number of best-slot updates in generation `g`) for population size `n`.
pub fn best_update_expectation<T: Real>(
    dist: DistributionKind<T>,
    n: u64,
    g: u64,
) -> Result<T> {
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }
    if g == 0 {
        return Err(Error::ZeroGenerationIndex);
    }
    let mut harmonics = HarmonicTable::<T>::new();
    let mut total = T::zero();
    for i in 1..=n {
        let m = g * n + i - 1;
        let term = match dist {
            // P(x > (a + bm)/(m+1)) = 1/(m+1) regardless of the bounds.
            DistributionKind::Uniform { .. } => T::one() / real::<T>((m + 1) as f64),
            // P(x > H_m / rate) = exp(-H_m).
            DistributionKind::Exponential { .. } => (-harmonics.get(m as usize)).exp(),
            // P(x > H_{m-1}) through the logistic upper tail.
            DistributionKind::Logistic => {
                let e = (-harmonics.get((m - 1) as usize)).exp();
                e / (T::one() + e)
            }
            // Location and scale cancel: P(x > mean + sd z_m) = Q(z_m).
            DistributionKind::Normal { .. } => {
                let z = standard_normal_expected_max(m)?;
                let arg = real::<T>(z / std::f64::consts::SQRT_2);
                real::<T>(0.5) * arg.erfc()
            }
        };
        total += term;
    }
    Ok(total)
}

/// The g = 1 limit as `n` grows, where one exists: `ln 2` for the uniform
/// family and `e^{-gamma} ln 2` for the exponential and logistic families.
/// The normal family decays too slowly to have a positive limit.
pub fn best_update_limit<T: Real>(dist: DistributionKind<T>) -> Option<T> {
    match dist {
        DistributionKind::Uniform { .. } => Some(real::<T>(std::f64::consts::LN_2)),
        DistributionKind::Exponential { .. } | DistributionKind::Logistic => {
            Some(real::<T>((-EULER_GAMMA).exp() * std::f64::consts::LN_2))
        }
        DistributionKind::Normal { .. } => None,
    }
}

/// Exact upper bound of E(best updates) over all `n` and `g`.
///
/// The uniform and exponential families increase toward their limits; the
/// normal and logistic families start at 1/2 for a single member and decrease.
pub fn best_update_bound<T: Real>(dist: DistributionKind<T>) -> T {
    match dist {
        DistributionKind::Uniform { .. } => real::<T>(std::f64::consts::LN_2),
        DistributionKind::Exponential { .. } => {
            real::<T>((-EULER_GAMMA).exp() * std::f64::consts::LN_2)
        }
        DistributionKind::Normal { .. } | DistributionKind::Logistic => real::<T>(0.5),
    }
}
