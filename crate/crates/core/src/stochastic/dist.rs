//! Gene-fitness distribution families and their maximum order statistics.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::real::{real, Real};
use crate::stochastic::harmonic::harmonic;
use crate::stochastic::quad::integrate;

/// Absolute tolerance for the numeric order-statistic quadrature.
const MAX_QUAD_TOL: f64 = 1e-10;

/// Distribution families the closed-form update models support.
///
/// The logistic family is the standard logistic; location and scale do not
/// change any of the model outputs for the other families either, they only
/// shift thresholds and maxima together.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DistributionKind<T: Real = f64> {
    Uniform { lower: T, upper: T },
    Exponential { rate: T },
    Normal { mean: T, std_dev: T },
    Logistic,
}

impl<T: Real> DistributionKind<T> {
    pub fn uniform(lower: T, upper: T) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::NonFiniteParameter {
                what: "uniform bound",
                value: f64::NAN,
            });
        }
        if lower >= upper {
            return Err(Error::InvertedBounds {
                index: 0,
                lower: lower.to_f64().unwrap_or(f64::NAN),
                upper: upper.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::Uniform { lower, upper })
    }

    pub fn exponential(rate: T) -> Result<Self> {
        if !(rate.is_finite() && rate > T::zero()) {
            return Err(Error::NonPositiveParameter {
                what: "exponential rate",
                value: rate.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::Exponential { rate })
    }

    pub fn normal(mean: T, std_dev: T) -> Result<Self> {
        if !mean.is_finite() {
            return Err(Error::NonFiniteParameter {
                what: "normal mean",
                value: mean.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(std_dev.is_finite() && std_dev > T::zero()) {
            return Err(Error::NonPositiveParameter {
                what: "normal standard deviation",
                value: std_dev.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::Normal { mean, std_dev })
    }

    pub fn logistic() -> Self {
        Self::Logistic
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Uniform { .. } => "uniform",
            Self::Exponential { .. } => "exponential",
            Self::Normal { .. } => "normal",
            Self::Logistic => "logistic",
        }
    }

    pub fn cdf(&self, x: T) -> T {
        match *self {
            Self::Uniform { lower, upper } => {
                if x <= lower {
                    T::zero()
                } else if x >= upper {
                    T::one()
                } else {
                    (x - lower) / (upper - lower)
                }
            }
            Self::Exponential { rate } => {
                if x <= T::zero() {
                    T::zero()
                } else {
                    T::one() - (-rate * x).exp()
                }
            }
            Self::Normal { mean, std_dev } => {
                let z = (x - mean) / (std_dev * real::<T>(std::f64::consts::SQRT_2));
                real::<T>(0.5) * (-z).erfc()
            }
            Self::Logistic => T::one() / (T::one() + (-x).exp()),
        }
    }

    pub fn pdf(&self, x: T) -> T {
        match *self {
            Self::Uniform { lower, upper } => {
                if x < lower || x > upper {
                    T::zero()
                } else {
                    T::one() / (upper - lower)
                }
            }
            Self::Exponential { rate } => {
                if x < T::zero() {
                    T::zero()
                } else {
                    rate * (-rate * x).exp()
                }
            }
            Self::Normal { mean, std_dev } => {
                let z = (x - mean) / std_dev;
                (-z * z * real::<T>(0.5)).exp()
                    / (std_dev * real::<T>((2.0 * std::f64::consts::PI).sqrt()))
            }
            Self::Logistic => {
                // sech^2 form keeps both tails stable.
                let e = (-x.abs()).exp();
                let denom = T::one() + e;
                e / (denom * denom)
            }
        }
    }

    /// P(draw > threshold), evaluated through the upper tail so that tiny
    /// probabilities keep full relative precision.
    pub fn exceed_prob(&self, threshold: T) -> T {
        match *self {
            Self::Uniform { lower, upper } => {
                if threshold <= lower {
                    T::one()
                } else if threshold >= upper {
                    T::zero()
                } else {
                    (upper - threshold) / (upper - lower)
                }
            }
            Self::Exponential { rate } => {
                if threshold <= T::zero() {
                    T::one()
                } else {
                    (-rate * threshold).exp()
                }
            }
            Self::Normal { mean, std_dev } => {
                let z = (threshold - mean) / (std_dev * real::<T>(std::f64::consts::SQRT_2));
                real::<T>(0.5) * z.erfc()
            }
            Self::Logistic => {
                let e = (-threshold).exp();
                e / (T::one() + e)
            }
        }
    }

    /// E(max of `n` iid draws).
    ///
    /// Closed forms: uniform `(a + b n) / (n + 1)`, exponential `H_n / rate`,
    /// logistic `H_{n-1}`. The normal family has no closed form and is
    /// integrated numerically (in double precision, cached per sample count)
    /// as `mean + std_dev * E(max of n standard normal draws)`.
    pub fn expected_max(&self, n: u64) -> Result<T> {
        if n == 0 {
            return Err(Error::ZeroSamples);
        }
        match *self {
            Self::Uniform { lower, upper } => {
                let nf = real::<T>(n as f64);
                Ok((lower + upper * nf) / (nf + T::one()))
            }
            Self::Exponential { rate } => Ok(harmonic::<T>(n) / rate),
            Self::Normal { mean, std_dev } => {
                let z = standard_normal_expected_max(n)?;
                Ok(mean + std_dev * real::<T>(z))
            }
            Self::Logistic => Ok(harmonic::<T>(n - 1)),
        }
    }
}

/// E(max of `n` standard normal draws) by adaptive quadrature of
/// `n x Phi(x)^{n-1} phi(x)` over `[-12, 12]`, memoized per sample count.
pub fn standard_normal_expected_max(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroSamples);
    }
    if n == 1 {
        return Ok(0.0);
    }
    let cache = normal_max_cache();
    if let Some(&z) = cache.read().expect("cache lock").get(&n) {
        return Ok(z);
    }
    let std = DistributionKind::<f64>::Normal {
        mean: 0.0,
        std_dev: 1.0,
    };
    let power = i32::try_from(n - 1).map_err(|_| Error::ZeroSamples)?;
    let nf = n as f64;
    let integrand = move |x: f64| nf * x * std.cdf(x).powi(power) * std.pdf(x);
    let z = integrate(&integrand, -12.0, 12.0, MAX_QUAD_TOL)?;
    cache.write().expect("cache lock").insert(n, z);
    Ok(z)
}

fn normal_max_cache() -> &'static RwLock<HashMap<u64, f64>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, f64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}
