//! Closed-form model of worst-slot re-scans per generation.
//!
//! The model follows the tracked worst slot through one pass. The position is
//! counted from the end of the pass: position `k` means the slot is processed
//! with `k - 1` slots still pending after it, so a re-drawn worst can be met
//! again only if it lands strictly below `k`. Each encounter replaces the
//! worst with probability `p`, every replacement costs one full re-scan, and
//! the re-drawn worst position is uniform on `1..=n`.

use crate::error::{Error, Result};
use crate::real::{real, Real};

/// Relative size at which the tail of the expectation series is dropped; the
/// terms decay faster than factorially, so the truncation is conservative.
const TAIL_CUTOFF: f64 = 1e-18;

/// Population size `n` and per-encounter replacement probability `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorstModelParams<T: Real = f64> {
    pub n: u64,
    pub p: T,
}

impl<T: Real> WorstModelParams<T> {
    pub fn new(n: u64, p: T) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPopulation);
        }
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::ProbabilityOutOfRange(p.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { n, p })
    }
}

fn check_position<T: Real>(k: u64, params: &WorstModelParams<T>) -> Result<()> {
    if k == 0 || k > params.n {
        return Err(Error::PositionOutOfRange { k, n: params.n });
    }
    Ok(())
}

/// P(X = m | the worst starts at position k), the chance that a generation
/// performs exactly `m` re-scans.
///
/// For `1 <= m <= k` this is
/// `(1/(m-1)!) (p/n)^m (n + p - pk/m) prod_{j=1..m-1} (k - j)`,
/// evaluated by an incremental term product so no explicit factorial or power
/// ever overflows; `m = 0` has probability `1 - p` and `m > k` is impossible.
pub fn worst_update_pmf<T: Real>(m: u64, k: u64, params: WorstModelParams<T>) -> Result<T> {
    check_position(k, &params)?;
    let WorstModelParams { n, p } = params;
    if m == 0 {
        return Ok(T::one() - p);
    }
    if m > k {
        return Ok(T::zero());
    }
    let nf = real::<T>(n as f64);
    let kf = real::<T>(k as f64);
    let ratio = p / nf;
    // a = (p/n)^m prod_{j=1..m-1}(k-j) / (m-1)!
    let mut a = ratio;
    for j in 1..m {
        a = a * ratio * (kf - real::<T>(j as f64)) / real::<T>(j as f64);
    }
    Ok(a * (nf + p - p * kf / real::<T>(m as f64)))
}

/// E(X | the worst starts at position k): expected re-scans per generation.
///
/// Same incremental product as the pmf, summed with early truncation once the
/// tail is negligible relative to the running sum.
pub fn worst_update_expectation_given_k<T: Real>(
    k: u64,
    params: WorstModelParams<T>,
) -> Result<T> {
    check_position(k, &params)?;
    let WorstModelParams { n, p } = params;
    if p == T::zero() {
        return Ok(T::zero());
    }
    let nf = real::<T>(n as f64);
    let kf = real::<T>(k as f64);
    let ratio = p / nf;
    let cutoff = real::<T>(TAIL_CUTOFF);
    let mut a = ratio; // the m = 1 product
    let mut total = T::zero();
    for m in 1..=k {
        let mf = real::<T>(m as f64);
        let term = mf * a * (nf + p - p * kf / mf);
        total += term;
        if term < cutoff * total {
            break;
        }
        a = a * ratio * (kf - mf) / mf;
    }
    Ok(total)
}

/// E(X | n): expected re-scans per generation with the starting position
/// uniform over `1..=n`.
pub fn worst_update_expectation<T: Real>(params: WorstModelParams<T>) -> Result<T> {
    let mut total = T::zero();
    for k in 1..=params.n {
        total += worst_update_expectation_given_k(k, params)?;
    }
    Ok(total / real::<T>(params.n as f64))
}
