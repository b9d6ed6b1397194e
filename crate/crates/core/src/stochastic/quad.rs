//! Adaptive Simpson quadrature.

use crate::error::{Error, Result};
use crate::real::{real, Real};

const MAX_DEPTH: u32 = 60;

/// Splits forced before the acceptance test applies, so a feature narrower
/// than the sample spacing of an early panel cannot make two coarse
/// estimates agree at zero and get through (the expected-max integrands
/// have exactly such lobes far from the interval midpoint).
const MIN_SPLITS: u32 = 6;

/// Integrates `f` over `[lo, hi]` to the given absolute tolerance.
///
/// Classic adaptive Simpson with Richardson extrapolation; panels split until
/// the local error estimate `|S_fine - S_coarse| / 15` fits the local budget.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: &F, lo: T, hi: T, tolerance: T) -> Result<T> {
    if lo == hi {
        return Ok(T::zero());
    }
    let mid = (lo + hi) * real::<T>(0.5);
    let flo = f(lo);
    let fmid = f(mid);
    let fhi = f(hi);
    let whole = simpson(lo, hi, flo, fmid, fhi);
    recurse(f, lo, hi, flo, fmid, fhi, whole, tolerance, MAX_DEPTH)
}

fn simpson<T: Real>(lo: T, hi: T, flo: T, fmid: T, fhi: T) -> T {
    (hi - lo) / real::<T>(6.0) * (flo + real::<T>(4.0) * fmid + fhi)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Real, F: Fn(T) -> T>(
    f: &F,
    lo: T,
    hi: T,
    flo: T,
    fmid: T,
    fhi: T,
    whole: T,
    tolerance: T,
    depth: u32,
) -> Result<T> {
    let mid = (lo + hi) * real::<T>(0.5);
    let lmid = (lo + mid) * real::<T>(0.5);
    let rmid = (mid + hi) * real::<T>(0.5);
    let flmid = f(lmid);
    let frmid = f(rmid);
    let left = simpson(lo, mid, flo, flmid, fmid);
    let right = simpson(mid, hi, fmid, frmid, fhi);
    let refined = left + right;
    let delta = refined - whole;
    if depth <= MAX_DEPTH - MIN_SPLITS && delta.abs() <= real::<T>(15.0) * tolerance {
        return Ok(refined + delta / real::<T>(15.0));
    }
    if depth == 0 {
        return Err(Error::Quadrature {
            lower: lo.to_f64().unwrap_or(f64::NAN),
            upper: hi.to_f64().unwrap_or(f64::NAN),
            tolerance: tolerance.to_f64().unwrap_or(f64::NAN),
        });
    }
    let half_tol = tolerance * real::<T>(0.5);
    let l = recurse(f, lo, mid, flo, flmid, fmid, left, half_tol, depth - 1)?;
    let r = recurse(f, mid, hi, fmid, frmid, fhi, right, half_tol, depth - 1)?;
    Ok(l + r)
}
