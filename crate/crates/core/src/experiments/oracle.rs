//! Literal chain simulation of the worst-slot re-scan count.
//!
//! This walks the process the closed-form law in
//! [`crate::stochastic::worst`] describes, without sharing any code with it
//! or with the optimizers, so the three agree only if each is right.
//!
//! Positions count slots from the end of the pass: the tracked worst sits at
//! position `k`, meaning `k` slots (its own included) are still to be
//! walked. One step of the chain: with probability `1 - p` the candidate at
//! the worst loses and the generation finishes; otherwise the replacement
//! forces a re-scan, the re-drawn worst lands uniformly on `1..=n`, and the
//! chain continues only while it lands strictly inside the unwalked stretch.

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::stochastic::worst::WorstModelParams;

/// Number of re-scans in one realization of the chain started at position
/// `k`.
pub fn oracle_worst_process(
    k: u64,
    params: WorstModelParams<f64>,
    rng: &mut RngStream,
) -> Result<u64> {
    if k == 0 || k > params.n {
        return Err(Error::PositionOutOfRange { k, n: params.n });
    }
    let mut count = 0;
    let mut pos = k;
    loop {
        if !rng.chance(params.p) {
            return Ok(count);
        }
        count += 1;
        debug_assert!(count <= k);
        let landing = rng.index(params.n as usize) as u64 + 1;
        if landing >= pos {
            return Ok(count);
        }
        pos = landing;
    }
}

/// Monte-Carlo estimate of the chain's distribution from position `k`:
/// entry `m` of the result is the observed frequency of exactly `m`
/// re-scans, for `m` in `0..=k`.
pub fn oracle_pmf_estimate(
    k: u64,
    params: WorstModelParams<f64>,
    trials: u64,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    if trials == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut counts = vec![0u64; k as usize + 1];
    for _ in 0..trials {
        let m = oracle_worst_process(k, params, rng)?;
        counts[m as usize] += 1;
    }
    Ok(counts
        .into_iter()
        .map(|c| c as f64 / trials as f64)
        .collect())
}

/// Monte-Carlo estimate of the chain's mean with the start position drawn
/// uniformly from `1..=n`, the way a fresh generation meets it.
pub fn oracle_expectation_estimate(
    params: WorstModelParams<f64>,
    trials: u64,
    rng: &mut RngStream,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::ZeroSamples);
    }
    let mut total = 0u64;
    for _ in 0..trials {
        let k = rng.index(params.n as usize) as u64 + 1;
        total += oracle_worst_process(k, params, rng)?;
    }
    Ok(total as f64 / trials as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stochastic::worst::{worst_update_expectation, worst_update_pmf};

    fn params(n: u64, p: f64) -> WorstModelParams<f64> {
        WorstModelParams::new(n, p).unwrap()
    }

    #[test]
    fn positions_outside_the_population_are_rejected() {
        let mut rng = RngStream::new(0, 0);
        assert!(oracle_worst_process(0, params(5, 0.5), &mut rng).is_err());
        assert!(oracle_worst_process(6, params(5, 0.5), &mut rng).is_err());
        assert!(oracle_pmf_estimate(3, params(5, 0.5), 0, &mut rng).is_err());
        assert!(oracle_expectation_estimate(params(5, 0.5), 0, &mut rng).is_err());
    }

    #[test]
    fn zero_acceptance_never_rescans() {
        let mut rng = RngStream::new(1, 0);
        for _ in 0..100 {
            assert_eq!(oracle_worst_process(7, params(10, 0.0), &mut rng).unwrap(), 0);
        }
    }

    #[test]
    fn sure_acceptance_from_the_last_slot_rescans_exactly_once() {
        // From position 1 every landing satisfies `landing >= 1`.
        let mut rng = RngStream::new(2, 0);
        let pmf = oracle_pmf_estimate(1, params(8, 1.0), 1_000, &mut rng).unwrap();
        assert_eq!(pmf, vec![0.0, 1.0]);
    }

    #[test]
    fn estimates_are_reproducible() {
        let a = oracle_pmf_estimate(4, params(6, 0.6), 10_000, &mut RngStream::new(9, 3)).unwrap();
        let b = oracle_pmf_estimate(4, params(6, 0.6), 10_000, &mut RngStream::new(9, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn simulation_matches_the_closed_form_law() {
        let p = params(6, 0.6);
        let trials = 200_000u64;
        let mut rng = RngStream::new(7, 0);
        let empirical = oracle_pmf_estimate(4, p, trials, &mut rng).unwrap();
        for (m, freq) in empirical.iter().enumerate() {
            let expect: f64 = worst_update_pmf(m as u64, 4, p).unwrap();
            let sigma = (expect * (1.0 - expect) / trials as f64).sqrt();
            assert!(
                (freq - expect).abs() <= 4.0 * sigma + 1e-9,
                "m = {m}: {freq} vs {expect}"
            );
        }
    }

    #[test]
    fn mean_over_uniform_starts_matches_the_expectation() {
        let p = params(10, 0.8);
        let mut rng = RngStream::new(11, 0);
        let estimate = oracle_expectation_estimate(p, 200_000, &mut rng).unwrap();
        let exact: f64 = worst_update_expectation(p).unwrap();
        assert!((estimate - exact).abs() < 0.01, "{estimate} vs {exact}");
    }
}
