//! Harmonic numbers.

use crate::real::{real, Real, EULER_GAMMA};

/// Largest `n` summed directly; beyond it the asymptotic expansion is used.
const DIRECT_LIMIT: u64 = 1_000_000;

/// H_n = sum_{j=1..n} 1/j, with H_0 = 0.
///
/// Direct summation (smallest terms first) up to one million, then
/// `ln n + gamma + 1/(2n) - 1/(12 n^2)`, which is already well inside 1e-12
/// relative error at the crossover.
pub fn harmonic<T: Real>(n: u64) -> T {
    if n <= DIRECT_LIMIT {
        let mut sum = T::zero();
        for j in (1..=n).rev() {
            sum += T::one() / real::<T>(j as f64);
        }
        sum
    } else {
        let nf = real::<T>(n as f64);
        let half = real::<T>(0.5);
        let twelfth = real::<T>(1.0 / 12.0);
        nf.ln() + real::<T>(EULER_GAMMA) + half / nf - twelfth / (nf * nf)
    }
}

/// Prefix cache of harmonic numbers for dense ascending query patterns such as
/// the generation sums in the best-update model.
#[derive(Clone, Debug)]
pub struct HarmonicTable<T: Real = f64> {
    values: Vec<T>,
}

impl<T: Real> HarmonicTable<T> {
    pub fn new() -> Self {
        Self {
            values: vec![T::zero()],
        }
    }

    /// H_n, extending the cache by the recurrence `H_i = H_{i-1} + 1/i` as
    /// needed. The recurrence drift over the ranges used here stays orders of
    /// magnitude below the model tolerances.
    pub fn get(&mut self, n: usize) -> T {
        while self.values.len() <= n {
            let i = self.values.len();
            let last = *self.values.last().expect("table starts with H_0");
            self.values.push(last + T::one() / real::<T>(i as f64));
        }
        self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<T: Real> Default for HarmonicTable<T> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_are_exact() {
        assert_eq!(harmonic::<f64>(0), 0.0);
        assert_eq!(harmonic::<f64>(1), 1.0);
        assert!((harmonic::<f64>(4) - 25.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn h_100_matches_frozen_value() {
        assert!((harmonic::<f64>(100) - 5.187_377_517_639_62).abs() < 1e-12);
    }

    #[test]
    fn crossover_is_seamless() {
        // Direct sum just below the limit vs asymptotic just above it.
        let below: f64 = harmonic(DIRECT_LIMIT);
        let above: f64 = harmonic(DIRECT_LIMIT + 1);
        let step = 1.0 / (DIRECT_LIMIT + 1) as f64;
        assert!((above - below - step).abs() < 1e-12 * below);
    }

    #[test]
    fn asymptotic_branch_is_self_consistent() {
        // For n > the crossover the function is the expansion by construction;
        // check it against a direct sum at the boundary.
        let direct: f64 = (1..=DIRECT_LIMIT).rev().map(|j| 1.0 / j as f64).sum();
        let n = DIRECT_LIMIT as f64;
        let expansion = n.ln() + EULER_GAMMA + 0.5 / n - 1.0 / (12.0 * n * n);
        assert!((direct - expansion).abs() / direct < 1e-12);
    }

    #[test]
    fn table_matches_direct_summation() {
        let mut table = HarmonicTable::<f64>::new();
        for n in [0usize, 1, 2, 17, 100, 5000] {
            let direct: f64 = harmonic(n as u64);
            assert!((table.get(n) - direct).abs() < 1e-11);
        }
        // Out-of-order access still works off the cached prefix.
        assert!((table.get(3) - 11.0 / 6.0).abs() < 1e-15);
    }
}
