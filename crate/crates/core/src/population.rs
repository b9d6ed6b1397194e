//! Individuals, populations, and the linear extreme scan.

use crate::error::{Error, Result};
use crate::problem::ProblemSpec;
use crate::real::Real;
use crate::rng::RngStream;

/// One candidate solution with its cached objective value.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual<T: Real = f64> {
    pub genes: Vec<T>,
    pub fitness: T,
}

impl<T: Real> Individual<T> {
    pub fn evaluated(genes: Vec<T>, spec: &ProblemSpec<T>) -> Self {
        let fitness = spec.evaluate(&genes);
        Self { genes, fitness }
    }
}

/// Which end of the fitness scale a scan looks for. Lower fitness is better.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    Best,
    Worst,
}

/// Outcome of one linear extreme scan, with the work it performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    /// Slot of the extreme member (0-based). Ties go to the first slot
    /// encountered, so equal inputs always give equal outcomes.
    pub index: usize,
    /// Always the population size: every member is checked once.
    pub comparisons: usize,
    /// Times the running extreme was (re)assigned, counting the initial seed.
    pub assignments: usize,
}

/// Linear scan over the slots in ascending order; first extreme wins ties.
pub fn find_extreme<T: Real>(members: &[Individual<T>], which: Extreme) -> ScanOutcome {
    assert!(!members.is_empty(), "cannot scan an empty population");
    let mut index = 0;
    let mut assignments = 1;
    for (i, m) in members.iter().enumerate().skip(1) {
        let replaces = match which {
            Extreme::Best => m.fitness < members[index].fitness,
            Extreme::Worst => m.fitness > members[index].fitness,
        };
        if replaces {
            index = i;
            assignments += 1;
        }
    }
    ScanOutcome {
        index,
        comparisons: members.len(),
        assignments,
    }
}

/// A population with tracked best and worst slots.
#[derive(Clone, Debug, PartialEq)]
pub struct Population<T: Real = f64> {
    pub members: Vec<Individual<T>>,
    /// Slot of a minimal-fitness member (0-based).
    pub best_index: usize,
    /// Slot of a maximal-fitness member (0-based).
    pub worst_index: usize,
}

impl<T: Real> Population<T> {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn best(&self) -> &Individual<T> {
        &self.members[self.best_index]
    }

    pub fn worst(&self) -> &Individual<T> {
        &self.members[self.worst_index]
    }

    pub fn scan(&self, which: Extreme) -> ScanOutcome {
        find_extreme(&self.members, which)
    }
}

/// Draws `n` members uniformly inside the problem box, evaluates them, and
/// seeds the tracked extreme slots with one full scan each.
pub fn init_population<T: Real>(
    spec: &ProblemSpec<T>,
    n: usize,
    rng: &mut RngStream,
) -> Result<Population<T>> {
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }
    let members: Vec<Individual<T>> = (0..n)
        .map(|_| {
            let genes: Vec<T> = spec.bounds.iter().map(|&(lo, hi)| rng.range(lo, hi)).collect();
            Individual::evaluated(genes, spec)
        })
        .collect();
    let best_index = find_extreme(&members, Extreme::Best).index;
    let worst_index = find_extreme(&members, Extreme::Worst).index;
    Ok(Population {
        members,
        best_index,
        worst_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;
    use crate::problem::OptimumLocation;
    use crate::stochastic::harmonic;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use std::sync::Arc;

    fn from_fitness(fs: &[f64]) -> Vec<Individual<f64>> {
        fs.iter()
            .map(|&f| Individual {
                genes: vec![f],
                fitness: f,
            })
            .collect()
    }

    #[test]
    fn scan_finds_documented_extremes() {
        let members = from_fitness(&[5.0, 3.0, 9.0, 1.0]);
        let worst = find_extreme(&members, Extreme::Worst);
        assert_eq!(worst.index, 2);
        assert_eq!(worst.comparisons, 4);
        assert_eq!(worst.assignments, 2); // seeded at 5, reassigned at 9
        let best = find_extreme(&members, Extreme::Best);
        assert_eq!(best.index, 3);
        assert_eq!(best.assignments, 3); // 5, then 3, then 1
    }

    #[test]
    fn scan_ties_go_to_first_slot() {
        let members = from_fitness(&[2.0, 2.0, 2.0]);
        assert_eq!(find_extreme(&members, Extreme::Best).index, 0);
        assert_eq!(find_extreme(&members, Extreme::Worst).index, 0);
        assert_eq!(find_extreme(&members, Extreme::Worst).assignments, 1);
    }

    #[test]
    fn scan_single_member() {
        let members = from_fitness(&[4.0]);
        let out = find_extreme(&members, Extreme::Best);
        assert_eq!(
            out,
            ScanOutcome {
                index: 0,
                comparisons: 1,
                assignments: 1
            }
        );
    }

    // Over uniformly random permutations of distinct fitnesses the expected
    // number of running-extreme reassignments is the harmonic number H_n.
    #[test]
    fn scan_assignment_mean_matches_harmonic_number() {
        let mut rng = crate::rng::RngStream::new(90, 0);
        for &n in &[10usize, 100] {
            let trials = 100_000;
            let mut total: u64 = 0;
            let mut fitness: Vec<f64> = (0..n).map(|i| i as f64).collect();
            for _ in 0..trials {
                fitness.shuffle(&mut rng);
                let members = from_fitness(&fitness);
                total += find_extreme(&members, Extreme::Worst).assignments as u64;
            }
            let mean = total as f64 / trials as f64;
            let want: f64 = harmonic(n as u64);
            assert!(
                (mean - want).abs() < 0.01 * want,
                "n={n}: mean {mean} vs H_n {want}"
            );
        }
    }

    #[test]
    fn init_rejects_empty() {
        let spec = benchmarks::benchmark::<f64>("ackley").unwrap();
        let mut rng = crate::rng::RngStream::new(1, 0);
        assert_eq!(
            init_population(&spec, 0, &mut rng).unwrap_err(),
            Error::EmptyPopulation
        );
    }

    #[test]
    fn init_is_deterministic_and_in_bounds() {
        let spec = benchmarks::benchmark::<f64>("step").unwrap();
        let a = init_population(&spec, 40, &mut crate::rng::RngStream::new(5, 1)).unwrap();
        let b = init_population(&spec, 40, &mut crate::rng::RngStream::new(5, 1)).unwrap();
        assert_eq!(a, b);
        for m in &a.members {
            for (j, &g) in m.genes.iter().enumerate() {
                let (lo, hi) = spec.bounds[j];
                assert!(g >= lo && g <= hi);
            }
            assert_eq!(m.fitness, spec.evaluate(&m.genes));
        }
    }

    #[test]
    fn init_with_degenerate_bounds_pins_everything() {
        let spec = crate::problem::ProblemSpec::new(
            "pinned",
            vec![(0.0, 0.0), (0.0, 0.0)],
            Arc::new(|x: &[f64]| x.iter().map(|v| v * v).sum()),
            0.0,
            OptimumLocation::Point(vec![0.0, 0.0]),
        )
        .unwrap();
        let pop = init_population(&spec, 3, &mut crate::rng::RngStream::new(9, 0)).unwrap();
        for m in &pop.members {
            assert_eq!(m.genes, vec![0.0, 0.0]);
            assert_eq!(m.fitness, 0.0);
        }
        // All fitnesses tie, so first-wins puts both extremes at slot 0.
        assert_eq!(pop.best_index, 0);
        assert_eq!(pop.worst_index, 0);
    }

    #[test]
    fn tracked_slots_agree_with_scan_after_init() {
        let spec = benchmarks::benchmark::<f64>("rosenbrock").unwrap();
        let pop = init_population(&spec, 25, &mut crate::rng::RngStream::new(17, 4)).unwrap();
        assert_eq!(pop.best_index, pop.scan(Extreme::Best).index);
        assert_eq!(pop.worst_index, pop.scan(Extreme::Worst).index);
    }

    proptest! {
        #[test]
        fn scan_picks_a_true_extreme(fs in proptest::collection::vec(-1e6f64..1e6, 1..100)) {
            let members = from_fitness(&fs);
            let best = find_extreme(&members, Extreme::Best);
            let worst = find_extreme(&members, Extreme::Worst);
            let min = fs.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = fs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            prop_assert_eq!(members[best.index].fitness, min);
            prop_assert_eq!(members[worst.index].fitness, max);
            prop_assert_eq!(best.comparisons, fs.len());
            prop_assert!(best.assignments >= 1);
        }

        #[test]
        fn cached_fitness_stays_coherent(seed in 0u64..1000, n in 1usize..30) {
            let spec = benchmarks::benchmark_with_dimension::<f64>("chung_reynolds", 5).unwrap();
            let pop = init_population(&spec, n, &mut crate::rng::RngStream::new(seed, 0)).unwrap();
            for m in &pop.members {
                prop_assert_eq!(m.fitness, spec.evaluate(&m.genes));
            }
        }
    }
}
