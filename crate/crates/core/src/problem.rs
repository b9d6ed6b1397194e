//! Box-constrained minimization problems.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::real::Real;

/// Objective callback; must return finite values everywhere inside the box.
pub type Objective<T> = Arc<dyn Fn(&[T]) -> T + Send + Sync>;

/// Where a problem attains its known optimum.
#[derive(Clone, Debug, PartialEq)]
pub enum OptimumLocation<T> {
    /// A single known optimizer.
    Point(Vec<T>),
    /// A region described in words, e.g. a plateau around the origin.
    Region(&'static str),
}

/// A named minimization problem over an axis-aligned box.
#[derive(Clone)]
pub struct ProblemSpec<T: Real = f64> {
    pub name: String,
    pub dimension: usize,
    /// Inclusive per-variable bounds. Zero-width intervals are allowed and pin
    /// the variable, which degenerate test setups rely on.
    pub bounds: Vec<(T, T)>,
    pub objective: Objective<T>,
    pub known_optimum: T,
    pub optimum_location: OptimumLocation<T>,
}

impl<T: Real> ProblemSpec<T> {
    pub fn new(
        name: impl Into<String>,
        bounds: Vec<(T, T)>,
        objective: Objective<T>,
        known_optimum: T,
        optimum_location: OptimumLocation<T>,
    ) -> Result<Self> {
        let spec = Self {
            name: name.into(),
            dimension: bounds.len(),
            bounds,
            objective,
            known_optimum,
            optimum_location,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.bounds.len() != self.dimension {
            return Err(Error::BoundsDimensionMismatch {
                bounds: self.bounds.len(),
                dimension: self.dimension,
            });
        }
        for (index, &(lo, hi)) in self.bounds.iter().enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::NonFiniteBounds { index });
            }
            if lo > hi {
                return Err(Error::InvertedBounds {
                    index,
                    lower: lo.to_f64().unwrap_or(f64::NAN),
                    upper: hi.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(())
    }

    pub fn evaluate(&self, genes: &[T]) -> T {
        debug_assert_eq!(genes.len(), self.dimension);
        (self.objective)(genes)
    }

    /// Clamps one variable into its bounds.
    pub fn clamp(&self, index: usize, value: T) -> T {
        let (lo, hi) = self.bounds[index];
        value.max(lo).min(hi)
    }
}

impl<T: Real> fmt::Debug for ProblemSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("bounds", &self.bounds)
            .field("known_optimum", &self.known_optimum)
            .field("optimum_location", &self.optimum_location)
            .finish_non_exhaustive()
    }
}
