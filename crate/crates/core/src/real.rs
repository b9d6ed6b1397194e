//! Scalar abstraction the numeric core is generic over.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::distributions::uniform::SampleUniform;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Floating-point scalar usable for genes, fitness values, and the closed-form
/// models. `f64` is the default everywhere and the only width the published
/// reference values are checked at; `f32` satisfies the same contracts at
/// correspondingly looser tolerances.
pub trait Real:
    Float
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + Sum
    + SampleUniform
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Error function.
    fn erf(self) -> Self;

    /// Complementary error function; keeps upper tails free of cancellation.
    fn erfc(self) -> Self;
}

impl Real for f64 {
    fn erf(self) -> Self {
        libm::erf(self)
    }

    fn erfc(self) -> Self {
        libm::erfc(self)
    }
}

impl Real for f32 {
    fn erf(self) -> Self {
        libm::erff(self)
    }

    fn erfc(self) -> Self {
        libm::erfcf(self)
    }
}

/// Converts an `f64` constant into `T`. Every finite `f64` converts, so this
/// never fails for the literals it is used with.
pub(crate) fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite constant converts into any Real")
}

#[cfg(test)]
mod tests {
    use super::*;

    // UFCS below keeps the calls unambiguous if the standard library ever
    // grows inherent float erf/erfc.
    #[test]
    fn erf_basics() {
        assert_eq!(Real::erf(0.0f64), 0.0);
        assert!((Real::erf(1.0f64) - 0.842_700_792_949_714_9).abs() < 1e-15);
        assert!((Real::erf(-1.5f64) + Real::erf(1.5f64)).abs() < 1e-15);
        assert!((Real::erf(6.0f64) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn erfc_complements_erf() {
        for &x in &[-3.0, -0.7, 0.0, 0.4, 2.9f64] {
            assert!((Real::erf(x) + Real::erfc(x) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn f32_impl_is_usable() {
        assert!((Real::erf(1.0f32) - 0.842_700_8).abs() < 1e-6);
        assert_eq!(real::<f32>(0.5), 0.5f32);
    }
}
