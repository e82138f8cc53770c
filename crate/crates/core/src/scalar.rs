//! Scalar abstraction shared by every numerical module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real floating-point scalar the library is generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).unwrap_or_else(Self::nan)
    }

    /// Lossy conversion used for diagnostics and error payloads.
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Smallest denominator magnitude treated as non-zero by the reciprocal
    /// q-functions.
    #[inline]
    fn pole_threshold() -> Self {
        Self::c(1e-300).max(Self::min_positive_value())
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `ln(cosh u)` without overflow for large `|u|`.
pub(crate) fn ln_cosh<T: Real>(u: T) -> T {
    let a = u.abs();
    a + (-(a + a)).exp().ln_1p() - T::LN_2()
}
