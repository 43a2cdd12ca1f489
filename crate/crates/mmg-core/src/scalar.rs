//! Scalar abstraction so the model can run at `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, NumCast};

/// Floating-point scalar usable throughout the model.
///
/// Implemented by `f32` and `f64`. All literal constants in the model are
/// written as `f64` and converted through [`Real::of`], so an `f32` build
/// rounds each constant once instead of accumulating decimal-parse error.
pub trait Real:
    Float + FloatConst + NumCast + Debug + Display + Copy + Send + Sync + 'static
{
    /// Convert an `f64` constant into this scalar type.
    #[inline]
    fn of(v: f64) -> Self {
        // NumCast from f64 only fails for exotic scalar types; f32/f64 always succeed.
        <Self as NumCast>::from(v).expect("f64 constant must convert to scalar type")
    }

    /// Lossy view of this scalar as `f64` (exact for `f32` and `f64`).
    #[inline]
    fn to_f64(self) -> f64 {
        <f64 as NumCast>::from(self).expect("scalar must convert to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
