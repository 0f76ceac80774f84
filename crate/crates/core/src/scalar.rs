//! Scalar abstraction for scores and statistics.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used for similarity scores, graph statistics and
/// evaluation results.
///
/// Blanket-implemented for `f32` and `f64`. Counting is always done in
/// integers; this trait only carries the final divisions, logs and square
/// roots, so narrowing to `f32` loses output precision but never changes
/// which quantities are computed.
pub trait Real:
    Float + FromPrimitive + AddAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an integer count. Lossy above the mantissa width (an `f32`
    /// cannot hold every `u64` exactly), which is fine for the averaged
    /// quantities computed here.
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("integer counts convert to any float width")
    }

    /// `num / den` as a scalar; `den` must be nonzero.
    fn ratio(num: u64, den: u64) -> Self {
        debug_assert!(den != 0, "ratio denominator must be nonzero");
        Self::from_count(num) / Self::from_count(den)
    }
}

impl<T> Real for T where
    T: Float + FromPrimitive + AddAssign + Sum + Debug + Display + Send + Sync + 'static
{
}
