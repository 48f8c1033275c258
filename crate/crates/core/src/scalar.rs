//! Integer scalars for the scaled irregularity vectors.
//!
//! Every quantity the solvers compare is a rational with denominator `d + 1`.
//! Multiplying through by `d + 1` keeps the arithmetic exact, so the vector
//! types are generic over a signed primitive integer rather than a float.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{NumCast, PrimInt, Signed};

/// Signed integer usable as the entry type of scaled vectors.
pub trait Scalar: PrimInt + Signed + Integer + Debug + Display + Hash + Send + Sync + 'static {
    /// Lossless conversion from a count, `None` on overflow.
    fn from_count(x: usize) -> Option<Self> {
        <Self as NumCast>::from(x)
    }

    /// Converts back to `i64`, `None` on overflow.
    fn to_i64_checked(self) -> Option<i64> {
        <i64 as NumCast>::from(self)
    }

    /// The unscaled rational value `self / scale`.
    fn unscale(self, scale: Self) -> Ratio<Self> {
        Ratio::new(self, scale)
    }
}

impl<T> Scalar for T where T: PrimInt + Signed + Integer + Debug + Display + Hash + Send + Sync + 'static {}
