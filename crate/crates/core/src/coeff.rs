//! Scalar requirements for the exact kernels.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// Minimum requirements on the scalars the exact kernels operate on.
///
/// Everything in [`crate::exact`] and the determinant kernel is generic over
/// this trait. The crate instantiates it with arbitrary-precision rationals
/// (and big integers on the determinant fast path); any field-like numeric
/// type with the listed ops satisfies the bound.
pub trait Coeff:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
    /// Embed a small machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer not representable in scalar type")
    }
}

impl<T> Coeff for T where
    T: Clone
        + Debug
        + Display
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + FromPrimitive
{
}
