//! Scalar abstraction for the dense linear algebra layer.
//!
//! Everything downstream (matrices, derivation systems, closed-form bases)
//! is written against [`Scalar`], a field-like bound assembled from
//! `num-traits`. The concrete instantiation used throughout the crate is
//! `BigRational` (see the aliases at the crate root); `f64` also satisfies
//! the bound but no shipped pipeline uses it.

use std::fmt::Debug;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// Field-like scalar: exact equality, ring ops and division.
///
/// Division is only ever invoked with a nonzero divisor (pivot
/// normalization), so types without true inverses need not apply.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// `-1`, handy when writing skew patterns.
    fn minus_one() -> Self {
        -Self::one()
    }

    /// Embeds a small signed integer.
    fn from_int(v: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if v < 0 { Self::minus_one() } else { Self::one() };
        for _ in 0..v.unsigned_abs() {
            acc = acc + unit.clone();
        }
        acc
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
{
}
