//! Numeric traits shared by the polynomial and power-sum code.
//!
//! Polynomials are generic over any [`Scalar`]: the exact rationals
//! `Ratio<I>` for every [`ExactInteger`] `I`, plus `f32`/`f64` for
//! approximate work outside the engine. The power-sum engine itself only
//! runs over exact rationals.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A coefficient type for [`Polynomial`](crate::poly::Polynomial).
pub trait Scalar: Clone + Debug + Display + PartialEq + Num + Signed + Send + Sync {
    /// Embeds a non-negative index (an exponent, a multiplicity) into the scalar type.
    fn from_index(i: usize) -> Self;
}

/// Integer types usable as the numerator/denominator of an exact coefficient.
///
/// `BigInt` is the production choice. Fixed-width types satisfy the bound too,
/// but overflow once coefficients grow, so they only suit small powers.
pub trait ExactInteger:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync
{
}

impl<I> ExactInteger for I where
    I: Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync
{
}

impl<I: ExactInteger> Scalar for Ratio<I> {
    fn from_index(i: usize) -> Self {
        let n = I::from_usize(i).expect("index does not fit the integer type");
        Ratio::from_integer(n)
    }
}

impl Scalar for f64 {
    fn from_index(i: usize) -> Self {
        i as f64
    }
}

impl Scalar for f32 {
    fn from_index(i: usize) -> Self {
        i as f32
    }
}
