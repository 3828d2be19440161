//! The integer scalar abstraction.
//!
//! Every computation in this crate is exact. The core types are generic over
//! the integer scalar so that the same code runs on machine integers (`i64`,
//! `i128`) for small inputs and on arbitrary-precision integers for inputs of
//! any size. The crate root exports concrete aliases built on
//! [`num_bigint::BigInt`], which is the default choice.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer scalar.
///
/// Implemented by `i64`, `i128` and `num_bigint::BigInt` out of the box.
/// Bounded instantiations are the caller's responsibility: the algorithms
/// never guard against overflow, so use `BigInt` unless the inputs are known
/// to be small.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Shorthand for building a scalar from an `i64` literal.
pub fn int<I: Scalar>(value: i64) -> I {
    I::from_i64(value).expect("i64 converts into every scalar")
}

/// Shorthand for building an exact rational from `i64` literals.
///
/// Panics if `den` is zero.
pub fn rat<I: Scalar>(num: i64, den: i64) -> Ratio<I> {
    Ratio::new(int(num), int(den))
}

/// The rational constant zero.
pub fn rat_zero<I: Scalar>() -> Ratio<I> {
    Ratio::from_integer(I::zero())
}

/// The rational constant one.
pub fn rat_one<I: Scalar>() -> Ratio<I> {
    Ratio::from_integer(I::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn literals_convert() {
        assert_eq!(int::<BigInt>(-7), BigInt::from(-7));
        assert_eq!(int::<i64>(42), 42i64);
        assert_eq!(rat::<i64>(6, 4), Ratio::new(3, 2));
    }
}
