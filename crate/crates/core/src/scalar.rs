//! Exact integer scalars.
//!
//! Everything in this crate is exact. Coefficient containers, the
//! symmetric-function engine and the rank kernel are generic over any
//! signed integer type implementing [`Scalar`]; rationals are built on top
//! as [`num_rational::Ratio<S>`]. Machine integers (`i64`, `i128`) are
//! fast but may overflow on large inputs, [`num_bigint::BigInt`] never does.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the scalar type")
    }

    fn from_count(v: u128) -> Self {
        Self::from_u128(v).expect("count fits the scalar type")
    }
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
        + Send
        + Sync
        + 'static
{
}

pub type Rational<S> = Ratio<S>;

/// Returns the numerator when `q` is an integer.
pub fn to_integer<S: Scalar>(q: &Ratio<S>) -> Option<S> {
    if q.is_integer() {
        Some(q.numer().clone())
    } else {
        None
    }
}
