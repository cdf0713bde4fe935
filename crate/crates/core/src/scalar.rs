//! Coefficient types.
//!
//! Every container in this crate is generic over a [`Scalar`]. Only exact
//! types implement it: big integers, big rationals and fixed-width rationals.
//! Operations that divide (basis conversion) additionally require [`Field`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, ToPrimitive};

/// An exact coefficient ring.
pub trait Scalar: Signed + Clone + Debug + Display + Send + Sync + 'static {
    /// Embeds an integer. Fixed-width implementations panic on overflow.
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    fn from_usize(n: usize) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

/// A [`Scalar`] whose division is exact.
pub trait Field: Scalar {}

impl Scalar for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Field for BigRational {}

impl Scalar for Ratio<i128> {
    fn from_bigint(n: &BigInt) -> Self {
        let n = n.to_i128().expect("integer does not fit in i128");
        Ratio::from_integer(n)
    }
}

impl Field for Ratio<i128> {}

impl Scalar for Ratio<i64> {
    fn from_bigint(n: &BigInt) -> Self {
        let n = n.to_i64().expect("integer does not fit in i64");
        Ratio::from_integer(n)
    }
}

impl Field for Ratio<i64> {}
