//! Integer scalars used by the lattice code.
//!
//! Everything in [`crate::lattice`] is generic over [`Scalar`]. The crate root
//! fixes the scalar to [`num_bigint::BigInt`]; machine integers are handy in
//! tests where entries are known to stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};

/// An exact integer type (a Euclidean domain with a sign).
pub trait Scalar:
    Integer
    + Signed
    + NumAssign
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer scalar must hold every i64")
    }

    /// Whether the value is a unit of the integers, i.e. `±1`.
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + NumAssign
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Floor division with a nonnegative remainder, for positive `d`.
pub(crate) fn div_floor<T: Scalar>(a: &T, d: &T) -> T {
    debug_assert!(d.is_positive());
    a.div_floor(d)
}
