//! Integer scalar abstraction for the exact integer layer.
//!
//! Integer Laurent polynomials, integer matrices and the fraction-free
//! determinant are written once against [`IntScalar`] and instantiated with
//! `i64` (inputs, small Seifert matrices) or `BigInt` (minors, GCDs,
//! resultants), see the aliases at the crate root.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer type usable as a polynomial / matrix coefficient.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossless widening into a big integer.
    fn to_bigint(&self) -> BigInt;

    /// Narrowing from a big integer; `None` when the value does not fit.
    fn from_bigint(v: &BigInt) -> Option<Self>;

    /// Residue in `0..p`.
    fn rem_u64(&self, p: u64) -> u64 {
        let b = self.to_bigint().mod_floor(&BigInt::from(p));
        b.to_u64().expect("residue fits in u64")
    }
}

impl IntScalar for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn rem_u64(&self, p: u64) -> u64 {
        self.rem_euclid(p as i64) as u64
    }
}

impl IntScalar for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn rem_u64(&self, p: u64) -> u64 {
        self.rem_euclid(p as i128) as u64
    }
}

impl IntScalar for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Convert between two integer scalar types, `None` on overflow.
pub fn convert<S: IntScalar, T: IntScalar>(x: &S) -> Option<T> {
    T::from_bigint(&x.to_bigint())
}
