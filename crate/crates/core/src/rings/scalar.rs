use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Commutative ring with identity, usable as a polynomial coefficient or a
/// matrix entry. The `_ref` hooks let big-integer backends skip clones.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs + other.clone();
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs - other.clone();
    }

    fn from_i64(v: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if v < 0 { -Self::one() } else { Self::one() };
        for _ in 0..v.unsigned_abs() {
            acc.add_assign_ref(&unit);
        }
        acc
    }
}

impl Scalar for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

/// Coefficient rings where exact division by a unit-or-integer is meaningful.
/// Used by polynomial long division.
pub trait ExactDiv: Scalar {
    /// `Some(self / other)` when the quotient exists in the ring.
    fn try_div(&self, other: &Self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (quot, rem) = num_integer::Integer::div_rem(self, other);
        rem.is_zero().then_some(quot)
    }
}

impl ExactDiv for i64 {
    fn try_div(&self, other: &Self) -> Option<Self> {
        if *other == 0 || self % other != 0 {
            None
        } else {
            Some(self / other)
        }
    }
}
