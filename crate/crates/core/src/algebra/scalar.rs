use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Raised by the machine-word fast path when an intermediate value no longer
/// fits; the caller reruns the computation with big integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

/// Ring operations used by elimination. Every operation that can overflow
/// reports it instead of wrapping.
pub(crate) trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn nil() -> Self;
    fn unity() -> Self;
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    /// `|self| == 1`
    fn is_unit(&self) -> bool;
    /// `|self| < |other|`
    fn abs_lt(&self, other: &Self) -> bool;
    fn checked_neg(&self) -> Result<Self, Overflow>;
    /// `self + q * b`
    fn add_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow>;
    /// Quotient `q` of division by `d` with `|self - q d| ≤ |d| / 2`.
    fn div_nearest(&self, d: &Self) -> Self;
    fn divides(&self, other: &Self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for i64 {
    fn nil() -> Self {
        0
    }
    fn unity() -> Self {
        1
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn checked_neg(&self) -> Result<Self, Overflow> {
        i64::checked_neg(*self).ok_or(Overflow)
    }
    fn add_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        q.checked_mul(*b)
            .and_then(|p| self.checked_add(p))
            .ok_or(Overflow)
    }
    fn div_nearest(&self, d: &Self) -> Self {
        let (q, r) = self.div_mod_floor(d);
        // floor division leaves r with the sign of d; pull it into (-|d|/2, |d|/2]
        let twice = (r as i128) * 2;
        let half_up = if *d > 0 {
            twice > d.unsigned_abs() as i128
        } else {
            twice < -(d.unsigned_abs() as i128)
        };
        if half_up {
            q + 1
        } else {
            q
        }
    }
    fn divides(&self, other: &Self) -> bool {
        *self != 0 && other % self == 0
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unity() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn checked_neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn add_mul(&self, q: &Self, b: &Self) -> Result<Self, Overflow> {
        Ok(self + q * b)
    }
    fn div_nearest(&self, d: &Self) -> Self {
        let (q, r) = self.div_mod_floor(d);
        let twice: BigInt = &r * 2;
        let mag = BigInt::from(d.magnitude().clone());
        if (d.is_positive() && twice > mag) || (d.is_negative() && twice < -mag) {
            q + 1
        } else {
            q
        }
    }
    fn divides(&self, other: &Self) -> bool {
        !Zero::is_zero(self) && Zero::is_zero(&(other % self))
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
