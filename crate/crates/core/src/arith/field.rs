use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exact field arithmetic used by the generic polynomial and matrix code.
///
/// The methods take their operands by reference so that big-number
/// scalars are not cloned on every operation.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// `self / rhs`; panics on a zero divisor.
    fn divided_by(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse().expect("division by zero"))
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = self.plus(&a.times(b));
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }
}

/// Shorthand for building a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `true` when `q` is a non-negative integer.
pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}
