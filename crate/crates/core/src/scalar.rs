//! The integer scalar abstraction shared by every algorithm in the crate.
//!
//! All routines are written against [`Scalar`], which is any signed Euclidean
//! integer type. [`num_bigint::BigInt`] is the production choice; `i64` and
//! `i128` satisfy the bound too and are handy for quick experiments on small
//! inputs, but fixed-width arithmetic will panic on overflow in debug builds
//! and wrap silently in release builds.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + From<i64> + ToPrimitive + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self {
        Self::from(v)
    }

    /// Number of bits needed for `|self|`.
    fn bit_length(&self) -> u64 {
        let mut v = self.abs();
        let two = Self::from(2);
        let mut bits = 0;
        while !v.is_zero() {
            v = v / two.clone();
            bits += 1;
        }
        bits
    }

    /// Exact quotient; `None` when `divisor` does not divide `self`.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return if self.is_zero() {
                Some(Self::zero())
            } else {
                None
            };
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Whether `self` is zero modulo `modulus`, where modulus zero means
    /// equality with zero.
    fn is_zero_mod(&self, modulus: &Self) -> bool {
        if modulus.is_zero() {
            self.is_zero()
        } else {
            self.mod_floor(modulus).is_zero()
        }
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + From<i64>
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// gcd of a sequence; zero for an empty or all-zero sequence.
pub fn gcd_all<'a, T: Scalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn bit_length_matches_primitive() {
        for v in [-9i64, -1, 0, 1, 2, 5, 6, 1 << 40] {
            let expected = 64 - v.unsigned_abs().leading_zeros() as u64;
            assert_eq!(v.bit_length(), expected);
            assert_eq!(BigInt::from(v).bit_length(), expected);
        }
    }

    #[test]
    fn exact_div_and_mod() {
        assert_eq!(12i64.exact_div(&-4), Some(-3));
        assert_eq!(12i64.exact_div(&5), None);
        assert_eq!(0i64.exact_div(&0), Some(0));
        assert_eq!(3i64.exact_div(&0), None);
        assert!((-6i64).is_zero_mod(&3));
        assert!(!5i64.is_zero_mod(&0));
        assert_eq!(gcd_all(&[4i64, -6, 0]), 2);
        assert_eq!(gcd_all::<i64>(&[]), 0);
    }
}
