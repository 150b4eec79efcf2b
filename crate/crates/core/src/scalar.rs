//! Coefficient fields.
//!
//! Everything in this crate is generic over an exact field. The default
//! instantiation is [`crate::Rational`] (arbitrary precision); fixed-width
//! rationals such as `Ratio<i128>` work for small inputs and are handy in
//! tests, but overflow is not detected.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An exact field usable as polynomial coefficients.
pub trait Coefficient:
    Num + Clone + Debug + Display + Eq + Hash + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_integer(v: i64) -> Self;

    /// Parses a base-10 integer literal; `None` if it does not fit.
    fn from_integer_literal(digits: &str) -> Option<Self>;

    /// `true` for strictly positive values.
    fn is_positive_value(&self) -> bool;

    /// Numerator and denominator in lowest terms (denominator positive),
    /// rendered in base 10.
    fn to_fraction_strings(&self) -> (String, String);
}

macro_rules! impl_ratio_coefficient {
    ($($int:ty),*) => {$(
        impl Coefficient for Ratio<$int> {
            fn from_integer(v: i64) -> Self {
                Ratio::from_integer(<$int>::from(v))
            }

            fn from_integer_literal(digits: &str) -> Option<Self> {
                <$int as Num>::from_str_radix(digits, 10).ok().map(Ratio::from_integer)
            }

            fn is_positive_value(&self) -> bool {
                self.is_positive()
            }

            fn to_fraction_strings(&self) -> (String, String) {
                (self.numer().to_string(), self.denom().to_string())
            }
        }
    )*};
}

impl_ratio_coefficient!(i64, i128, BigInt);
