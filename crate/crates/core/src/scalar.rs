//! The scalar field every group law is evaluated over.
//!
//! All formulas in this crate are denominator-free except for the Taylor
//! oracle's exponential, so any exact field works. The crate root fixes
//! [`crate::Rational`] (arbitrary precision) as the default; fixed-width
//! rationals are available for quick experiments but panic on overflow.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

/// An exact field element usable as a coefficient.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    /// Embeds an arbitrary-precision integer.
    fn from_bigint(n: &BigInt) -> Self;

    /// Parses `"p/q"` or `"p"`.
    fn parse(s: &str) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }

    /// `p/q`; panics when `q == 0`.
    fn ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p) / Self::from_i64(q)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.clone())
    }

    fn parse(s: &str) -> Option<Self> {
        parse_ratio(s, |t| t.parse::<BigInt>().ok())
    }
}

macro_rules! fixed_width_scalar {
    ($int:ty, $conv:ident) => {
        impl Scalar for Ratio<$int> {
            fn from_bigint(n: &BigInt) -> Self {
                Ratio::from_integer(n.$conv().expect("integer overflows fixed-width rational"))
            }

            fn parse(s: &str) -> Option<Self> {
                parse_ratio(s, |t| t.parse::<$int>().ok())
            }
        }
    };
}

fixed_width_scalar!(i64, to_i64);
fixed_width_scalar!(i128, to_i128);

fn parse_ratio<I>(s: &str, int: impl Fn(&str) -> Option<I>) -> Option<Ratio<I>>
where
    I: Clone + num_integer::Integer,
{
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (int(p.trim())?, int(q.trim())?);
            if q.is_zero() {
                return None;
            }
            Some(Ratio::new(p, q))
        }
        None => Some(Ratio::from_integer(int(s)?)),
    }
}
