//! Exact rational numbers.
//!
//! Every numerical quantity in this crate is exact. [`Rational`] is a thin
//! newtype over [`num_rational::Rational64`] that fixes the textual form
//! (`p/q` in lowest terms, or `p` when the denominator is one) and the JSON
//! form (`{"num": p, "den": q}`).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

/// An exact rational number with positive denominator, always in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Rational64);

impl Rational {
    pub const ZERO: Rational = Rational(Rational64::new_raw(0, 1));
    pub const ONE: Rational = Rational(Rational64::new_raw(1, 1));

    /// Builds `numer/denom` reduced to lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Rational64::new(numer, denom))
    }

    /// Fallible constructor used by the decoders; rejects a zero denominator
    /// and values that cannot be normalized without overflow.
    pub fn try_new(numer: i64, denom: i64) -> Result<Self, ParseError> {
        if denom == 0 {
            return Err(ParseError::ZeroDenominator);
        }
        if denom == i64::MIN || (denom < 0 && numer == i64::MIN) {
            return Err(ParseError::Overflow);
        }
        Ok(Rational::new(numer, denom))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Rational64::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an integer, if the denominator is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Accepts `p` or `p/q` with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<i64, ParseError> {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| ParseError::InvalidInteger(t.to_string()))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((p, q)) => Rational::try_new(parse_int(p)?, parse_int(q)?),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational($trait::$method(self.0, Rational64::from_integer(rhs)))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i64,
    den: i64,
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer(),
            den: self.denom(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RationalRepr::deserialize(deserializer)?;
        if repr.den <= 0 {
            return Err(serde::de::Error::custom("denominator must be positive"));
        }
        Rational::try_new(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}
