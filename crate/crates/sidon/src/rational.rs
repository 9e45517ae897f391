//! Exact rational numbers.
//!
//! Every value is kept in lowest terms with a positive denominator, so
//! equality, ordering, and hashing are all exact. The text form is `"p/q"`
//! (or just `"p"` for integers) with an optional leading minus sign; this is
//! the only form that ever crosses a serialization boundary — rationals are
//! never converted to floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number: reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`, normalizing sign and reducing.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::ParseRational {
                token: format!("{numerator}/{denominator}"),
                reason: "denominator is zero".into(),
            });
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"`, accepting both ASCII `-` and U+2212 for the
    /// leading minus. Non-reduced input is normalized.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |reason: &str| Error::ParseRational {
            token: s.to_owned(),
            reason: reason.to_owned(),
        };
        let cleaned = s.trim().replace('\u{2212}', "-");
        if cleaned.is_empty() {
            return Err(err("empty token"));
        }
        let (num_text, den_text) = match cleaned.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (cleaned.as_str(), None),
        };
        let numerator: BigInt = num_text
            .parse()
            .map_err(|_| err("numerator is not an integer"))?;
        let denominator: BigInt = match den_text {
            Some(d) => d.parse().map_err(|_| err("denominator is not an integer"))?,
            None => BigInt::one(),
        };
        if denominator.is_zero() {
            return Err(err("denominator is zero"));
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {
        $(impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        })*
    };
}

from_int!(i32, i64, u32, u64);

macro_rules! binop {
    ($Op:ident, $method:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
