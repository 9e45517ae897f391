//! Absolute values on the rationals and exact magnitudes.
//!
//! Two families are supported: the usual archimedean absolute value and the
//! p-adic absolute values `|x|_p = p^(-v_p(x))`. Both are nontrivial, which
//! is what the perturbation construction needs: nonzero elements of
//! arbitrarily small magnitude exist. The trivial absolute value is not
//! constructible here.
//!
//! Magnitudes are exact nonnegative rationals, so every threshold comparison
//! in the crate is an exact integer comparison.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An absolute value on the rationals: archimedean, or p-adic for a prime p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum AbsoluteValue {
    #[serde(rename = "archimedean")]
    Archimedean,
    #[serde(rename = "p-adic")]
    PAdic { p: u64 },
}

impl AbsoluteValue {
    pub fn archimedean() -> Self {
        AbsoluteValue::Archimedean
    }

    /// The p-adic absolute value; `p` must be prime.
    pub fn p_adic(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(AbsoluteValue::PAdic { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// `|x|` under this absolute value, exactly.
    ///
    /// Archimedean: `|num|/den`. p-adic: `p^(-v_p(x))`, and `|0| = 0` in
    /// both cases.
    pub fn abs(&self, x: &Rational) -> Magnitude {
        if x.is_zero() {
            return Magnitude::zero();
        }
        match self {
            AbsoluteValue::Archimedean => Magnitude(x.abs()),
            AbsoluteValue::PAdic { p } => {
                let v_num = valuation(x.numerator(), *p);
                let v_den = valuation(x.denominator(), *p);
                Magnitude(prime_power(*p, v_den as i64 - v_num as i64))
            }
        }
    }
}

impl fmt::Display for AbsoluteValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbsoluteValue::Archimedean => write!(f, "archimedean"),
            AbsoluteValue::PAdic { p } => write!(f, "p-adic (p = {p})"),
        }
    }
}

// Deserialization goes through an unchecked mirror so the prime test runs on
// every decoded value.
#[derive(Deserialize)]
#[serde(tag = "kind")]
enum AbsoluteValueRepr {
    #[serde(rename = "archimedean")]
    Archimedean,
    #[serde(rename = "p-adic")]
    PAdic { p: u64 },
}

impl<'de> Deserialize<'de> for AbsoluteValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match AbsoluteValueRepr::deserialize(deserializer)? {
            AbsoluteValueRepr::Archimedean => Ok(AbsoluteValue::Archimedean),
            AbsoluteValueRepr::PAdic { p } => {
                AbsoluteValue::p_adic(p).map_err(serde::de::Error::custom)
            }
        }
    }
}

/// An exact nonnegative magnitude `|x|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Magnitude(Rational);

impl Magnitude {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeMagnitude(value.to_string()));
        }
        Ok(Magnitude(value))
    }

    pub fn zero() -> Self {
        Magnitude(Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Mul for Magnitude {
    type Output = Magnitude;
    fn mul(self, rhs: Magnitude) -> Magnitude {
        Magnitude(self.0 * rhs.0)
    }
}

impl<'de> Deserialize<'de> for Magnitude {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = Rational::deserialize(deserializer)?;
        Magnitude::new(value).map_err(serde::de::Error::custom)
    }
}

/// A deterministic element x with `0 < |x| < bound`.
///
/// Archimedean: `bound / 2`. p-adic: `p^e` for the minimal integer `e` with
/// `p^(-e) < bound` (so the chosen magnitude is the largest admissible power
/// of `p`). Fixing the choice makes every downstream construction
/// reproducible.
pub fn small_nonzero_element(bound: &Magnitude, av: &AbsoluteValue) -> Result<Rational> {
    if bound.is_zero() {
        return Err(Error::InvalidBound(bound.to_string()));
    }
    match av {
        AbsoluteValue::Archimedean => Ok(bound.value() / &Rational::from(2i64)),
        AbsoluteValue::PAdic { p } => {
            // Minimal e with p^e > 1/bound, by exact comparison.
            let target = bound.value().recip();
            let p_rat = Rational::from_integer(*p);
            let mut e: i64 = 0;
            let mut power = Rational::one();
            if power > target {
                loop {
                    let next = &power / &p_rat;
                    if next > target {
                        power = next;
                        e -= 1;
                    } else {
                        break;
                    }
                }
            } else {
                while power <= target {
                    power = power * &p_rat;
                    e += 1;
                }
            }
            Ok(prime_power(*p, e))
        }
    }
}

/// `min { |c| : c in S, c != 0 }`, or `None` when S has no nonzero element.
pub fn min_nonzero_abs<'a, I>(elements: I, av: &AbsoluteValue) -> Option<Magnitude>
where
    I: IntoIterator<Item = &'a Rational>,
{
    elements
        .into_iter()
        .filter(|c| !c.is_zero())
        .map(|c| av.abs(c))
        .min()
}

/// Exponent of `p` in the factorization of a nonzero integer.
fn valuation(n: &BigInt, p: u64) -> u64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut count = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if r.is_zero() {
            count += 1;
            n = q;
        } else {
            return count;
        }
    }
}

/// `p^e` as an exact rational, for any integer exponent.
fn prime_power(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p);
    let magnitude = base.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(magnitude)
    } else {
        Rational::from_integer(magnitude).recip()
    }
}

/// Deterministic Miller-Rabin, exact for all u64 inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
