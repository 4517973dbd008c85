use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::NumericsError;

/// Arbitrary-size signed integer.
pub type Integer = BigInt;

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Builds a normalized rational, rejecting a zero denominator.
pub fn rat_make(num: Integer, den: Integer) -> Result<Rational, NumericsError> {
    if den.is_zero() {
        return Err(NumericsError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Shorthand for small literals. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational, NumericsError> {
    let bad = || NumericsError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            rat_make(p, q)
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Renders `"p/q"`, omitting `q` when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Wire form of a rational: the string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatStr(pub Rational);

impl From<Rational> for RatStr {
    fn from(r: Rational) -> Self {
        RatStr(r)
    }
}

impl From<RatStr> for Rational {
    fn from(r: RatStr) -> Self {
        r.0
    }
}

impl fmt::Display for RatStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map(RatStr).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn to_wire(v: &[Rational]) -> Vec<RatStr> {
    v.iter().cloned().map(RatStr).collect()
}

pub(crate) fn from_wire(v: Vec<RatStr>) -> Vec<Rational> {
    v.into_iter().map(|r| r.0).collect()
}
