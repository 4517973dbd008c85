use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::{NumericsError, Rational};

/// A decimal expansion truncated toward zero to a fixed number of
/// fractional digits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecimalString {
    negative: bool,
    integer: BigUint,
    fraction: String,
}

impl DecimalString {
    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn integer_part(&self) -> &BigUint {
        &self.integer
    }

    pub fn fraction_digits(&self) -> &str {
        &self.fraction
    }

    /// Number of fractional digits.
    pub fn digits(&self) -> usize {
        self.fraction.len()
    }

    /// The exact value of the rendered digits.
    pub fn to_rational(&self) -> Rational {
        let scale = BigInt::from(10u32).pow(self.fraction.len() as u32);
        let mut digits = BigInt::from(self.integer.clone()) * &scale;
        if !self.fraction.is_empty() {
            digits += BigInt::from_str(&self.fraction).expect("fraction holds only digits");
        }
        if self.negative {
            digits = -digits;
        }
        Rational::new(digits, scale)
    }

    /// Drops fractional digits beyond `digits`; longer requests return `self`.
    pub fn truncate(&self, digits: usize) -> DecimalString {
        let mut out = self.clone();
        out.fraction.truncate(digits);
        out
    }
}

impl fmt::Display for DecimalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.integer)?;
        if !self.fraction.is_empty() {
            write!(f, ".{}", self.fraction)?;
        }
        Ok(())
    }
}

impl FromStr for DecimalString {
    type Err = NumericsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || NumericsError::Parse(s.to_string());
        let t = s.trim();
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() || !int_part.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        if !frac_part.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(DecimalString {
            negative,
            integer: BigUint::from_str(int_part).map_err(|_| bad())?,
            fraction: frac_part.to_string(),
        })
    }
}

/// Exact long division of `r`, keeping `digits` fractional digits and
/// truncating toward zero. The sign is that of `r`, so `-1/300` at two
/// digits renders as `-0.00`.
pub fn rat_to_decimal(r: &Rational, digits: usize) -> DecimalString {
    let negative = r.is_negative();
    let num = r.numer().abs().to_biguint().expect("absolute value");
    let den = r.denom().to_biguint().expect("positive denominator");
    let (integer, mut rem) = num.div_rem(&den);
    let mut fraction = String::with_capacity(digits);
    let ten = BigUint::from(10u32);
    for _ in 0..digits {
        rem *= &ten;
        let (q, r) = rem.div_rem(&den);
        // q < 10
        let d = q.to_u32_digits().first().copied().unwrap_or(0);
        fraction.push(char::from(b'0' + d as u8));
        rem = r;
    }
    DecimalString { negative, integer, fraction }
}

/// Largest `d` with `|x - y| < 10^-d`, capped at the digit count of `y`.
/// Returns 0 when the difference is at least 1.
pub fn matched_digits(x: &Rational, y: &DecimalString) -> usize {
    digits_within(&(x - y.to_rational()), y.digits())
}

/// Like [`matched_digits`] but first checks that `y` can resolve
/// `resolution` digits.
pub fn matched_digits_at(
    x: &Rational,
    y: &DecimalString,
    resolution: usize,
) -> Result<usize, NumericsError> {
    if y.digits() < resolution {
        return Err(NumericsError::InsufficientReferenceDigits {
            have: y.digits(),
            need: resolution,
        });
    }
    Ok(digits_within(&(x - y.to_rational()), resolution))
}

fn digits_within(diff: &Rational, cap: usize) -> usize {
    if diff.is_zero() {
        return cap;
    }
    let num = diff.numer().abs();
    let den = diff.denom();
    if num >= *den {
        return 0;
    }
    // Find the largest d <= cap with num * 10^d < den.
    let mut scaled = num;
    let mut d = 0;
    while d < cap {
        scaled *= 10u32;
        if scaled >= *den {
            break;
        }
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{parse_rational, rat};
    use proptest::prelude::*;

    #[test]
    fn renders_truncated() {
        assert_eq!(rat_to_decimal(&rat(1, 3), 5).to_string(), "0.33333");
        assert_eq!(rat_to_decimal(&rat(6, 5), 3).to_string(), "1.200");
        assert_eq!(rat_to_decimal(&rat(-1, 2), 2).to_string(), "-0.50");
        assert_eq!(rat_to_decimal(&rat(-2, 3), 3).to_string(), "-0.666");
        assert_eq!(rat_to_decimal(&rat(7, 2), 0).to_string(), "3");
        assert_eq!(rat_to_decimal(&rat(-1, 300), 2).to_string(), "-0.00");
    }

    #[test]
    fn parse_and_value() {
        let d: DecimalString = "-1.250".parse().unwrap();
        assert!(d.is_negative());
        assert_eq!(d.digits(), 3);
        assert_eq!(d.to_rational(), rat(-5, 4));
        assert!("1.2.3".parse::<DecimalString>().is_err());
        assert!(".5".parse::<DecimalString>().is_err());
        assert_eq!(d.truncate(1).to_string(), "-1.2");
    }

    #[test]
    fn matched_digit_examples() {
        let y: DecimalString = "1.04720".parse().unwrap();
        assert_eq!(matched_digits(&parse_rational("104719/100000").unwrap(), &y), 4);
        assert_eq!(matched_digits(&y.to_rational(), &y), 5);
        let three: DecimalString = "3.0".parse().unwrap();
        assert_eq!(matched_digits(&rat(2, 1), &three), 0);
        assert_eq!(matched_digits(&rat(-7, 1), &three), 0);
    }

    #[test]
    fn matched_digits_rejects_short_reference() {
        let y: DecimalString = "3.14".parse().unwrap();
        assert_eq!(
            matched_digits_at(&rat(22, 7), &y, 5),
            Err(NumericsError::InsufficientReferenceDigits { have: 2, need: 5 })
        );
        assert_eq!(matched_digits_at(&rat(22, 7), &y, 2), Ok(2));
    }

    #[test]
    fn difference_not_prefix() {
        // 0.99999 vs 1.00000 share no prefix but agree to 4 digits.
        let y: DecimalString = "1.00000".parse().unwrap();
        assert_eq!(matched_digits(&rat(99_999, 100_000), &y), 4);
    }

    proptest! {
        #[test]
        fn next_digit_extends(n in -1_000_000i64..1_000_000, d in 1i64..100_000, k in 0usize..30) {
            let r = rat(n, d);
            let short = rat_to_decimal(&r, k).to_string();
            let long = rat_to_decimal(&r, k + 1).to_string();
            prop_assert!(long.starts_with(&short));
            prop_assert_eq!(long.len(), short.len() + if k == 0 { 2 } else { 1 });
            // Truncation never overshoots in magnitude.
            let v = rat_to_decimal(&r, k).to_rational();
            prop_assert!(v.abs() <= r.abs());
        }
    }
}
