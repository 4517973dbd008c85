use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{rat_to_decimal, Rational};

/// Precision used when a caller does not ask for one.
pub const DEFAULT_PRECISION: u32 = 256;

/// Binary floating-point value `mantissa * 2^exponent` with at most
/// `precision` mantissa bits. Every operation rounds to nearest, ties to
/// even, at the precision passed to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxReal {
    mantissa: BigInt,
    exponent: i64,
    precision: u32,
}

impl ApproxReal {
    pub fn zero(precision: u32) -> Self {
        assert!(precision >= 2, "precision must be at least 2 bits");
        ApproxReal { mantissa: BigInt::zero(), exponent: 0, precision }
    }

    pub fn from_integer(n: &BigInt, precision: u32) -> Self {
        Self::rounded(n.clone(), 0, false, precision)
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &Rational, precision: u32) -> Self {
        Self::quotient(r.numer(), r.denom(), 0, precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }

    /// `floor(log2 |x|) + 1`, or `None` for zero.
    pub fn magnitude_bits(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mantissa.bits() as i64 + self.exponent)
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> Rational {
        let m = self.mantissa.clone();
        match self.exponent.cmp(&0) {
            Ordering::Less => Rational::new(m, BigInt::one() << (-self.exponent) as u64),
            _ => Rational::from_integer(m << self.exponent as u64),
        }
    }

    /// Re-rounds to another precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::rounded(self.mantissa.clone(), self.exponent, false, precision)
    }

    /// Exact scaling by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        ApproxReal { exponent: self.exponent + k, ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        ApproxReal { mantissa: -&self.mantissa, ..self.clone() }
    }

    pub fn abs(&self) -> Self {
        ApproxReal { mantissa: self.mantissa.abs(), ..self.clone() }
    }

    pub fn add(&self, other: &Self, precision: u32) -> Self {
        if self.is_zero() {
            return other.with_precision(precision);
        }
        if other.is_zero() {
            return self.with_precision(precision);
        }
        let e = self.exponent.min(other.exponent);
        let m = (&self.mantissa << (self.exponent - e) as u64)
            + (&other.mantissa << (other.exponent - e) as u64);
        Self::rounded(m, e, false, precision)
    }

    pub fn sub(&self, other: &Self, precision: u32) -> Self {
        self.add(&other.neg(), precision)
    }

    pub fn mul(&self, other: &Self, precision: u32) -> Self {
        Self::rounded(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
            false,
            precision,
        )
    }

    /// Correctly rounded quotient. Panics on division by zero.
    pub fn div(&self, other: &Self, precision: u32) -> Self {
        assert!(!other.is_zero(), "ApproxReal division by zero");
        Self::quotient(
            &self.mantissa,
            &other.mantissa,
            self.exponent - other.exponent,
            precision,
        )
    }

    /// Rounds `num / den * 2^exponent` to `precision` bits.
    fn quotient(num: &BigInt, den: &BigInt, exponent: i64, precision: u32) -> Self {
        if num.is_zero() {
            return Self::zero(precision);
        }
        let negative = num.is_negative() != den.is_negative();
        let (n, d) = (num.abs(), den.abs());
        // Enough quotient bits (>= precision + 2) that the remainder only
        // acts as a sticky bit.
        let shift = precision as i64 + 2 + d.bits() as i64 - n.bits() as i64;
        let (n, d) = if shift >= 0 {
            (n << shift as u64, d)
        } else {
            (n, d << (-shift) as u64)
        };
        let (q, r) = n.div_rem(&d);
        let q = if negative { -q } else { q };
        Self::rounded(q, exponent - shift, !r.is_zero(), precision)
    }

    /// Rounds `m * 2^e` to `precision` bits; `sticky` marks nonzero bits
    /// below `m` that were already discarded.
    fn rounded(m: BigInt, e: i64, sticky: bool, precision: u32) -> Self {
        assert!(precision >= 2, "precision must be at least 2 bits");
        if m.is_zero() {
            return Self::zero(precision);
        }
        let negative = m.is_negative();
        let mut mag = m.abs();
        let mut e = e;
        let bits = mag.bits();
        if bits > precision as u64 {
            let k = bits - precision as u64;
            let low_mask = (BigInt::one() << k) - 1;
            let rem = &mag & &low_mask;
            let half = BigInt::one() << (k - 1);
            mag >>= k;
            e += k as i64;
            let round_up = match rem.cmp(&half) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => sticky || mag.is_odd(),
            };
            if round_up {
                mag += 1;
                if mag.bits() > precision as u64 {
                    mag >>= 1;
                    e += 1;
                }
            }
        } else {
            debug_assert!(!sticky, "sticky bit with spare mantissa room");
        }
        let tz = mag.trailing_zeros().unwrap_or(0);
        mag >>= tz;
        e += tz as i64;
        ApproxReal {
            mantissa: if negative { -mag } else { mag },
            exponent: e,
            precision,
        }
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // log10(2) ~ 0.30103
        let digits = (self.precision as usize * 30103) / 100_000;
        write!(f, "{}", rat_to_decimal(&self.to_rational(), digits))
    }
}
