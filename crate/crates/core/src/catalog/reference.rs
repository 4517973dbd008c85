//! Reference values of `e` and `pi` with proven error bounds.
//!
//! `e` comes from the partial sums of `sum 1/k!`, whose tail after `N` is
//! below `2/(N+1)!`. `pi` comes from `16 atan(1/5) - 4 atan(1/239)`, each
//! arctangent an alternating series bounded by its first omitted term.
//! Both are carried as exact rational enclosures `[lo, hi]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::numerics::{rat_to_decimal, DecimalString, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    E,
    Pi,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::E => "e",
            Base::Pi => "pi",
        })
    }
}

impl std::str::FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "e" => Ok(Base::E),
            "pi" => Ok(Base::Pi),
            other => Err(format!("unknown constant {other:?}")),
        }
    }
}

/// Closed interval of rationals containing the constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Image under `x -> scale * x + offset`.
    pub fn affine(&self, scale: &Rational, offset: &Rational) -> Enclosure {
        let (a, b) = (scale * &self.lo + offset, scale * &self.hi + offset);
        if scale.is_negative() {
            Enclosure { lo: b, hi: a }
        } else {
            Enclosure { lo: a, hi: b }
        }
    }

    /// The common truncation of both endpoints, if they agree.
    pub fn decimal(&self, digits: usize) -> Option<DecimalString> {
        let lo = rat_to_decimal(&self.lo, digits);
        (lo == rat_to_decimal(&self.hi, digits)).then_some(lo)
    }
}

fn ten_pow(d: usize) -> BigInt {
    BigInt::from(10u32).pow(d as u32)
}

/// Enclosure of width below `10^-d`.
pub fn enclosure(base: Base, d: usize) -> Enclosure {
    static CACHE: OnceLock<Mutex<HashMap<Base, (usize, Enclosure)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some((have, enc)) = cache.lock().expect("cache lock").get(&base) {
        if *have >= d {
            return enc.clone();
        }
    }
    let enc = match base {
        Base::E => e_enclosure(d),
        Base::Pi => pi_enclosure(d),
    };
    let mut guard = cache.lock().expect("cache lock");
    let slot = guard.entry(base).or_insert_with(|| (d, enc.clone()));
    if slot.0 < d {
        *slot = (d, enc.clone());
    }
    enc
}

fn e_enclosure(d: usize) -> Enclosure {
    let bound = Rational::new(BigInt::one(), ten_pow(d));
    // Smallest N with 2/(N+1)! < 10^-d.
    let mut n = 1u64;
    let mut fact_next = BigInt::from(2u32); // (N+1)!
    while Rational::new(BigInt::from(2u32), fact_next.clone()) >= bound {
        n += 1;
        fact_next *= n + 1;
    }
    // sum_{k=0}^{N} N!/k! = 1 + N + N(N-1) + ... + N!, by Horner.
    let mut t = BigInt::one();
    let mut fact = BigInt::one();
    for k in 1..=n {
        t = t * k + 1u32;
        fact *= k;
    }
    let lo = Rational::new(t, fact);
    let hi = &lo + Rational::new(BigInt::from(2u32), fact_next);
    Enclosure { lo, hi }
}

/// `atan(1/x)` to within `tol`, as `(partial sum, first omitted term)`.
fn atan_inv(x: u32, tol: &Rational) -> (Rational, Rational) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone(); // x^(2k+1)
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let term = Rational::new(BigInt::one(), &power * (2 * k + 1));
        if &term < tol {
            return (sum, term);
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
        k += 1;
    }
}

fn pi_enclosure(d: usize) -> Enclosure {
    // Width is 32 t5 + 8 t239; keep each part under half of 10^-d.
    let bound = Rational::new(BigInt::one(), ten_pow(d));
    let (a, ta) = atan_inv(5, &(&bound / Rational::from_integer(64.into())));
    let (b, tb) = atan_inv(239, &(&bound / Rational::from_integer(16.into())));
    let sixteen = Rational::from_integer(16.into());
    let four = Rational::from_integer(4.into());
    let lo = &sixteen * (&a - &ta) - &four * (&b + &tb);
    let hi = &sixteen * (&a + &ta) - &four * (&b - &tb);
    Enclosure { lo, hi }
}

/// Decimal expansion of `scale * base + offset`, truncated toward zero,
/// exact in every rendered digit.
pub fn reference_value(base: Base, scale: &Rational, offset: &Rational, digits: usize) -> DecimalString {
    // Start with 20% guard digits and widen until both endpoints agree.
    let mut guard = (digits / 5).max(5);
    loop {
        let enc = enclosure(base, digits + guard).affine(scale, offset);
        if let Some(dec) = enc.decimal(digits) {
            return dec;
        }
        guard *= 2;
    }
}

/// Decimal expansion of `e` or `pi` with `digits` fractional digits.
pub fn reference_constant(base: Base, digits: usize) -> DecimalString {
    reference_value(base, &Rational::one(), &Rational::zero(), digits)
}
