//! Independent series for `e` and `pi`, used to cross-check the reference
//! constants. Both return an exact rational enclosure narrower than
//! `10^-digits`.

#![allow(dead_code)]

use gcf_lab::numerics::{int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn ten_pow(d: usize) -> Rational {
    Rational::from_integer(BigInt::from(10).pow(d as u32))
}

/// `e = sum_{k>=0} (2k+2)/(2k+1)!`. Consecutive terms shrink by at least a
/// factor 3, so the tail is below twice the first omitted term.
pub fn e_enclosure(digits: usize) -> (Rational, Rational) {
    let eps = ten_pow(digits).recip();
    let mut sum = Rational::zero();
    let mut fact = BigInt::one(); // (2k+1)!
    let mut k: i64 = 0;
    loop {
        let term = Rational::new(BigInt::from(2 * k + 2), fact.clone());
        if int(2) * &term < eps {
            return (sum.clone(), sum + int(2) * term);
        }
        sum += term;
        fact *= BigInt::from((2 * k + 2) * (2 * k + 3));
        k += 1;
    }
}

/// `atan(1/x)` as an alternating series, bracketed by the first omitted term.
fn atan_inv(x: i64, eps: &Rational) -> (Rational, Rational) {
    let x2 = BigInt::from(x * x);
    let mut pow = BigInt::from(x); // x^(2k+1)
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let term = Rational::new(BigInt::one(), &pow * BigInt::from(2 * k + 1));
        if &term < eps {
            return if k % 2 == 0 { (sum.clone(), sum + term) } else { (sum.clone() - term, sum) };
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow *= &x2;
        k += 1;
    }
}

/// `pi = 4 atan(1/2) + 4 atan(1/3)`.
pub fn pi_enclosure(digits: usize) -> (Rational, Rational) {
    let eps = ten_pow(digits + 2).recip();
    let (a_lo, a_hi) = atan_inv(2, &eps);
    let (b_lo, b_hi) = atan_inv(3, &eps);
    (int(4) * (a_lo + b_lo), int(4) * (a_hi + b_hi))
}
