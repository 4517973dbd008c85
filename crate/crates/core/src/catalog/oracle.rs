//! Closed forms for the convergents of the two proved `e` expansions.

use num_bigint::BigInt;
use num_traits::One;

use crate::numerics::Integer;

/// Number of derangements of `n` items, `n! sum_{k=0}^{n} (-1)^k / k!`,
/// via `D(n) = n D(n-1) + (-1)^n`.
pub fn subfactorial(n: u64) -> Integer {
    let mut d = BigInt::one();
    for k in 1..=n {
        d *= k;
        if k % 2 == 0 {
            d += 1u32;
        } else {
            d -= 1u32;
        }
    }
    d
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(A_n, B_n)` for `e/2 = 1 + 1/2 + 3/3 + 4/4 + ...`:
/// `A_n = (n+2)!/2` and `B_n = (n+2)! sum_{k=0}^{n+2} (-1)^k/k! = D(n+2)`.
pub fn e_half_convergent(n: u64) -> (Integer, Integer) {
    (factorial(n + 2) / 2u32, subfactorial(n + 2))
}

/// `(A_n, B_n)` for `e - 2 = 1 + (-1)/1 + 2/1 + (-1)/1 + 3/1 + ...`.
///
/// Odd `n = 2j - 1`: `A = (j+1)! - 2 D(j+1)`, `B = D(j+1)`.
/// Even `n = 2j`: `A = (j+1)! + (j+2)! - 2 (D(j+1) + D(j+2))`,
/// `B = D(j+1) + D(j+2)`.
pub fn e_minus_two_convergent(n: u64) -> (Integer, Integer) {
    assert!(n >= 1, "closed forms start at n = 1");
    if n % 2 == 1 {
        let j = n.div_ceil(2);
        let d = subfactorial(j + 1);
        (factorial(j + 1) - 2u32 * &d, d)
    } else {
        let j = n / 2;
        let b = subfactorial(j + 1) + subfactorial(j + 2);
        let a = factorial(j + 1) + factorial(j + 2) - 2u32 * &b;
        (a, b)
    }
}
