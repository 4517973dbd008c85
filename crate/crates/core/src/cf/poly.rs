use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::numerics::{format_rational, Rational};

/// Polynomial with rational coefficients, constant term first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolynomialQ {
    coeffs: Vec<Rational>,
}

impl PolynomialQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `alpha * x + beta`
    pub fn linear(alpha: Rational, beta: Rational) -> Self {
        Self::new(vec![beta, alpha])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at(&self, n: u64) -> Rational {
        self.eval(&Rational::from_integer(n.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(q(x))`
    pub fn compose(&self, inner: &PolynomialQ) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(PolynomialQ::default(), |acc, c| &(&acc * inner) + &PolynomialQ::constant(c.clone()))
    }

    /// `p(alpha * x + beta)`
    pub fn compose_linear(&self, alpha: &Rational, beta: &Rational) -> Self {
        self.compose(&PolynomialQ::linear(alpha.clone(), beta.clone()))
    }
}

impl Add for &PolynomialQ {
    type Output = PolynomialQ;

    fn add(self, rhs: &PolynomialQ) -> PolynomialQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        PolynomialQ::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &PolynomialQ {
    type Output = PolynomialQ;

    fn sub(self, rhs: &PolynomialQ) -> PolynomialQ {
        self + &(-rhs)
    }
}

impl Neg for &PolynomialQ {
    type Output = PolynomialQ;

    fn neg(self) -> PolynomialQ {
        PolynomialQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolynomialQ {
    type Output = PolynomialQ;

    fn mul(self, rhs: &PolynomialQ) -> PolynomialQ {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialQ::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        PolynomialQ::new(out)
    }
}

impl fmt::Display for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let shown = if mag.is_one() && k > 0 { String::new() } else { format_rational(&mag) };
            match k {
                0 => f.write_str(&shown)?,
                1 => write!(f, "{shown}n")?,
                _ => write!(f, "{shown}n^{k}")?,
            }
        }
        Ok(())
    }
}

/// Ratio of two polynomials in the index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    pub num: PolynomialQ,
    pub den: PolynomialQ,
}

impl RatFn {
    pub fn new(num: PolynomialQ, den: PolynomialQ) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RatFn { num, den }
    }

    pub fn polynomial(p: PolynomialQ) -> Self {
        RatFn { num: p, den: PolynomialQ::one() }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `None` at a pole.
    pub fn eval_at(&self, n: u64) -> Option<Rational> {
        let d = self.den.eval_at(n);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_at(n) / d)
        }
    }

    pub fn neg(&self) -> Self {
        RatFn { num: -&self.num, den: self.den.clone() }
    }

    pub fn compose_linear(&self, alpha: &Rational, beta: &Rational) -> Self {
        RatFn {
            num: self.num.compose_linear(alpha, beta),
            den: self.den.compose_linear(alpha, beta),
        }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn trims_and_degree() {
        let p = PolynomialQ::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(PolynomialQ::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn evaluates_closed_forms() {
        // 2(36n^2 - 72n + 31) at n = 3
        let b = PolynomialQ::from_ints(&[62, -144, 72]);
        assert_eq!(b.eval_at(3), int(278));
        assert_eq!(b.to_string(), "72n^2 - 144n + 62");
        let half = PolynomialQ::new(vec![rat(1, 2), rat(-1, 3)]);
        assert_eq!(half.eval_at(3), rat(-1, 2));
    }

    #[test]
    fn rational_function_poles() {
        let f = RatFn::new(PolynomialQ::one(), PolynomialQ::from_ints(&[-2, 1]));
        assert_eq!(f.eval_at(2), None);
        assert_eq!(f.eval_at(4), Some(rat(1, 2)));
    }

    proptest! {
        #[test]
        fn composition_matches_evaluation(
            cs in proptest::collection::vec(-20i64..20, 0..5),
            alpha in -5i64..5, beta in -5i64..5, x in -10i64..10,
        ) {
            let p = PolynomialQ::from_ints(&cs);
            let q = p.compose_linear(&int(alpha), &int(beta));
            prop_assert_eq!(q.eval(&int(x)), p.eval(&int(alpha * x + beta)));
            let sq = &p * &p;
            prop_assert_eq!(sq.eval(&int(x)), p.eval(&int(x)) * p.eval(&int(x)));
            prop_assert_eq!((&p - &p).degree(), None);
        }
    }
}
