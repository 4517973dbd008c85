use num_traits::{One, Zero};

use super::{CfError, Term};
use crate::numerics::Rational;

/// Rolling window of the three-term recurrences
/// `A_n = b_n A_{n-1} + a_n A_{n-2}` and `B_n = b_n B_{n-1} + a_n B_{n-2}`,
/// started from `A_{-1} = 1, A_0 = b_0, B_{-1} = 0, B_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentState {
    n: usize,
    num_curr: Rational,
    num_prev: Rational,
    den_curr: Rational,
    den_prev: Rational,
    numerator_product: Rational,
}

impl ConvergentState {
    pub fn new(b0: Rational) -> Self {
        ConvergentState {
            n: 0,
            num_curr: b0,
            num_prev: Rational::one(),
            den_curr: Rational::one(),
            den_prev: Rational::zero(),
            numerator_product: Rational::one(),
        }
    }

    pub fn step(&mut self, a: &Rational, b: &Rational) {
        let num_next = b * &self.num_curr + a * &self.num_prev;
        let den_next = b * &self.den_curr + a * &self.den_prev;
        self.num_prev = std::mem::replace(&mut self.num_curr, num_next);
        self.den_prev = std::mem::replace(&mut self.den_curr, den_next);
        self.numerator_product *= a;
        self.n += 1;
    }

    pub fn step_term(&mut self, term: &Term) {
        self.step(&term.a, &term.b);
    }

    pub fn index(&self) -> usize {
        self.n
    }

    /// `A_n`
    pub fn numerator(&self) -> &Rational {
        &self.num_curr
    }

    /// `A_{n-1}`
    pub fn prev_numerator(&self) -> &Rational {
        &self.num_prev
    }

    /// `B_n`
    pub fn denominator(&self) -> &Rational {
        &self.den_curr
    }

    /// `B_{n-1}`
    pub fn prev_denominator(&self) -> &Rational {
        &self.den_prev
    }

    /// `a_1 a_2 ... a_n`
    pub fn numerator_product(&self) -> &Rational {
        &self.numerator_product
    }

    /// `A_n / B_n`, undefined when `B_n = 0`.
    pub fn convergent(&self) -> Result<Rational, CfError> {
        if self.den_curr.is_zero() {
            return Err(CfError::ZeroDenominatorConvergent { n: self.n });
        }
        Ok(&self.num_curr / &self.den_curr)
    }

    /// `A_n B_{n-1} - A_{n-1} B_n`
    pub fn determinant(&self) -> Rational {
        &self.num_curr * &self.den_prev - &self.num_prev * &self.den_curr
    }

    /// `(-1)^(n-1) a_1 ... a_n`, which the determinant must equal.
    pub fn expected_determinant(&self) -> Rational {
        if self.n % 2 == 1 {
            self.numerator_product.clone()
        } else {
            -&self.numerator_product
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int;

    #[test]
    fn initial_conditions() {
        let s = ConvergentState::new(int(-3));
        assert_eq!(s.index(), 0);
        assert_eq!((s.numerator(), s.denominator()), (&int(-3), &int(1)));
        assert_eq!((s.prev_numerator(), s.prev_denominator()), (&int(1), &int(0)));
        assert_eq!(s.convergent().unwrap(), int(-3));
        assert_eq!(ConvergentState::new(int(0)).numerator(), &int(0));
    }

    #[test]
    fn first_steps_of_e_half() {
        let mut s = ConvergentState::new(int(1));
        s.step(&int(1), &int(2));
        assert_eq!((s.numerator(), s.denominator()), (&int(3), &int(2)));
        assert_eq!(s.determinant(), int(1));
        s.step(&int(3), &int(3));
        assert_eq!((s.numerator(), s.denominator()), (&int(12), &int(9)));
        assert_eq!(s.convergent().unwrap(), crate::numerics::rat(4, 3));
        assert_eq!(s.determinant(), int(-3));
        assert_eq!(s.determinant(), s.expected_determinant());
    }

    #[test]
    fn zero_denominator_is_reported() {
        let mut s = ConvergentState::new(int(0));
        s.step(&int(5), &int(0));
        assert_eq!(s.convergent(), Err(CfError::ZeroDenominatorConvergent { n: 1 }));
        // Stepping can continue past an undefined convergent.
        s.step(&int(1), &int(1));
        assert!(s.convergent().is_ok());
    }
}
