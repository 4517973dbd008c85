use std::fmt;

use num_traits::One;

use super::{CfError, RatFn};
use crate::numerics::{format_rational, Rational};

/// One partial numerator / partial denominator pair `(a_n, b_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub a: Rational,
    pub b: Rational,
}

impl Term {
    pub fn new(a: Rational, b: Rational) -> Self {
        Term { a, b }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        Term::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", paren(&self.a), paren(&self.b))
    }
}

fn paren(r: &Rational) -> String {
    let s = format_rational(r);
    if r.denom().is_one() && !s.starts_with('-') {
        s
    } else {
        format!("({s})")
    }
}

/// Closed-form `a(k)`, `b(k)` evaluated at some index `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermFormula {
    pub a: RatFn,
    pub b: RatFn,
}

impl TermFormula {
    pub fn new(a: RatFn, b: RatFn) -> Self {
        TermFormula { a, b }
    }

    pub fn polynomial(a: super::PolynomialQ, b: super::PolynomialQ) -> Self {
        TermFormula { a: RatFn::polynomial(a), b: RatFn::polynomial(b) }
    }

    pub fn eval_at(&self, k: u64) -> Option<Term> {
        Some(Term::new(self.a.eval_at(k)?, self.b.eval_at(k)?))
    }

    pub fn compose_linear(&self, alpha: &Rational, beta: &Rational) -> Self {
        TermFormula {
            a: self.a.compose_linear(alpha, beta),
            b: self.b.compose_linear(alpha, beta),
        }
    }
}

/// How `(a_n, b_n)` is produced for `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermRule {
    /// Finite list; term `n` is `terms[n - 1]`.
    Explicit(Vec<Term>),
    /// One formula evaluated at `n`.
    Polynomial(TermFormula),
    /// Period `p = rules.len()`; term `n` uses `rules[(n - 1) % p]`
    /// evaluated at the block index `ceil(n / p)`.
    Interleaved(Vec<TermFormula>),
    /// Explicit head, then `tail` evaluated at the global index `n`.
    Hybrid { prefix: Vec<Term>, tail: Box<TermRule> },
}

impl TermRule {
    pub fn hybrid(prefix: Vec<Term>, tail: TermRule) -> Result<Self, CfError> {
        let rule = TermRule::Hybrid { prefix, tail: Box::new(tail) };
        rule.validate()?;
        Ok(rule)
    }

    pub fn validate(&self) -> Result<(), CfError> {
        match self {
            TermRule::Explicit(_) | TermRule::Polynomial(_) => Ok(()),
            TermRule::Interleaved(rules) if rules.is_empty() => {
                Err(CfError::InvalidRule("interleaved rule needs period >= 1".into()))
            }
            TermRule::Interleaved(_) => Ok(()),
            TermRule::Hybrid { tail, .. } => match tail.as_ref() {
                TermRule::Polynomial(_) | TermRule::Interleaved(_) => tail.validate(),
                _ => Err(CfError::InvalidRule(
                    "hybrid tail must be a polynomial or interleaved rule".into(),
                )),
            },
        }
    }

    /// Number of resolvable terms, `None` when unbounded.
    pub fn len(&self) -> Option<usize> {
        match self {
            TermRule::Explicit(terms) => Some(terms.len()),
            _ => None,
        }
    }

    pub fn term_at(&self, n: usize) -> Result<Term, CfError> {
        if n == 0 {
            return Err(CfError::ZeroIndex);
        }
        match self {
            TermRule::Explicit(terms) => terms
                .get(n - 1)
                .cloned()
                .ok_or(CfError::IndexOutOfRule { n, len: terms.len() }),
            TermRule::Polynomial(f) => f.eval_at(n as u64).ok_or(CfError::Pole { n }),
            TermRule::Interleaved(rules) => {
                let p = rules.len();
                let block = (n - 1) / p + 1;
                rules[(n - 1) % p].eval_at(block as u64).ok_or(CfError::Pole { n })
            }
            TermRule::Hybrid { prefix, tail } => match prefix.get(n - 1) {
                Some(t) => Ok(t.clone()),
                None => tail.term_at(n),
            },
        }
    }
}
