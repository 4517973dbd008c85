//! Continued fraction specifications and convergent evaluation.

mod eval;
mod format;
mod poly;
mod rule;
mod state;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use eval::{evaluate, Backend, EvalReport, Value, GUARD_BITS};
pub use poly::{PolynomialQ, RatFn};
pub use rule::{Term, TermFormula, TermRule};
pub use state::ConvergentState;

use crate::numerics::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CfError {
    #[error("term indices start at 1")]
    ZeroIndex,
    #[error("term {n} requested but the explicit rule has only {len} terms")]
    IndexOutOfRule { n: usize, len: usize },
    #[error("term rule has a pole at n = {n}")]
    Pole { n: usize },
    #[error("convergent {n} is undefined (B_{n} = 0)")]
    ZeroDenominatorConvergent { n: usize },
    #[error("invalid term rule: {0}")]
    InvalidRule(String),
    #[error("evaluation depth must be at least 1")]
    ZeroDepth,
    #[error("malformed spec file: {0}")]
    Format(String),
}

/// `b0 + a1/(b1 + a2/(b2 + ...))`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "format::SpecWire", into = "format::SpecWire")]
pub struct CFSpec {
    pub name: Option<String>,
    pub b0: Rational,
    pub rule: TermRule,
}

impl CFSpec {
    pub fn new(b0: Rational, rule: TermRule) -> Self {
        CFSpec { name: None, b0, rule }
    }

    pub fn named(name: &str, b0: Rational, rule: TermRule) -> Self {
        CFSpec { name: Some(name.to_string()), b0, rule }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn term_at(&self, n: usize) -> Result<Term, CfError> {
        self.rule.term_at(n)
    }

    /// Terms `1..=depth`.
    pub fn terms(&self, depth: usize) -> Result<Vec<Term>, CfError> {
        (1..=depth).map(|n| self.term_at(n)).collect()
    }

    /// The recurrence state after `n` terms.
    pub fn state_at(&self, n: usize) -> Result<ConvergentState, CfError> {
        let mut state = ConvergentState::new(self.b0.clone());
        for k in 1..=n {
            state.step_term(&self.term_at(k)?);
        }
        Ok(state)
    }

    /// States `0..=depth`.
    pub fn states(&self, depth: usize) -> Result<Vec<ConvergentState>, CfError> {
        let mut state = ConvergentState::new(self.b0.clone());
        let mut out = Vec::with_capacity(depth + 1);
        out.push(state.clone());
        for k in 1..=depth {
            state.step_term(&self.term_at(k)?);
            out.push(state.clone());
        }
        Ok(out)
    }

    pub fn convergent_at(&self, n: usize) -> Result<Rational, CfError> {
        self.state_at(n)?.convergent()
    }

    /// `(A_{-1}, A_0, ..., A_depth)` and the same for `B`.
    pub fn convergent_sequences(
        &self,
        depth: usize,
    ) -> Result<(Vec<Rational>, Vec<Rational>), CfError> {
        let states = self.states(depth)?;
        let mut a = vec![states[0].prev_numerator().clone()];
        let mut b = vec![states[0].prev_denominator().clone()];
        for s in &states {
            a.push(s.numerator().clone());
            b.push(s.denominator().clone());
        }
        Ok((a, b))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CfError> {
        serde_json::from_str(text).map_err(|e| CfError::Format(e.to_string()))
    }

    /// `b0 + a1/b1 + ... + an/bn + ...` with the first `shown` terms.
    pub fn display_head(&self, shown: usize) -> String {
        let mut s = format_rational(&self.b0);
        for n in 1..=shown {
            match self.term_at(n) {
                Ok(t) => s.push_str(&format!(" + {t}")),
                Err(_) => return s,
            }
        }
        if self.rule.len().is_none_or(|len| len > shown) {
            s.push_str(" + ...");
        }
        s
    }
}

impl fmt::Display for CFSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name}: ")?;
        }
        f.write_str(&self.display_head(5))
    }
}
