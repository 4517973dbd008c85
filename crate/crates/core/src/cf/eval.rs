use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{CFSpec, CfError, ConvergentState};
use crate::numerics::{rat_to_decimal, ApproxReal, DecimalString, Rational};

/// Extra mantissa bits carried through the approximate recurrence; the
/// reported value is rounded back to the requested precision.
pub const GUARD_BITS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "backend", rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Approx { precision: u32 },
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Approx { precision } => write!(f, "approx@{precision}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Exact(Rational),
    Approx(ApproxReal),
}

impl Value {
    pub fn to_rational(&self) -> Rational {
        match self {
            Value::Exact(r) => r.clone(),
            Value::Approx(x) => x.to_rational(),
        }
    }

    pub fn to_decimal(&self, digits: usize) -> DecimalString {
        rat_to_decimal(&self.to_rational(), digits)
    }
}

#[derive(Clone, Debug)]
pub struct EvalReport {
    /// Number of terms folded in.
    pub depth: usize,
    /// Index of the convergent reported in `value`; below `depth` only
    /// when the last convergents had `B_n = 0`.
    pub value_index: usize,
    pub value: Value,
    /// `|x_n - x_{n-1}|` over the last two defined convergents. A
    /// heuristic, not a bound.
    pub error_estimate: Option<Value>,
    pub backend: Backend,
    /// How many of the convergents `1..=depth` were undefined.
    pub undefined_convergents: usize,
    /// Power-of-two rescalings performed by the approximate backend.
    pub renormalizations: usize,
    pub elapsed: Duration,
}

/// Folds terms `1..=depth` of `spec` through the recurrences.
pub fn evaluate(spec: &CFSpec, depth: usize, backend: Backend) -> Result<EvalReport, CfError> {
    if depth == 0 {
        return Err(CfError::ZeroDepth);
    }
    let start = Instant::now();
    let mut report = match backend {
        Backend::Exact => evaluate_exact(spec, depth)?,
        Backend::Approx { precision } => evaluate_approx(spec, depth, precision)?,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Last two `(index, A, B)` with `B != 0`.
struct Defined<T> {
    last: Option<(usize, T, T)>,
    before: Option<(usize, T, T)>,
    undefined: usize,
}

impl<T> Defined<T> {
    fn new() -> Self {
        Defined { last: None, before: None, undefined: 0 }
    }

    fn record(&mut self, n: usize, a: T, b: T) {
        self.before = self.last.replace((n, a, b));
    }
}

fn evaluate_exact(spec: &CFSpec, depth: usize) -> Result<EvalReport, CfError> {
    let mut state = ConvergentState::new(spec.b0.clone());
    let mut defined = Defined::new();
    defined.record(0, state.numerator().clone(), state.denominator().clone());
    for n in 1..=depth {
        state.step_term(&spec.term_at(n)?);
        if state.denominator().is_zero() {
            defined.undefined += 1;
        } else {
            defined.record(n, state.numerator().clone(), state.denominator().clone());
        }
    }
    finish_exact(depth, defined)
}

fn finish_exact(depth: usize, defined: Defined<Rational>) -> Result<EvalReport, CfError> {
    let (index, a, b) = defined.last.expect("convergent 0 is always defined");
    let value = a / b;
    let error_estimate = defined
        .before
        .map(|(_, pa, pb)| Value::Exact((&value - pa / pb).abs()));
    Ok(EvalReport {
        depth,
        value_index: index,
        value: Value::Exact(value),
        error_estimate,
        backend: Backend::Exact,
        undefined_convergents: defined.undefined,
        renormalizations: 0,
        elapsed: Duration::ZERO,
    })
}

fn evaluate_approx(spec: &CFSpec, depth: usize, precision: u32) -> Result<EvalReport, CfError> {
    let wp = precision + GUARD_BITS;
    let threshold = i64::from(precision / 2);
    let lift = |r: &Rational| ApproxReal::from_rational(r, wp);
    let mut num_curr = lift(&spec.b0);
    let mut num_prev = lift(&Rational::from_integer(1.into()));
    let mut den_curr = lift(&Rational::from_integer(1.into()));
    let mut den_prev = ApproxReal::zero(wp);
    let mut defined = Defined::new();
    defined.record(0, num_curr.clone(), den_curr.clone());
    let mut renormalizations = 0;
    for n in 1..=depth {
        let term = spec.term_at(n)?;
        let (a, b) = (lift(&term.a), lift(&term.b));
        let num_next = b.mul(&num_curr, wp).add(&a.mul(&num_prev, wp), wp);
        let den_next = b.mul(&den_curr, wp).add(&a.mul(&den_prev, wp), wp);
        num_prev = std::mem::replace(&mut num_curr, num_next);
        den_prev = std::mem::replace(&mut den_curr, den_next);

        // Dividing all four by the same power of two leaves every ratio
        // unchanged.
        if den_curr.magnitude_bits().is_some_and(|bits| bits > threshold) {
            let k = [&num_curr, &num_prev, &den_curr, &den_prev]
                .iter()
                .filter_map(|x| x.magnitude_bits())
                .max()
                .unwrap_or(0);
            num_curr = num_curr.mul_pow2(-k);
            num_prev = num_prev.mul_pow2(-k);
            den_curr = den_curr.mul_pow2(-k);
            den_prev = den_prev.mul_pow2(-k);
            renormalizations += 1;
        }

        if den_curr.is_zero() {
            defined.undefined += 1;
        } else {
            defined.record(n, num_curr.clone(), den_curr.clone());
        }
    }
    let (index, a, b) = defined.last.expect("convergent 0 is always defined");
    let value_wp = a.div(&b, wp);
    let error_estimate = defined.before.map(|(_, pa, pb)| {
        Value::Approx(value_wp.sub(&pa.div(&pb, wp), wp).abs().with_precision(precision))
    });
    Ok(EvalReport {
        depth,
        value_index: index,
        value: Value::Approx(value_wp.with_precision(precision)),
        error_estimate,
        backend: Backend::Approx { precision },
        undefined_convergents: defined.undefined,
        renormalizations,
        elapsed: Duration::ZERO,
    })
}
