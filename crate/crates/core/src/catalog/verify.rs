use std::time::Duration;

use serde::Serialize;

use super::{catalog_get, CatalogError, Status};
use crate::cf::{evaluate, Backend};
use crate::numerics::{matched_digits, rat_to_decimal};

/// Extra reference digits beyond the requested threshold, so the
/// reported match count is not capped at the threshold itself.
const REFERENCE_MARGIN: usize = 30;

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub status: Status,
    pub target: String,
    pub depth: usize,
    pub backend: String,
    /// Decimal digits of the value (truncated at the reference length).
    pub value: String,
    pub reference: String,
    pub digits_matched: usize,
    pub digit_threshold: usize,
    pub passed: bool,
    /// `|x_n - x_{n-1}|` in scientific form; heuristic only.
    pub error_estimate: Option<String>,
    pub error_estimate_rigorous: bool,
    pub undefined_convergents: usize,
    pub errata: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    /// Conjectures report evidence but never fail a run.
    pub fn is_hard_failure(&self) -> bool {
        !self.passed && self.status != Status::Conjecture
    }
}

pub fn verify_entry(
    name: &str,
    depth: usize,
    backend: Backend,
    digit_threshold: usize,
) -> Result<VerifyReport, CatalogError> {
    let entry = catalog_get(name)?;
    let report = evaluate(&entry.spec, depth, backend)?;
    let resolution = digit_threshold + REFERENCE_MARGIN;
    let reference = entry.target.reference(resolution);
    let value = report.value.to_rational();
    let digits_matched = matched_digits(&value, &reference);
    Ok(VerifyReport {
        name: entry.name.clone(),
        status: entry.status,
        target: entry.target.to_string(),
        depth,
        backend: backend.to_string(),
        value: rat_to_decimal(&value, resolution).to_string(),
        reference: reference.to_string(),
        digits_matched,
        digit_threshold,
        passed: digits_matched >= digit_threshold,
        error_estimate: report.error_estimate.map(|e| scientific_string(&e.to_rational())),
        error_estimate_rigorous: false,
        undefined_convergents: report.undefined_convergents,
        errata: entry.errata.clone(),
        elapsed: report.elapsed,
    })
}

/// Rough `d.ddde-N` rendering of a nonnegative rational.
pub fn scientific_string(r: &crate::numerics::Rational) -> String {
    use num_traits::{Signed, Zero};
    if r.is_zero() {
        return "0".to_string();
    }
    let mut x = r.abs();
    let ten = crate::numerics::int(10);
    let one = crate::numerics::int(1);
    let mut exp: i64 = 0;
    while x >= ten {
        x /= &ten;
        exp += 1;
    }
    while x < one {
        x *= &ten;
        exp -= 1;
    }
    let mantissa = rat_to_decimal(&x, 3);
    format!("{}{mantissa}e{exp}", if r.is_negative() { "-" } else { "" })
}
