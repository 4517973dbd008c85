use std::io::{self, Write};

use serde_json::json;

use super::decimal;
use crate::catalog::VerifyReport;
use crate::cf::{CFSpec, ConvergentState, EvalReport, Value};
use crate::numerics::format_rational;

fn exact_string(value: &Value) -> Option<String> {
    match value {
        Value::Exact(r) => Some(format_rational(r)),
        Value::Approx(_) => None,
    }
}

pub(super) fn eval_json(spec: &CFSpec, r: &EvalReport, digits: usize) -> serde_json::Value {
    json!({
        "name": spec.name,
        "depth": r.depth,
        "value_index": r.value_index,
        "backend": r.backend.to_string(),
        "value": r.value.to_decimal(digits).to_string(),
        "value_exact": exact_string(&r.value),
        "error_estimate": r.error_estimate.as_ref().map(|e| crate::catalog::scientific_string(&e.to_rational())),
        "error_estimate_rigorous": false,
        "undefined_convergents": r.undefined_convergents,
        "renormalizations": r.renormalizations,
        "elapsed_ms": r.elapsed.as_secs_f64() * 1e3,
    })
}

pub(super) fn eval_table(
    out: &mut dyn Write,
    spec: &CFSpec,
    r: &EvalReport,
    digits: usize,
) -> io::Result<()> {
    let rows = [
        ("spec", spec.display_head(4)),
        ("depth", r.depth.to_string()),
        ("backend", r.backend.to_string()),
        ("value", r.value.to_decimal(digits).to_string()),
        ("exact", exact_string(&r.value).unwrap_or_else(|| "-".into())),
        (
            "error est.",
            r.error_estimate
                .as_ref()
                .map(|e| format!("{} (heuristic)", crate::catalog::scientific_string(&e.to_rational())))
                .unwrap_or_else(|| "-".into()),
        ),
        ("undefined", r.undefined_convergents.to_string()),
        ("renorm.", r.renormalizations.to_string()),
        ("time", format!("{:.3} ms", r.elapsed.as_secs_f64() * 1e3)),
    ];
    for (k, v) in rows {
        writeln!(out, "{k:<11} {v}")?;
    }
    Ok(())
}

pub(super) fn convergents(
    out: &mut dyn Write,
    states: &[ConvergentState],
    digits: usize,
    as_json: bool,
) -> io::Result<()> {
    let rows: Vec<[String; 4]> = states
        .iter()
        .map(|s| {
            let x = s
                .convergent()
                .map(|x| decimal(&x, digits))
                .unwrap_or_else(|_| "undefined".into());
            [s.index().to_string(), format_rational(s.numerator()), format_rational(s.denominator()), x]
        })
        .collect();
    if as_json {
        for [n, a, b, x] in &rows {
            writeln!(out, "{}", json!({ "n": n.parse::<usize>().unwrap_or(0), "A": a, "B": b, "value": x }))?;
        }
        return Ok(());
    }
    let header = ["n".to_string(), "A_n".into(), "B_n".into(), "A_n/B_n".into()];
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(rows.iter()) {
        writeln!(
            out,
            "{:>w0$}  {:>w1$}  {:>w2$}  {}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        )?;
    }
    Ok(())
}

pub(super) fn verify_table(out: &mut dyn Write, reports: &[VerifyReport]) -> io::Result<()> {
    let name_w = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    writeln!(
        out,
        "{:<name_w$}  {:<10}  {:>7}  {:<11}  {:>6}  {:>4}  result",
        "name", "status", "depth", "backend", "digits", "need"
    )?;
    for r in reports {
        let result = match (r.passed, r.is_hard_failure()) {
            (true, _) => "pass",
            (false, true) => "FAIL",
            (false, false) => "no (conjecture)",
        };
        writeln!(
            out,
            "{:<name_w$}  {:<10}  {:>7}  {:<11}  {:>6}  {:>4}  {result}",
            r.name,
            r.status.to_string(),
            r.depth,
            r.backend,
            r.digits_matched,
            r.digit_threshold
        )?;
    }
    Ok(())
}
