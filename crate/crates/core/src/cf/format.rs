//! JSON layout of a [`CFSpec`] file.
//!
//! ```json
//! {"name": "e_half", "b0": "1",
//!  "rule": {"kind": "hybrid", "prefix": [["1", "2"]],
//!           "tail": {"kind": "polynomial", "a": ["1", "1"], "b": ["1", "1"]}}}
//! ```
//!
//! Rationals are `"p/q"` strings and polynomials are coefficient lists,
//! constant term first. A formula may carry `a_den` / `b_den` lists, in
//! which case the term is the ratio of the two polynomials; they are
//! omitted when the denominator is 1.

use serde::{Deserialize, Serialize};

use super::{CFSpec, CfError, PolynomialQ, RatFn, Term, TermFormula, TermRule};
use crate::numerics::{from_wire, to_wire, RatStr};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct SpecWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    b0: RatStr,
    rule: RuleWire,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RuleWire {
    Explicit { terms: Vec<(RatStr, RatStr)> },
    Polynomial(FormulaWire),
    Interleaved { rules: Vec<FormulaWire> },
    Hybrid { prefix: Vec<(RatStr, RatStr)>, tail: Box<RuleWire> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct FormulaWire {
    a: Vec<RatStr>,
    b: Vec<RatStr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a_den: Option<Vec<RatStr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b_den: Option<Vec<RatStr>>,
}

fn terms_to_wire(terms: &[Term]) -> Vec<(RatStr, RatStr)> {
    terms.iter().map(|t| (RatStr(t.a.clone()), RatStr(t.b.clone()))).collect()
}

fn terms_from_wire(terms: Vec<(RatStr, RatStr)>) -> Vec<Term> {
    terms.into_iter().map(|(a, b)| Term::new(a.0, b.0)).collect()
}

fn den_to_wire(f: &RatFn) -> Option<Vec<RatStr>> {
    (!f.is_polynomial()).then(|| to_wire(f.den.coeffs()))
}

fn ratfn_from_wire(num: Vec<RatStr>, den: Option<Vec<RatStr>>) -> Result<RatFn, CfError> {
    let num = PolynomialQ::new(from_wire(num));
    match den {
        None => Ok(RatFn::polynomial(num)),
        Some(d) => {
            let den = PolynomialQ::new(from_wire(d));
            if den.is_zero() {
                return Err(CfError::InvalidRule("zero denominator polynomial".into()));
            }
            Ok(RatFn::new(num, den))
        }
    }
}

impl From<&TermFormula> for FormulaWire {
    fn from(f: &TermFormula) -> Self {
        FormulaWire {
            a: to_wire(f.a.num.coeffs()),
            b: to_wire(f.b.num.coeffs()),
            a_den: den_to_wire(&f.a),
            b_den: den_to_wire(&f.b),
        }
    }
}

impl TryFrom<FormulaWire> for TermFormula {
    type Error = CfError;

    fn try_from(w: FormulaWire) -> Result<Self, CfError> {
        Ok(TermFormula::new(ratfn_from_wire(w.a, w.a_den)?, ratfn_from_wire(w.b, w.b_den)?))
    }
}

impl From<&TermRule> for RuleWire {
    fn from(rule: &TermRule) -> Self {
        match rule {
            TermRule::Explicit(terms) => RuleWire::Explicit { terms: terms_to_wire(terms) },
            TermRule::Polynomial(f) => RuleWire::Polynomial(f.into()),
            TermRule::Interleaved(rules) => {
                RuleWire::Interleaved { rules: rules.iter().map(FormulaWire::from).collect() }
            }
            TermRule::Hybrid { prefix, tail } => RuleWire::Hybrid {
                prefix: terms_to_wire(prefix),
                tail: Box::new(tail.as_ref().into()),
            },
        }
    }
}

impl TryFrom<RuleWire> for TermRule {
    type Error = CfError;

    fn try_from(w: RuleWire) -> Result<Self, CfError> {
        let rule = match w {
            RuleWire::Explicit { terms } => TermRule::Explicit(terms_from_wire(terms)),
            RuleWire::Polynomial(f) => TermRule::Polynomial(f.try_into()?),
            RuleWire::Interleaved { rules } => TermRule::Interleaved(
                rules.into_iter().map(TermFormula::try_from).collect::<Result<_, _>>()?,
            ),
            RuleWire::Hybrid { prefix, tail } => TermRule::Hybrid {
                prefix: terms_from_wire(prefix),
                tail: Box::new((*tail).try_into()?),
            },
        };
        rule.validate()?;
        Ok(rule)
    }
}

impl From<CFSpec> for SpecWire {
    fn from(spec: CFSpec) -> Self {
        SpecWire { name: spec.name, b0: RatStr(spec.b0), rule: (&spec.rule).into() }
    }
}

impl TryFrom<SpecWire> for CFSpec {
    type Error = CfError;

    fn try_from(w: SpecWire) -> Result<Self, CfError> {
        Ok(CFSpec { name: w.name, b0: w.b0.0, rule: w.rule.try_into()? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int;

    #[test]
    fn documented_layout_parses() {
        let text = r#"{"name": "e_half", "b0": "1",
            "rule": {"kind": "hybrid", "prefix": [["1", "2"]],
                     "tail": {"kind": "polynomial", "a": ["1", "1"], "b": ["1", "1"]}}}"#;
        let spec = CFSpec::from_json(text).unwrap();
        assert_eq!(spec.b0, int(1));
        assert_eq!(spec.term_at(3).unwrap(), Term::ints(4, 4));
        let back = CFSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(CFSpec::from_json(r#"{"b0": "1/0", "rule": {"kind": "explicit", "terms": []}}"#).is_err());
        assert!(CFSpec::from_json(r#"{"b0": "1", "rule": {"kind": "interleaved", "rules": []}}"#).is_err());
        assert!(CFSpec::from_json(
            r#"{"b0": "1", "rule": {"kind": "polynomial", "a": ["1"], "b": ["1"], "b_den": ["0"]}}"#
        )
        .is_err());
        assert!(CFSpec::from_json(r#"{"b0": "1", "rule": {"kind": "spiral"}}"#).is_err());
    }

    #[test]
    fn rational_function_keeps_denominators() {
        let text = r#"{"b0": "0", "rule": {"kind": "polynomial", "a": ["1"], "a_den": ["0", "1"], "b": ["2"]}}"#;
        let spec = CFSpec::from_json(text).unwrap();
        assert_eq!(spec.term_at(4).unwrap().a, crate::numerics::rat(1, 4));
        assert!(spec.to_json().contains("a_den"));
        assert!(!spec.to_json().contains("b_den"));
    }
}
