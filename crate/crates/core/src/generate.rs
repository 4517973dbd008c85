//! Continued fractions built from a series (each convergent is a partial
//! sum) or from prescribed convergent numerators and denominators.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::{CFSpec, CfError, PolynomialQ, RatFn, Term, TermFormula, TermRule};
use crate::numerics::{from_wire, int, to_wire, RatStr, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("series term c_{k} is zero")]
    ZeroSeriesTerm { k: usize },
    #[error("series term c_{k} has a zero denominator")]
    SeriesPole { k: usize },
    #[error("series term c_{k} requested but only {len} terms were given")]
    SeriesExhausted { k: usize, len: usize },
    #[error("series index must start at 1")]
    ZeroIndex,
    #[error("singular step at n = {n}: A_(n-1) B_(n-2) - A_(n-2) B_(n-1) = 0")]
    SingularStep { n: usize },
    #[error("bad initial conditions: {0}")]
    BadInitialConditions(String),
    #[error("B_{index} = 0; the ratio form is undefined")]
    ZeroB { index: isize },
    #[error("index {n} is outside the supplied sequences (max {max})")]
    IndexOutOfRange { n: usize, max: usize },
    #[error("malformed input file: {0}")]
    Format(String),
    #[error(transparent)]
    Cf(#[from] CfError),
}

/// `num(k) / den(k)`, times `(-1)^(k+1)` when `alternating`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedQuotient {
    pub num: PolynomialQ,
    pub den: PolynomialQ,
    pub alternating: bool,
}

impl SignedQuotient {
    pub fn new(num: PolynomialQ, den: PolynomialQ, alternating: bool) -> Self {
        SignedQuotient { num, den, alternating }
    }

    fn term(&self, k: usize) -> Result<Rational, GenerateError> {
        let d = self.den.eval_at(k as u64);
        if d.is_zero() {
            return Err(GenerateError::SeriesPole { k });
        }
        let v = self.num.eval_at(k as u64) / d;
        Ok(if self.alternating && k.is_multiple_of(2) { -v } else { v })
    }

    /// Value at indices of the given parity, as a rational function.
    fn at_parity(&self, odd: bool) -> RatFn {
        let f = RatFn::new(self.num.clone(), self.den.clone());
        if self.alternating && !odd {
            f.neg()
        } else {
            f
        }
    }
}

/// Terms `c_1, c_2, ...` of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesSpec {
    Explicit(Vec<Rational>),
    SignedPolyQuotient(SignedQuotient),
    SumOfSignedQuotients(Vec<SignedQuotient>),
}

impl SeriesSpec {
    pub fn term(&self, k: usize) -> Result<Rational, GenerateError> {
        if k == 0 {
            return Err(GenerateError::ZeroIndex);
        }
        match self {
            SeriesSpec::Explicit(cs) => cs
                .get(k - 1)
                .cloned()
                .ok_or(GenerateError::SeriesExhausted { k, len: cs.len() }),
            SeriesSpec::SignedPolyQuotient(q) => q.term(k),
            SeriesSpec::SumOfSignedQuotients(parts) => {
                parts.iter().try_fold(Rational::zero(), |acc, q| Ok(acc + q.term(k)?))
            }
        }
    }

    /// `c_k`, rejecting zero.
    pub fn nonzero_term(&self, k: usize) -> Result<Rational, GenerateError> {
        let c = self.term(k)?;
        if c.is_zero() {
            return Err(GenerateError::ZeroSeriesTerm { k });
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SeriesWire::from(self)).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GenerateError> {
        let wire: SeriesWire =
            serde_json::from_str(text).map_err(|e| GenerateError::Format(e.to_string()))?;
        wire.try_into()
    }

    /// `c_k` as a rational function of `k` on odd and on even indices.
    fn parity_forms(&self) -> Option<(RatFn, RatFn)> {
        let parts: &[SignedQuotient] = match self {
            SeriesSpec::Explicit(_) => return None,
            SeriesSpec::SignedPolyQuotient(q) => std::slice::from_ref(q),
            SeriesSpec::SumOfSignedQuotients(parts) => parts,
        };
        let sum = |odd: bool| {
            parts
                .iter()
                .map(|q| q.at_parity(odd))
                .reduce(|x, y| {
                    RatFn::new(&(&x.num * &y.den) + &(&y.num * &x.den), &x.den * &y.den)
                })
                .unwrap_or_else(|| RatFn::polynomial(PolynomialQ::default()))
        };
        Some((sum(true), sum(false)))
    }
}

/// `sum_{k=1}^{n} c_k`, exactly.
pub fn partial_sum(series: &SeriesSpec, n: usize) -> Result<Rational, GenerateError> {
    (1..=n).try_fold(Rational::zero(), |acc, k| Ok(acc + series.nonzero_term(k)?))
}

/// Continued fraction whose `n`-th convergent is the `n`-th partial sum,
/// from `A_n = 2^n (c_1 + ... + c_n)`, `B_n = 2^n`:
/// `b_0 = 0`, `(a_1, b_1) = (2 c_1, 2)`, and for `n >= 2`
/// `a_n = -4 c_n / c_{n-1}`, `b_n = 2 (c_n + c_{n-1}) / c_{n-1}`.
///
/// Closed-form series give a rule-based spec; explicit series give an
/// explicit spec of the same length.
pub fn series_to_cf(series: &SeriesSpec) -> Result<CFSpec, GenerateError> {
    let c1 = series.nonzero_term(1)?;
    let head = Term::new(int(2) * &c1, int(2));
    let rule = match series.parity_forms() {
        None => {
            let SeriesSpec::Explicit(cs) = series else { unreachable!() };
            let mut terms = vec![head];
            for n in 2..=cs.len() {
                let prev = series.nonzero_term(n - 1)?;
                let curr = series.nonzero_term(n)?;
                terms.push(Term::new(int(-4) * &curr / &prev, int(2) * (&curr + &prev) / &prev));
            }
            TermRule::Explicit(terms)
        }
        Some((odd, even)) => {
            let tail = if even == odd {
                TermRule::Polynomial(twisted_formula(&ratio(&odd, &odd)))
            } else if even == odd.neg() {
                TermRule::Polynomial(twisted_formula(&ratio(&odd, &odd).neg()))
            } else {
                // Period 2, block m: n = 2m - 1 (odd) and n = 2m (even).
                let two = int(2);
                let odd_slot = ratio(&odd, &even).compose_linear(&two, &int(-1));
                let even_slot = ratio(&even, &odd).compose_linear(&two, &int(0));
                TermRule::Interleaved(vec![twisted_formula(&odd_slot), twisted_formula(&even_slot)])
            };
            TermRule::hybrid(vec![head], tail)?
        }
    };
    Ok(CFSpec::new(Rational::zero(), rule))
}

/// `f(n) / g(n - 1)`
fn ratio(f: &RatFn, g: &RatFn) -> RatFn {
    let shift = |p: &PolynomialQ| p.compose_linear(&Rational::one(), &int(-1));
    RatFn::new(&f.num * &shift(&g.den), &f.den * &shift(&g.num))
}

/// `a = -4 r`, `b = 2 (1 + r)` for `r = c_n / c_{n-1}`.
fn twisted_formula(r: &RatFn) -> TermFormula {
    let a = RatFn::new(r.num.scale(&int(-4)), r.den.clone());
    let b = RatFn::new((&r.den + &r.num).scale(&int(2)), r.den.clone());
    TermFormula::new(a, b)
}

/// Convergent numerators `A_{-1}, A_0, ...` and denominators
/// `B_{-1}, B_0, ...` (both indexed from -1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequencePair {
    #[serde(rename = "A", with = "rational_list")]
    pub numerators: Vec<Rational>,
    #[serde(rename = "B", with = "rational_list")]
    pub denominators: Vec<Rational>,
}

mod rational_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        to_wire(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Ok(from_wire(Vec::<RatStr>::deserialize(d)?))
    }
}

impl SequencePair {
    pub fn new(numerators: Vec<Rational>, denominators: Vec<Rational>) -> Self {
        SequencePair { numerators, denominators }
    }

    /// Convergent sequences of `spec` up to index `depth`.
    pub fn from_spec(spec: &CFSpec, depth: usize) -> Result<Self, CfError> {
        let (a, b) = spec.convergent_sequences(depth)?;
        Ok(SequencePair::new(a, b))
    }

    /// Largest `n` with both `A_n` and `B_n` present, or `None` when only
    /// index -1 (or nothing) is present.
    pub fn max_index(&self) -> Option<usize> {
        self.numerators.len().min(self.denominators.len()).checked_sub(2)
    }

    /// `A_i`
    pub fn a(&self, i: isize) -> &Rational {
        &self.numerators[(i + 1) as usize]
    }

    /// `B_i`
    pub fn b(&self, i: isize) -> &Rational {
        &self.denominators[(i + 1) as usize]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sequences serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, GenerateError> {
        serde_json::from_str(text).map_err(|e| GenerateError::Format(e.to_string()))
    }

    fn check_initial(&self) -> Result<usize, GenerateError> {
        if self.numerators.len() != self.denominators.len() {
            return Err(GenerateError::BadInitialConditions(format!(
                "A has {} entries but B has {}",
                self.numerators.len(),
                self.denominators.len()
            )));
        }
        let max = self.max_index().ok_or_else(|| {
            GenerateError::BadInitialConditions("need at least A_-1, A_0, B_-1, B_0".into())
        })?;
        if !self.a(-1).is_one() {
            return Err(GenerateError::BadInitialConditions("A_-1 must be 1".into()));
        }
        if !self.b(-1).is_zero() {
            return Err(GenerateError::BadInitialConditions("B_-1 must be 0".into()));
        }
        if !self.b(0).is_one() {
            return Err(GenerateError::BadInitialConditions("B_0 must be 1".into()));
        }
        Ok(max)
    }

    /// `A_{n-1} B_{n-2} - A_{n-2} B_{n-1}`
    fn step_determinant(&self, n: usize) -> Rational {
        let n = n as isize;
        self.a(n - 1) * self.b(n - 2) - self.a(n - 2) * self.b(n - 1)
    }
}

/// Solves the recurrences for `(a_n, b_n)` given the convergent sequences:
/// `b_0 = A_0` and, for `n >= 1`,
/// `b_n = (A_n B_{n-2} - A_{n-2} B_n) / D`, `a_n = (A_{n-1} B_n - A_n B_{n-1}) / D`
/// with `D = A_{n-1} B_{n-2} - A_{n-2} B_{n-1}`.
///
/// The nonvanishing of `D` is checked for every `n <= max + 1`, since the
/// sequences already determine it one step past their last index.
pub fn sequences_to_cf(seqs: &SequencePair) -> Result<CFSpec, GenerateError> {
    let max = seqs.check_initial()?;
    if let Some(n) = (2..=max + 1).find(|&n| seqs.step_determinant(n).is_zero()) {
        return Err(GenerateError::SingularStep { n });
    }
    let mut terms = Vec::with_capacity(max);
    for n in 1..=max {
        let det = seqs.step_determinant(n);
        let i = n as isize;
        let b = (seqs.a(i) * seqs.b(i - 2) - seqs.a(i - 2) * seqs.b(i)) / &det;
        let a = (seqs.a(i - 1) * seqs.b(i) - seqs.a(i) * seqs.b(i - 1)) / &det;
        terms.push(Term::new(a, b));
    }
    Ok(CFSpec::new(seqs.a(0).clone(), TermRule::Explicit(terms)))
}

/// The same `(a_n, b_n)` as [`sequences_to_cf`], computed from the
/// convergents `x_k = A_k / B_k`:
/// `b_n = (x_n - x_{n-2}) / (x_{n-1} - x_{n-2}) * B_n / B_{n-1}` and
/// `a_n = (x_{n-1} - x_n) / (x_{n-1} - x_{n-2}) * B_n / B_{n-2}`.
/// Needs `B_{n-2}`, `B_{n-1}`, `B_n` nonzero, so never applies at `n = 1`.
pub fn rewrite_ratio_form(seqs: &SequencePair, n: usize) -> Result<Term, GenerateError> {
    let max = seqs.check_initial()?;
    if n == 0 || n > max {
        return Err(GenerateError::IndexOutOfRange { n, max });
    }
    let i = n as isize;
    for k in [i - 2, i - 1, i] {
        if seqs.b(k).is_zero() {
            return Err(GenerateError::ZeroB { index: k });
        }
    }
    let x = |k: isize| seqs.a(k) / seqs.b(k);
    let (x0, x1, x2) = (x(i - 2), x(i - 1), x(i));
    let gap = &x1 - &x0;
    if gap.is_zero() {
        return Err(GenerateError::SingularStep { n });
    }
    let b = (&x2 - &x0) / &gap * (seqs.b(i) / seqs.b(i - 1));
    let a = (&x1 - &x2) / &gap * (seqs.b(i) / seqs.b(i - 2));
    Ok(Term::new(a, b))
}

#[derive(Serialize, Deserialize)]
struct QuotientWire {
    num: Vec<RatStr>,
    den: Vec<RatStr>,
    #[serde(default)]
    alternating: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum SeriesWire {
    Explicit { terms: Vec<RatStr> },
    SignedPolyQuotient(QuotientWire),
    SumOfSignedQuotients { parts: Vec<QuotientWire> },
}

impl From<&SignedQuotient> for QuotientWire {
    fn from(q: &SignedQuotient) -> Self {
        QuotientWire {
            num: to_wire(q.num.coeffs()),
            den: to_wire(q.den.coeffs()),
            alternating: q.alternating,
        }
    }
}

impl TryFrom<QuotientWire> for SignedQuotient {
    type Error = GenerateError;

    fn try_from(w: QuotientWire) -> Result<Self, GenerateError> {
        let den = PolynomialQ::new(from_wire(w.den));
        if den.is_zero() {
            return Err(GenerateError::Format("zero denominator polynomial".into()));
        }
        Ok(SignedQuotient::new(PolynomialQ::new(from_wire(w.num)), den, w.alternating))
    }
}

impl From<&SeriesSpec> for SeriesWire {
    fn from(s: &SeriesSpec) -> Self {
        match s {
            SeriesSpec::Explicit(cs) => SeriesWire::Explicit { terms: to_wire(cs) },
            SeriesSpec::SignedPolyQuotient(q) => SeriesWire::SignedPolyQuotient(q.into()),
            SeriesSpec::SumOfSignedQuotients(parts) => {
                SeriesWire::SumOfSignedQuotients { parts: parts.iter().map(Into::into).collect() }
            }
        }
    }
}

impl TryFrom<SeriesWire> for SeriesSpec {
    type Error = GenerateError;

    fn try_from(w: SeriesWire) -> Result<Self, GenerateError> {
        Ok(match w {
            SeriesWire::Explicit { terms } => SeriesSpec::Explicit(from_wire(terms)),
            SeriesWire::SignedPolyQuotient(q) => SeriesSpec::SignedPolyQuotient(q.try_into()?),
            SeriesWire::SumOfSignedQuotients { parts } => SeriesSpec::SumOfSignedQuotients(
                parts.into_iter().map(TryInto::try_into).collect::<Result<_, _>>()?,
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn leibniz() -> SeriesSpec {
        SeriesSpec::SignedPolyQuotient(SignedQuotient::new(
            PolynomialQ::one(),
            PolynomialQ::from_ints(&[-1, 2]),
            true,
        ))
    }

    fn halves(len: usize) -> SeriesSpec {
        SeriesSpec::Explicit((1..=len).map(|k| Rational::new(1.into(), num_bigint::BigInt::from(1) << k)).collect())
    }

    #[test]
    fn leibniz_partial_sums_and_terms() {
        assert_eq!(partial_sum(&leibniz(), 2).unwrap(), rat(2, 3));
        let spec = series_to_cf(&leibniz()).unwrap();
        assert_eq!(spec.b0, int(0));
        assert_eq!(
            spec.terms(3).unwrap(),
            vec![
                Term::new(int(2), int(2)),
                Term::new(rat(4, 3), rat(4, 3)),
                Term::new(rat(12, 5), rat(4, 5))
            ]
        );
    }

    #[test]
    fn geometric_series_terms() {
        let spec = series_to_cf(&halves(8)).unwrap();
        for n in 2..=8 {
            assert_eq!(spec.term_at(n).unwrap(), Term::new(int(-2), int(3)));
        }
        assert_eq!(spec.term_at(1).unwrap(), Term::new(int(1), int(2)));
        assert!(spec.term_at(9).is_err());
    }

    #[test]
    fn zero_terms_rejected() {
        let s = SeriesSpec::Explicit(vec![int(1), int(0), int(2)]);
        assert_eq!(series_to_cf(&s).unwrap_err(), GenerateError::ZeroSeriesTerm { k: 2 });
        assert_eq!(partial_sum(&s, 3).unwrap_err(), GenerateError::ZeroSeriesTerm { k: 2 });
        let z = SeriesSpec::Explicit(vec![int(0)]);
        assert_eq!(series_to_cf(&z).unwrap_err(), GenerateError::ZeroSeriesTerm { k: 1 });
    }

    #[test]
    fn mixed_signs_use_interleaved_rule() {
        // c_k = 1/k^2 + (-1)^(k+1)/k
        let s = SeriesSpec::SumOfSignedQuotients(vec![
            SignedQuotient::new(PolynomialQ::one(), PolynomialQ::from_ints(&[0, 0, 1]), false),
            SignedQuotient::new(PolynomialQ::one(), PolynomialQ::from_ints(&[0, 1]), true),
        ]);
        let spec = series_to_cf(&s).unwrap();
        assert!(matches!(&spec.rule, TermRule::Hybrid { tail, .. } if matches!(**tail, TermRule::Interleaved(_))));
        for n in 1..=30 {
            assert_eq!(spec.convergent_at(n).unwrap(), partial_sum(&s, n).unwrap());
        }
    }

    #[test]
    fn thm1_sequences_invert() {
        let seqs = SequencePair::new(
            vec![int(1), int(1), int(3), int(12)],
            vec![int(0), int(1), int(2), int(9)],
        );
        let spec = sequences_to_cf(&seqs).unwrap();
        assert_eq!(spec.b0, int(1));
        assert_eq!(spec.terms(2).unwrap(), vec![Term::ints(1, 2), Term::ints(3, 3)]);
        assert_eq!(rewrite_ratio_form(&seqs, 2).unwrap(), Term::ints(3, 3));
        assert_eq!(rewrite_ratio_form(&seqs, 1).unwrap_err(), GenerateError::ZeroB { index: -1 });
    }

    #[test]
    fn sequence_edge_cases() {
        let only_b0 = SequencePair::new(vec![int(1), rat(7, 2)], vec![int(0), int(1)]);
        let spec = sequences_to_cf(&only_b0).unwrap();
        assert_eq!(spec.b0, rat(7, 2));
        assert_eq!(spec.rule.len(), Some(0));

        let singular = SequencePair::new(vec![int(1), int(0), int(0)], vec![int(0), int(1), int(1)]);
        assert_eq!(sequences_to_cf(&singular).unwrap_err(), GenerateError::SingularStep { n: 2 });

        let bad = SequencePair::new(vec![int(2), int(0)], vec![int(0), int(1)]);
        assert!(matches!(sequences_to_cf(&bad), Err(GenerateError::BadInitialConditions(_))));
        let bad = SequencePair::new(vec![int(1), int(0)], vec![int(0), int(2)]);
        assert!(matches!(sequences_to_cf(&bad), Err(GenerateError::BadInitialConditions(_))));
    }

    #[test]
    fn files_round_trip() {
        let s = leibniz();
        assert_eq!(SeriesSpec::from_json(&s.to_json()).unwrap(), s);
        let text = r#"{"kind": "explicit", "terms": ["1", "-1/3", "1/5"]}"#;
        assert_eq!(partial_sum(&SeriesSpec::from_json(text).unwrap(), 3).unwrap(), rat(13, 15));
        let seqs = SequencePair::from_json(r#"{"A": ["1", "1", "3"], "B": ["0", "1", "2"]}"#).unwrap();
        assert_eq!(SequencePair::from_json(&seqs.to_json()).unwrap(), seqs);
    }
}
