//! Term-level rewrites that negate or preserve every convergent.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::cf::{CFSpec, CfError, Term, TermFormula, TermRule};
use crate::numerics::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    #[error("scalar c_{n} is zero")]
    ZeroScalar { n: usize },
    #[error(transparent)]
    Term(#[from] CfError),
}

/// Scalars `c_1, c_2, ...` for an equivalence transformation; `c_0 = 1`
/// and every index past the supplied values is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSequence {
    values: Vec<Rational>,
}

impl ScalarSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        ScalarSequence { values }
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> Rational) -> Self {
        ScalarSequence { values: (1..=len).map(f).collect() }
    }

    pub fn get(&self, n: usize) -> Rational {
        match n {
            0 => Rational::one(),
            n => self.values.get(n - 1).cloned().unwrap_or_else(Rational::one),
        }
    }
}

fn derived_name(op: &str, spec: &CFSpec) -> Option<String> {
    spec.name.as_ref().map(|n| format!("{op}({n})"))
}

/// `-(b0 + a1/(b1 + ...)) = -b0 + a1/(-b1 + a2/(-b2 + ...))`
pub fn negate(spec: &CFSpec) -> CFSpec {
    CFSpec {
        name: derived_name("negate", spec),
        b0: -&spec.b0,
        rule: negate_rule(&spec.rule),
    }
}

fn negate_terms(terms: &[Term]) -> Vec<Term> {
    terms.iter().map(|t| Term::new(t.a.clone(), -&t.b)).collect()
}

fn negate_formula(f: &TermFormula) -> TermFormula {
    TermFormula::new(f.a.clone(), f.b.neg())
}

fn negate_rule(rule: &TermRule) -> TermRule {
    match rule {
        TermRule::Explicit(terms) => TermRule::Explicit(negate_terms(terms)),
        TermRule::Polynomial(f) => TermRule::Polynomial(negate_formula(f)),
        TermRule::Interleaved(rules) => {
            TermRule::Interleaved(rules.iter().map(negate_formula).collect())
        }
        TermRule::Hybrid { prefix, tail } => TermRule::Hybrid {
            prefix: negate_terms(prefix),
            tail: Box::new(negate_rule(tail)),
        },
    }
}

/// `a_n -> -a_n` for every `n`, `b_n -> -b_n` for odd `n`. Every
/// convergent is unchanged.
pub fn sign_flip(spec: &CFSpec) -> CFSpec {
    CFSpec {
        name: derived_name("sign_flip", spec),
        b0: spec.b0.clone(),
        rule: sign_flip_rule(&spec.rule),
    }
}

fn sign_flip_terms(terms: &[Term]) -> Vec<Term> {
    terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            // i = n - 1, so n is odd when i is even
            let b = if i % 2 == 0 { -&t.b } else { t.b.clone() };
            Term::new(-&t.a, b)
        })
        .collect()
}

fn sign_flip_rule(rule: &TermRule) -> TermRule {
    match rule {
        TermRule::Explicit(terms) => TermRule::Explicit(sign_flip_terms(terms)),
        TermRule::Polynomial(f) => sign_flip_periodic(std::slice::from_ref(f)),
        TermRule::Interleaved(rules) => sign_flip_periodic(rules),
        TermRule::Hybrid { prefix, tail } => TermRule::Hybrid {
            prefix: sign_flip_terms(prefix),
            tail: Box::new(sign_flip_rule(tail)),
        },
    }
}

/// The parity of `n` is fixed per slot only when the period is even, so
/// odd periods are first unrolled to twice their length: slot `j` of the
/// doubled rule at block `m` is the old slot `j % p` at block
/// `2m - 1 + j / p`.
fn sign_flip_periodic(rules: &[TermFormula]) -> TermRule {
    let p = rules.len();
    let q = if p.is_multiple_of(2) { 1 } else { 2 };
    let alpha = Rational::from_integer(q.into());
    let flipped = (0..p * q)
        .map(|j| {
            let beta = Rational::from_integer(((j / p) as i64 - (q as i64 - 1)).into());
            let f = rules[j % p].compose_linear(&alpha, &beta);
            let b = if j % 2 == 0 { f.b.neg() } else { f.b };
            TermFormula::new(f.a.neg(), b)
        })
        .collect();
    TermRule::Interleaved(flipped)
}

/// `a_n -> c_n c_{n-1} a_n`, `b_n -> c_n b_n` for `1 <= n <= depth`.
pub fn equivalence_scale(
    spec: &CFSpec,
    scalars: &ScalarSequence,
    depth: usize,
) -> Result<CFSpec, TransformError> {
    let mut terms = Vec::with_capacity(depth);
    for n in 1..=depth {
        let c = scalars.get(n);
        if c.is_zero() {
            return Err(TransformError::ZeroScalar { n });
        }
        let t = spec.term_at(n)?;
        terms.push(Term::new(&c * scalars.get(n - 1) * t.a, c * t.b));
    }
    Ok(CFSpec {
        name: derived_name("scale", spec),
        b0: spec.b0.clone(),
        rule: TermRule::Explicit(terms),
    })
}

/// Least positive `c` with `c * x` and `c * y` both integers: `L / g`, where
/// `L` is the lcm of the two denominators and `g` the gcd of `x L` and
/// `y L`. Returns 1 when both are zero.
pub fn least_clearing_scalar(x: &Rational, y: &Rational) -> Rational {
    let l = x.denom().lcm(y.denom());
    let xi = x.numer() * (&l / x.denom());
    let yi = y.numer() * (&l / y.denom());
    let g = xi.gcd(&yi);
    if g.is_zero() {
        return Rational::one();
    }
    Rational::new(l, g.abs())
}

/// Rescales terms `1..=depth` with the least positive scalars that make
/// every `a_n` and `b_n` an integer, choosing `c_1, c_2, ...` in order.
pub fn clear_denominators(spec: &CFSpec, depth: usize) -> Result<CFSpec, TransformError> {
    Ok(clear_denominators_with_scalars(spec, depth)?.0)
}

/// [`clear_denominators`] together with the scalars it chose.
pub fn clear_denominators_with_scalars(
    spec: &CFSpec,
    depth: usize,
) -> Result<(CFSpec, Vec<Rational>), TransformError> {
    let mut prev = Rational::one();
    let mut scalars = Vec::with_capacity(depth);
    let mut terms = Vec::with_capacity(depth);
    for n in 1..=depth {
        let t = spec.term_at(n)?;
        let a = &prev * &t.a;
        let c = least_clearing_scalar(&a, &t.b);
        let term = Term::new(&c * a, &c * &t.b);
        debug_assert!(term.a.is_integer() && term.b.is_integer());
        terms.push(term);
        scalars.push(c.clone());
        prev = c;
    }
    let cleared = CFSpec {
        name: derived_name("clear", spec),
        b0: spec.b0.clone(),
        rule: TermRule::Explicit(terms),
    };
    Ok((cleared, scalars))
}

/// True when every term up to `depth` has integer `a_n`, `b_n`.
pub fn has_integer_terms(spec: &CFSpec, depth: usize) -> Result<bool, CfError> {
    Ok(spec.terms(depth)?.iter().all(|t| t.a.is_integer() && t.b.is_integer()))
}
