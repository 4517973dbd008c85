use std::fmt;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::cf::{CFSpec, Term, TermRule};
use crate::generate::{sequences_to_cf, SequencePair};
use crate::numerics::{rat, Rational};
use crate::transforms::{clear_denominators, equivalence_scale, negate, sign_flip, ScalarSequence};

#[derive(Debug, Default)]
pub(super) struct Summary {
    seed: u64,
    cases: usize,
    depth: usize,
    checks: usize,
    pub(super) failures: usize,
    first_failure: Option<String>,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seed {} cases {} depth {}: {} checks, {} failures",
            self.seed, self.cases, self.depth, self.checks, self.failures
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "\nfirst failure: {msg}")?;
        }
        Ok(())
    }
}

impl Summary {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }
}

fn random_rational(rng: &mut StdRng, nonzero: bool) -> Rational {
    loop {
        let r = rat(rng.random_range(-12..=12), rng.random_range(1..=6));
        if !nonzero || !r.is_zero() {
            return r;
        }
    }
}

fn random_spec(rng: &mut StdRng, depth: usize) -> CFSpec {
    let terms = (0..depth)
        .map(|_| Term::new(random_rational(rng, true), random_rational(rng, false)))
        .collect();
    CFSpec::new(random_rational(rng, false), TermRule::Explicit(terms))
}

/// Randomized checks of the determinant identity, the transforms and the
/// sequence inversion. Same seed, same specs.
pub(super) fn run(seed: u64, cases: usize, depth: usize) -> Summary {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut summary = Summary { seed, cases, depth, ..Summary::default() };
    for case in 0..cases {
        let spec = random_spec(&mut rng, depth);
        let scalars = ScalarSequence::new((0..depth).map(|_| random_rational(&mut rng, true)).collect());
        let states = spec.states(depth).expect("explicit spec covers depth");
        for s in states.iter().skip(1) {
            summary.record(s.determinant() == s.expected_determinant(), || {
                format!("case {case}: determinant identity at n = {}", s.index())
            });
        }
        let negated = negate(&spec).states(depth).expect("depth");
        let flipped = sign_flip(&spec).states(depth).expect("depth");
        let scaled = equivalence_scale(&spec, &scalars, depth).expect("nonzero scalars");
        let scaled = scaled.states(depth).expect("depth");
        let cleared = clear_denominators(&spec, depth).expect("depth").states(depth).expect("depth");
        for n in 0..=depth {
            let Ok(x) = states[n].convergent() else { continue };
            let same = |other: &[crate::cf::ConvergentState]| other[n].convergent().ok() == Some(x.clone());
            summary.record(negated[n].convergent().ok() == Some(-&x), || {
                format!("case {case}: negate at n = {n}")
            });
            summary.record(same(&flipped), || format!("case {case}: sign_flip at n = {n}"));
            summary.record(same(&scaled), || format!("case {case}: scale at n = {n}"));
            summary.record(same(&cleared), || format!("case {case}: clear at n = {n}"));
        }
        let seqs = SequencePair::from_spec(&spec, depth).expect("depth");
        let rebuilt = sequences_to_cf(&seqs).map(|s| s.terms(depth));
        summary.record(
            matches!(rebuilt, Ok(Ok(ref t)) if *t == spec.terms(depth).expect("depth")),
            || format!("case {case}: sequence inversion"),
        );
    }
    summary
}
