use gcf_lab::catalog::catalog_entries;
use gcf_lab::cf::{CFSpec, Term, TermRule};
use gcf_lab::numerics::{rat, Rational};
use gcf_lab::transforms::{
    clear_denominators, equivalence_scale, has_integer_terms, negate, sign_flip, ScalarSequence,
    TransformError,
};
use num_traits::Zero;
use proptest::prelude::*;

const DEPTH: usize = 20;

fn rational() -> impl Strategy<Value = Rational> {
    (-15i64..=15, 1i64..=8).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn explicit_spec() -> impl Strategy<Value = CFSpec> {
    (rational(), prop::collection::vec((nonzero_rational(), rational()), DEPTH)).prop_map(
        |(b0, terms)| {
            let terms = terms.into_iter().map(|(a, b)| Term::new(a, b)).collect();
            CFSpec::new(b0, TermRule::Explicit(terms))
        },
    )
}

/// `(A_n, B_n)` for `n = 0..=depth`.
fn pairs(spec: &CFSpec, depth: usize) -> Vec<(Rational, Rational)> {
    spec.states(depth)
        .unwrap()
        .into_iter()
        .map(|s| (s.numerator().clone(), s.denominator().clone()))
        .collect()
}

/// Convergents as `Option`s, `None` where `B_n = 0`.
fn convergents(spec: &CFSpec, depth: usize) -> Vec<Option<Rational>> {
    spec.states(depth).unwrap().iter().map(|s| s.convergent().ok()).collect()
}

fn check_negate(spec: &CFSpec, depth: usize) {
    let neg = negate(spec);
    for (x, y) in convergents(spec, depth).into_iter().zip(convergents(&neg, depth)) {
        assert_eq!(x.map(|x| -x), y);
    }
}

fn check_sign_flip(spec: &CFSpec, depth: usize) {
    let flipped = sign_flip(spec);
    // B_n is multiplied by (-1)^(n(n+1)/2) and so is A_n.
    for (n, ((a, b), (fa, fb))) in pairs(spec, depth).into_iter().zip(pairs(&flipped, depth)).enumerate() {
        let sign = if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(fa, a * rat(sign, 1));
        assert_eq!(fb, b * rat(sign, 1));
    }
    assert_eq!(convergents(spec, depth), convergents(&flipped, depth));
}

fn check_scale(spec: &CFSpec, scalars: &ScalarSequence, depth: usize) {
    let scaled = equivalence_scale(spec, scalars, depth).unwrap();
    assert_eq!(convergents(spec, depth), convergents(&scaled, depth));
}

fn check_clear(spec: &CFSpec, depth: usize) {
    let cleared = clear_denominators(spec, depth).unwrap();
    assert!(has_integer_terms(&cleared, depth).unwrap());
    assert_eq!(convergents(spec, depth), convergents(&cleared, depth));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_specs(spec in explicit_spec(), cs in prop::collection::vec(nonzero_rational(), DEPTH)) {
        check_negate(&spec, DEPTH);
        check_sign_flip(&spec, DEPTH);
        check_scale(&spec, &ScalarSequence::new(cs), DEPTH);
        check_clear(&spec, DEPTH);
    }

    #[test]
    fn negate_and_sign_flip_are_involutions(spec in explicit_spec()) {
        let nn = negate(&negate(&spec));
        prop_assert_eq!(&nn.b0, &spec.b0);
        prop_assert_eq!(nn.terms(DEPTH).unwrap(), spec.terms(DEPTH).unwrap());
        let ff = sign_flip(&sign_flip(&spec));
        prop_assert_eq!(ff.terms(DEPTH).unwrap(), spec.terms(DEPTH).unwrap());
    }
}

#[test]
fn catalog_entries_under_every_transform() {
    let scalars = ScalarSequence::from_fn(DEPTH, |n| rat(n as i64 + 2, 3));
    for entry in catalog_entries() {
        check_negate(&entry.spec, DEPTH);
        check_sign_flip(&entry.spec, DEPTH);
        check_scale(&entry.spec, &scalars, DEPTH);
        check_clear(&entry.spec, DEPTH);
    }
}

#[test]
fn rule_shapes_survive_sign_flip() {
    // Closed-form rules stay closed-form, so terms far out are still available.
    for entry in catalog_entries() {
        let flipped = sign_flip(&entry.spec);
        assert!(flipped.rule.len().is_none(), "{}", entry.name);
        for n in [1usize, 2, 3, 4, 5, 1001, 1002] {
            let t = entry.spec.term_at(n).unwrap();
            let f = flipped.term_at(n).unwrap();
            assert_eq!(f.a, -t.a);
            assert_eq!(f.b, if n % 2 == 1 { -t.b } else { t.b });
        }
    }
}

#[test]
fn zero_scalar_is_rejected() {
    let spec = &catalog_entries()[0].spec;
    let scalars = ScalarSequence::new(vec![rat(1, 1), Rational::zero()]);
    assert!(matches!(
        equivalence_scale(spec, &scalars, 5),
        Err(TransformError::ZeroScalar { n: 2 })
    ));
}
