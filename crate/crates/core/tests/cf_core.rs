use gcf_lab::catalog::catalog_entries;
use gcf_lab::cf::{evaluate, Backend, CFSpec, CfError, Term, TermRule};
use gcf_lab::numerics::{int, rat, Rational};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn explicit_spec(max_len: usize) -> impl Strategy<Value = CFSpec> {
    (rational(), prop::collection::vec((nonzero_rational(), rational()), 1..=max_len)).prop_map(
        |(b0, terms)| {
            let terms = terms.into_iter().map(|(a, b)| Term::new(a, b)).collect();
            CFSpec::new(b0, TermRule::Explicit(terms))
        },
    )
}

fn pow2(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(num_bigint::BigInt::from(1) << k as usize)
    } else {
        Rational::new(1.into(), num_bigint::BigInt::from(1) << (-k) as usize)
    }
}

proptest! {
    #[test]
    fn determinant_identity(spec in explicit_spec(20)) {
        for s in spec.states(spec.rule.len().unwrap()).unwrap() {
            prop_assert_eq!(s.determinant(), s.expected_determinant());
        }
    }

    #[test]
    fn consecutive_convergents_telescope(spec in explicit_spec(15)) {
        let states = spec.states(spec.rule.len().unwrap()).unwrap();
        for w in states.windows(2) {
            let (p, c) = (&w[0], &w[1]);
            if p.denominator().is_zero() || c.denominator().is_zero() {
                continue;
            }
            let lhs = c.convergent().unwrap() - p.convergent().unwrap();
            let sign = if c.index() % 2 == 1 { int(1) } else { int(-1) };
            let rhs = sign * c.numerator_product() / (c.denominator() * p.denominator());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn spec_json_round_trip(spec in explicit_spec(10)) {
        let back = CFSpec::from_json(&spec.to_json()).unwrap();
        prop_assert_eq!(back, spec);
    }
}

#[test]
fn term_rules_are_total_on_their_domain() {
    for entry in catalog_entries() {
        for n in [1usize, 2, 3, 7, 100, 12_345, 999_999, 1_000_000] {
            let t = entry.spec.term_at(n);
            assert!(t.is_ok(), "{} term {n}: {t:?}", entry.name);
        }
        assert_eq!(entry.spec.term_at(0), Err(CfError::ZeroIndex));
    }
    let short = CFSpec::new(int(0), TermRule::Explicit(vec![Term::ints(1, 1)]));
    assert_eq!(short.term_at(2), Err(CfError::IndexOutOfRule { n: 2, len: 1 }));
}

#[test]
fn backends_agree_on_catalog_entries() {
    let p = 128u32;
    let tol = pow2(8 - p as i64);
    for entry in catalog_entries() {
        for depth in [1usize, 5, 20, 100] {
            let exact = evaluate(&entry.spec, depth, Backend::Exact).unwrap();
            let approx = evaluate(&entry.spec, depth, Backend::Approx { precision: p }).unwrap();
            assert_eq!(exact.value_index, approx.value_index, "{}", entry.name);
            let x = exact.value.to_rational();
            let diff = (&x - approx.value.to_rational()).abs();
            let scale = if x.abs() > int(1) { x.abs() } else { int(1) };
            assert!(diff <= &tol * scale, "{} at depth {depth}", entry.name);
        }
    }
}

#[test]
fn convergent_sequences_match_states() {
    let spec = &catalog_entries()[0].spec;
    let (a, b) = spec.convergent_sequences(5).unwrap();
    assert_eq!(a[0], int(1));
    assert_eq!(b[0], int(0));
    for n in 0..=5 {
        assert_eq!(&a[n + 1] / &b[n + 1], spec.convergent_at(n).unwrap());
    }
}

#[test]
fn zero_depth_is_rejected() {
    let spec = &catalog_entries()[0].spec;
    assert_eq!(evaluate(spec, 0, Backend::Exact).unwrap_err(), CfError::ZeroDepth);
}
