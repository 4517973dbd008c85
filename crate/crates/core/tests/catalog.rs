use gcf_lab::catalog::{
    catalog_entries, catalog_get, oracle_convergent, verify_entry, CatalogError, Status,
};
use gcf_lab::cf::{Backend, CFSpec};
use gcf_lab::numerics::Rational;
use gcf_lab::transforms::{negate, sign_flip};

#[test]
fn oracles_match_recurrences() {
    for (name, max) in [("e_half", 50), ("e_minus_2", 60)] {
        let spec = &catalog_get(name).unwrap().spec;
        let states = spec.states(max).unwrap();
        for n in 1..=max {
            let (a, b) = oracle_convergent(name, n).unwrap();
            assert_eq!(states[n].numerator(), &Rational::from_integer(a), "{name} A_{n}");
            assert_eq!(states[n].denominator(), &Rational::from_integer(b), "{name} B_{n}");
        }
    }
    assert!(matches!(oracle_convergent("brouncker_pi_4", 3), Err(CatalogError::NoOracle(_))));
}

#[test]
fn e_half_convergents_bracket_the_limit() {
    let spec = &catalog_get("e_half").unwrap().spec;
    let x: Vec<Rational> = (1..=30).map(|n| spec.convergent_at(n).unwrap()).collect();
    // Positive terms: odd and even convergents close in monotonically.
    for w in x.windows(3) {
        let (lo, hi) = if w[0] < w[1] { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
        assert!(lo < &w[2] && &w[2] < hi);
    }
}

fn assert_same_fraction(a: &CFSpec, b: &CFSpec, what: &str) {
    assert_eq!(a.b0, b.b0, "{what}");
    for n in [1usize, 2, 3, 4, 5, 6, 99, 100] {
        assert_eq!(a.term_at(n).unwrap(), b.term_at(n).unwrap(), "{what} term {n}");
    }
}

#[test]
fn derived_entries_are_transforms_of_their_sources() {
    let spec = |name: &str| catalog_get(name).unwrap().spec.clone();
    let form1 = spec("pi_plus_2_half_form1");
    assert_same_fraction(&negate(&spec("lu_wei_e")), &spec("minus_e"), "minus_e");
    assert_same_fraction(&negate(&spec("e_half")), &spec("minus_e_half"), "minus_e_half");
    assert_same_fraction(&negate(&spec("e_minus_2")), &spec("two_minus_e"), "two_minus_e");
    assert_same_fraction(&sign_flip(&spec("e_minus_2")), &spec("e_minus_2_alt"), "e_minus_2_alt");
    assert_same_fraction(&negate(&form1), &spec("pi_plus_2_half_form2"), "form2");
    assert_same_fraction(&sign_flip(&form1), &spec("pi_plus_2_half_form3"), "form3");
    assert_same_fraction(&negate(&sign_flip(&form1)), &spec("pi_plus_2_half_form4"), "form4");
}

#[test]
fn pi_plus_two_forms_keep_their_sign_relations() {
    let spec = |name: &str| catalog_get(name).unwrap().spec.clone();
    let forms: Vec<CFSpec> = (1..=4).map(|k| spec(&format!("pi_plus_2_half_form{k}"))).collect();
    for n in 0..=60 {
        let x: Vec<Rational> = forms.iter().map(|f| f.convergent_at(n).unwrap()).collect();
        assert_eq!(x[1], -&x[0]);
        assert_eq!(x[2], x[0]);
        assert_eq!(x[3], -&x[0]);
    }
}

#[test]
fn every_proven_entry_verifies() {
    for entry in catalog_entries().iter().filter(|e| e.status == Status::Theorem) {
        let depth = if entry.name.starts_with("pi_thirds") { 2000 } else { 200 };
        let digits = if entry.name.starts_with("pi_thirds") { 3 } else { 20 };
        let backend = Backend::Approx { precision: 256 };
        let report = verify_entry(&entry.name, depth, backend, digits).unwrap();
        assert!(report.passed, "{}: {} digits", entry.name, report.digits_matched);
    }
}

#[test]
fn printed_variants_miss_their_targets() {
    for name in ["minus_e_half_printed", "pi_plus_2_half_form2_printed", "pi_plus_2_half_form4_printed"] {
        let report = verify_entry(name, 200, Backend::Exact, 5).unwrap();
        assert!(report.digits_matched <= 1, "{name}: {}", report.digits_matched);
        assert!(!report.passed && !report.is_hard_failure());
        assert!(!report.errata.is_empty());
    }
}

#[test]
fn catalog_specs_round_trip_through_json() {
    for entry in catalog_entries() {
        let back = CFSpec::from_json(&entry.spec.to_json()).unwrap();
        assert_eq!(back, entry.spec, "{}", entry.name);
    }
}
