mod common;

use gcf_lab::catalog::{enclosure, reference_constant, Base};
use gcf_lab::numerics::rat_to_decimal;

#[test]
fn e_agrees_with_odd_factorial_series() {
    let (lo, hi) = common::e_enclosure(70);
    let ours = reference_constant(Base::E, 50);
    assert_eq!(rat_to_decimal(&lo, 50), ours);
    assert_eq!(rat_to_decimal(&hi, 50), ours);
}

#[test]
fn pi_agrees_with_euler_arctangents() {
    let (lo, hi) = common::pi_enclosure(70);
    let ours = reference_constant(Base::Pi, 50);
    assert_eq!(rat_to_decimal(&lo, 50), ours);
    assert_eq!(rat_to_decimal(&hi, 50), ours);
}

#[test]
fn longer_expansions_extend_shorter_ones() {
    for base in [Base::E, Base::Pi] {
        let short = reference_constant(base, 50);
        let long = reference_constant(base, 60);
        assert_eq!(long.truncate(50), short);
        assert_eq!(long.digits(), 60);
    }
}

#[test]
fn enclosures_contain_the_independent_values() {
    let (e_lo, e_hi) = common::e_enclosure(80);
    let (p_lo, p_hi) = common::pi_enclosure(80);
    let e = enclosure(Base::E, 60);
    let p = enclosure(Base::Pi, 60);
    assert!(e.lo <= e_hi && e_lo <= e.hi);
    assert!(p.lo <= p_hi && p_lo <= p.hi);
}
