mod common;

use capelli_core::capelli::{choose, coeff_r, ShiftFamily};
use capelli_core::coeff::int;
use capelli_core::Rat;
use num_traits::{One, Zero};

#[test]
fn closed_form_counts_partial_matchings() {
    common::assert_r_closed_form(8);
    for k in 0..=8 {
        assert!(coeff_r(k, 0).is_one());
        assert!(coeff_r(k, k / 2 + 1).is_zero());
    }
    assert_eq!(coeff_r(4, 2), int(3));
    assert_eq!(choose(6, 2), int(15));
}

#[test]
fn recurrence_in_k() {
    common::assert_r_recurrence(10);
}

#[test]
fn factorial_power_expansions() {
    common::assert_factorial_power_expansions(8);
}

#[test]
fn orthogonality() {
    common::assert_r_orthogonality(8);
}

#[test]
fn tilde_natural_is_odd_under_reversal() {
    for k in 0..=9 {
        let s = ShiftFamily::TildeNatural.sequence(k);
        let rev: Vec<Rat> = s.iter().rev().map(|x| -x).collect();
        assert_eq!(s, rev);
    }
}
