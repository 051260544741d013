mod support;

use localstd_core::MonomialOrder;
use support::macaulay::{default_bound, quotient_dimension};
use support::{jacobian, q, tyurina_gens};

fn dim(gens: &[localstd_core::QPoly]) -> Option<usize> {
    let arity = gens[0].arity();
    quotient_dimension(gens, arity, default_bound(gens, arity))
}

#[test]
fn monomial_ideals() {
    let g = MonomialOrder::grevlex();
    assert_eq!(dim(&[q(g.clone(), &[(1, &[2, 0])]), q(g.clone(), &[(1, &[0, 3])])]), Some(6));
    assert_eq!(dim(&[q(g.clone(), &[(1, &[1, 1])])]), None);
    assert_eq!(dim(&[q(g, &[(1, &[0, 0])])]), Some(0));
}

#[test]
fn known_curve_values() {
    let f = q(MonomialOrder::grevlex(), &[(1, &[5, 0]), (1, &[0, 5]), (1, &[2, 2])]);
    assert_eq!(dim(&jacobian(&f)), Some(16));
    assert_eq!(dim(&tyurina_gens(&f)), Some(10));
    let cusp = q(MonomialOrder::grevlex(), &[(1, &[3, 0]), (1, &[0, 4]), (1, &[1, 2])]);
    assert_eq!(dim(&jacobian(&cusp)), Some(6));
    assert_eq!(dim(&tyurina_gens(&cusp)), Some(4));
}

#[test]
fn smooth_cubic_curve_has_two_critical_points() {
    // y^2 - x^3 + 3x^2 - 2x
    let f = q(MonomialOrder::grevlex(), &[(1, &[0, 2]), (-1, &[3, 0]), (3, &[2, 0]), (-2, &[1, 0])]);
    assert_eq!(dim(&jacobian(&f)), Some(2));
    assert_eq!(dim(&tyurina_gens(&f)), Some(0));
}

#[test]
fn non_isolated_surface() {
    let f = q(MonomialOrder::grevlex(), &[(1, &[2, 0, 2]), (1, &[0, 2, 2]), (1, &[2, 2, 0])]);
    let gens = jacobian(&f);
    assert_eq!(quotient_dimension(&gens, 3, 12), None);
}
