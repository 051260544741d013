//! Recognition of simple singularities from corank, Milnor number and the
//! factor pattern of the cubic term.

use localstd_core::{MonomialOrder, Poly, Scalar};
use localstd_engines::Options;
use localstd_invariants::milnor_local;

use crate::class::SingularityClass;
use crate::hessian::{hessian_at_origin, kernel};
use crate::LabError;

/// Distinct linear factors of a binary cubic over an algebraic closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicRoots {
    Zero,
    Distinct,
    Double,
    Triple,
}

/// Factor pattern of `a u^3 + b u^2 v + c u v^2 + d v^3`.
pub fn binary_cubic_roots<C: Scalar>(a: &C, b: &C, c: &C, d: &C) -> CubicRoots {
    if a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero() {
        return CubicRoots::Zero;
    }
    let k = |n: i64| C::from_int(n);
    let disc = b.mul_ref(b).mul_ref(c).mul_ref(c)
        - k(4).mul_ref(a).mul_ref(c).mul_ref(c).mul_ref(c)
        - k(4).mul_ref(b).mul_ref(b).mul_ref(b).mul_ref(d)
        - k(27).mul_ref(a).mul_ref(a).mul_ref(d).mul_ref(d)
        + k(18).mul_ref(a).mul_ref(b).mul_ref(c).mul_ref(d);
    if !disc.is_zero() {
        return CubicRoots::Distinct;
    }
    // The Hessian covariant vanishes exactly on cubes.
    let h0 = b.mul_ref(b) - k(3).mul_ref(a).mul_ref(c);
    let h1 = b.mul_ref(c) - k(9).mul_ref(a).mul_ref(d);
    let h2 = c.mul_ref(c) - k(3).mul_ref(b).mul_ref(d);
    if h0.is_zero() && h1.is_zero() && h2.is_zero() {
        CubicRoots::Triple
    } else {
        CubicRoots::Double
    }
}

/// Cubic part restricted to the plane spanned by `k1`, `k2`, as the four
/// coefficients of `u^3, u^2 v, u v^2, v^3`.
fn restricted_cubic<C: Scalar>(cubic: &Poly<C>, k1: &[C], k2: &[C]) -> [C; 4] {
    let at = |s: i64, t: i64| {
        let p: Vec<C> = k1
            .iter()
            .zip(k2)
            .map(|(x, y)| x.mul_ref(&C::from_int(s)).add_ref(&y.mul_ref(&C::from_int(t))))
            .collect();
        cubic.evaluate(&p)
    };
    let a = at(1, 0);
    let d = at(0, 1);
    let p = at(1, 1).sub_ref(&a).sub_ref(&d);
    let m = at(1, -1).sub_ref(&a).add_ref(&d);
    let half = C::one().div_ref(&C::from_int(2));
    let b = p.sub_ref(&m).mul_ref(&half);
    let c = p.add_ref(&m).mul_ref(&half);
    [a, b, c, d]
}

/// Classification once the Milnor number at the origin is known.
pub fn classify_with_mu<C: Scalar>(f: &Poly<C>, mu: usize) -> Option<SingularityClass> {
    if mu == 0 || !f.constant_term().is_zero() {
        return None;
    }
    let hess = hessian_at_origin(f);
    let ker = kernel(&hess);
    let mu = mu as u32;
    match ker.len() {
        0 | 1 => Some(SingularityClass::a(mu)),
        2 => {
            let [a, b, c, d] = restricted_cubic(&f.homogeneous_part(3), &ker[0], &ker[1]);
            match binary_cubic_roots(&a, &b, &c, &d) {
                CubicRoots::Zero => None,
                CubicRoots::Distinct | CubicRoots::Double => (mu >= 4).then(|| SingularityClass::d(mu)),
                CubicRoots::Triple => (6..=8).contains(&mu).then(|| SingularityClass::e(mu)),
            }
        }
        _ => None,
    }
}

/// Simple class of the germ of `f` at the origin, or `None` when the origin
/// is a smooth point, not on the hypersurface, or not simple.
pub fn classify_simple<C: Scalar>(f: &Poly<C>) -> Result<Option<SingularityClass>, LabError> {
    if !f.is_numeric() {
        return Err(LabError::HasParameters);
    }
    if !f.constant_term().is_zero() || f.terms().iter().any(|(m, _)| m.degree() == 1) {
        return Ok(None);
    }
    let mu = milnor_local(f, &MonomialOrder::neg_grevlex(), &Options::default())?.dimension;
    Ok(classify_with_mu(f, mu))
}
