//! The coefficient abstraction shared by every polynomial routine.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;

/// A field of coefficients.
///
/// Arithmetic is exact. `is_numeric` separates plain numbers from values that
/// still depend on symbolic parameters; the reduction engines use it to decide
/// between monic normalisation and content removal.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(q: BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn div_ref(&self, other: &Self) -> Self {
        self.clone() / other.clone()
    }

    /// True when the value does not involve any parameter.
    fn is_numeric(&self) -> bool;

    /// The common factor of a coefficient list, used to make a polynomial
    /// primitive when its leading coefficient is not a plain number.
    fn content<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        Self: 'a,
    {
        let _ = coeffs;
        Self::one()
    }

    /// Non-constant parameter polynomials whose vanishing would change the
    /// value's status as a nonzero element. Empty for plain numbers.
    fn conditions(&self) -> Vec<IntPoly> {
        Vec::new()
    }

    /// Render using the given parameter names.
    fn render(&self, params: &[String]) -> String;

    /// Whether `render` yields a single product that can be juxtaposed with a
    /// monomial using `*` without parentheses.
    fn is_atomic(&self, params: &[String]) -> bool {
        let s = self.render(params);
        let body = s.strip_prefix('-').unwrap_or(&s);
        !body.contains('+') && !body.contains('-')
    }
}

pub(crate) fn render_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Scalar for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn div_ref(&self, other: &Self) -> Self {
        self / other
    }

    fn is_numeric(&self) -> bool {
        true
    }

    fn render(&self, _params: &[String]) -> String {
        render_rational(self)
    }

    fn is_atomic(&self, _params: &[String]) -> bool {
        true
    }
}
