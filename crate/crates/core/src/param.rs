//! Rational functions in the symbolic parameters.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::intpoly::IntPoly;
use crate::scalar::Scalar;

/// A reduced fraction `num / den` of integer polynomials in the parameters.
///
/// Canonical form: `den` is nonzero, `gcd(num, den) = 1` and the leading
/// coefficient of `den` (graded reverse lex on parameters) is positive. Zero
/// is stored as `0 / 1`. Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamCoeff {
    num: IntPoly,
    den: IntPoly,
}

impl ParamCoeff {
    /// Builds and reduces `num / den`. Panics when `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return ParamCoeff { num, den };
        }
        let g = if den.is_constant() || num.is_constant() {
            IntPoly::constant(num.int_content().gcd(&den.int_content()))
        } else {
            IntPoly::gcd(&num, &den)
        };
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        ParamCoeff { num, den }
    }

    pub fn from_poly(num: IntPoly) -> Self {
        ParamCoeff { num, den: IntPoly::one() }
    }

    /// The parameter with index `i`.
    pub fn param(i: usize) -> Self {
        Self::from_poly(IntPoly::var(i))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    /// The plain rational value, when the coefficient is parameter free.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    /// Substitute `vals[i]` for parameter `i`; `None` when the denominator
    /// vanishes.
    pub fn eval<C: Scalar>(&self, vals: &[C]) -> Option<C> {
        let d = self.den.eval(vals);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(vals) / d)
    }

    pub fn render(&self, names: &[String]) -> String {
        let n = self.num.render(names);
        if self.den.is_one() {
            return n;
        }
        let n = if self.num.len() > 1 { format!("({})", n) } else { n };
        let d = self.den.render(names);
        let d = if self.den.len() > 1 || d.contains('*') {
            format!("({})", d)
        } else {
            d
        };
        format!("{}/{}", n, d)
    }

    /// Primitive, sign-normalised factors whose non-vanishing this nonzero
    /// value encodes: the numerator and the denominator when non-constant.
    fn factors(&self) -> Vec<IntPoly> {
        let mut out = Vec::new();
        for p in [&self.num, &self.den] {
            if !p.is_constant() {
                let c = p.int_content();
                out.push(p.div_int(&c).sign_normalized().0);
            }
        }
        out
    }
}

impl Zero for ParamCoeff {
    fn zero() -> Self {
        ParamCoeff { num: IntPoly::zero(), den: IntPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ParamCoeff {
    fn one() -> Self {
        ParamCoeff { num: IntPoly::one(), den: IntPoly::one() }
    }
}

impl Add for ParamCoeff {
    type Output = ParamCoeff;
    fn add(self, rhs: ParamCoeff) -> ParamCoeff {
        self.add_ref(&rhs)
    }
}

impl Sub for ParamCoeff {
    type Output = ParamCoeff;
    fn sub(self, rhs: ParamCoeff) -> ParamCoeff {
        self.sub_ref(&rhs)
    }
}

impl Mul for ParamCoeff {
    type Output = ParamCoeff;
    fn mul(self, rhs: ParamCoeff) -> ParamCoeff {
        self.mul_ref(&rhs)
    }
}

impl Div for ParamCoeff {
    type Output = ParamCoeff;
    fn div(self, rhs: ParamCoeff) -> ParamCoeff {
        self.div_ref(&rhs)
    }
}

impl Neg for ParamCoeff {
    type Output = ParamCoeff;
    fn neg(self) -> ParamCoeff {
        ParamCoeff { num: -self.num, den: self.den }
    }
}

impl Scalar for ParamCoeff {
    fn from_rational(q: BigRational) -> Self {
        let (n, d) = (q.numer().clone(), q.denom().clone());
        ParamCoeff { num: IntPoly::constant(n), den: IntPoly::constant(d) }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return ParamCoeff::new(&self.num + &other.num, self.den.clone());
        }
        ParamCoeff::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return ParamCoeff { num: &self.num * &other.num, den: IntPoly::one() };
        }
        ParamCoeff::new(&self.num * &other.num, &self.den * &other.den)
    }

    fn div_ref(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero coefficient");
        ParamCoeff::new(&self.num * &other.den, &self.den * &other.num)
    }

    fn is_numeric(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn content<'a, I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut g = IntPoly::zero();
        let mut l = IntPoly::one();
        for c in coeffs {
            g = IntPoly::gcd(&g, &c.num);
            if !c.den.is_one() {
                let common = IntPoly::gcd(&l, &c.den);
                l = (&l * &c.den).div_exact(&common).expect("gcd divides");
            }
        }
        if g.is_zero() {
            return Self::one();
        }
        ParamCoeff::new(g, l)
    }

    fn conditions(&self) -> Vec<IntPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        self.factors()
    }

    fn render(&self, params: &[String]) -> String {
        ParamCoeff::render(self, params)
    }

    fn is_atomic(&self, params: &[String]) -> bool {
        let _ = params;
        !(self.den.is_one() && self.num.len() > 1)
    }
}

impl fmt::Debug for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl fmt::Display for ParamCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl From<i64> for ParamCoeff {
    fn from(n: i64) -> Self {
        ParamCoeff::from_poly(IntPoly::constant(BigInt::from(n)))
    }
}

impl From<BigRational> for ParamCoeff {
    fn from(q: BigRational) -> Self {
        <ParamCoeff as Scalar>::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> ParamCoeff {
        ParamCoeff::param(0)
    }

    #[test]
    fn lowest_terms_and_sign() {
        let a = ParamCoeff::new(
            &IntPoly::var(0) * &IntPoly::var(1),
            -(&IntPoly::var(0) * &IntPoly::constant(BigInt::from(2))),
        );
        assert_eq!(a.numer(), &-IntPoly::var(1));
        assert_eq!(a.denom(), &IntPoly::constant(BigInt::from(2)));
    }

    #[test]
    fn fraction_arithmetic() {
        let half = ParamCoeff::from(BigRational::new(1.into(), 2.into()));
        let third = ParamCoeff::from(BigRational::new(1.into(), 3.into()));
        let sum = half * t() + third * t();
        assert_eq!(sum, ParamCoeff::from(BigRational::new(5.into(), 6.into())) * t());
        let one_minus = ParamCoeff::one() - t();
        let r = one_minus.clone() / (ParamCoeff::one() - t() * t());
        assert_eq!(r * (ParamCoeff::one() + t()), ParamCoeff::one());
    }
}
