//! Gaussian rationals `a + b i`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{render_rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn i() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<BigRational> for GaussRational {
    fn from(re: BigRational) -> Self {
        GaussRational { re, im: BigRational::zero() }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: BigRational::zero(), im: BigRational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl Div for GaussRational {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self.div_ref(&o)
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Scalar for GaussRational {
    fn from_rational(q: BigRational) -> Self {
        GaussRational::from(q)
    }

    fn add_ref(&self, o: &Self) -> Self {
        GaussRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        GaussRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational::from(&self.re * &o.re);
        }
        GaussRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn div_ref(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "division by zero");
        if o.im.is_zero() {
            return GaussRational { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        let n = o.norm();
        let p = self.mul_ref(&o.conj());
        GaussRational { re: p.re / &n, im: p.im / n }
    }

    fn is_numeric(&self) -> bool {
        true
    }

    fn render(&self, _params: &[String]) -> String {
        if self.im.is_zero() {
            return render_rational(&self.re);
        }
        let im = if self.im.abs().is_one() {
            String::new()
        } else {
            format!("{}*", render_rational(&self.im.abs()))
        };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            format!("{}{}i", lead, im)
        } else {
            format!("{}{}{}i", render_rational(&self.re), sign, im)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
