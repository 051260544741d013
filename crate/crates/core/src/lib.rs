//! Exact multivariate polynomials for standard basis computations.
//!
//! Polynomials are generic over a [`Scalar`] coefficient field. The common
//! instances are plain rationals, Gaussian rationals and rational functions in
//! symbolic parameters; aliases for each are exported below.

mod ctx;
mod error;
mod gauss;
mod intpoly;
mod monomial;
mod order;
mod param;
mod poly;
mod scalar;

pub use ctx::VarCtx;
pub use error::CoreError;
pub use gauss::GaussRational;
pub use intpoly::IntPoly;
pub use monomial::Monomial;
pub use order::{BaseOrder, Locality, MonomialOrder};
pub use param::ParamCoeff;
pub use poly::Poly;
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type QPoly = Poly<BigRational>;
pub type GaussPoly = Poly<GaussRational>;
pub type ParamPoly = Poly<ParamCoeff>;

/// Rational `n / d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
