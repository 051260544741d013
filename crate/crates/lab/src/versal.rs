//! Versal deformations spanned by a Tyurina quotient basis.

use localstd_core::{IntPoly, Monomial, MonomialOrder, ParamCoeff, ParamPoly, QPoly};
use localstd_engines::Options;
use localstd_invariants::tyurina_local;

use crate::LabError;

#[derive(Clone, Debug)]
pub struct DeformationFamily {
    pub base: QPoly,
    /// Tyurina quotient basis, increasing under the order used.
    pub basis: Vec<Monomial>,
    /// `lambda{i}` multiplies `basis[tau - 1 - i]`, so `lambda0` is the
    /// constant term.
    pub params: Vec<String>,
    pub family: ParamPoly,
}

impl DeformationFamily {
    pub fn tau(&self) -> usize {
        self.basis.len()
    }
}

/// `f + sum lambda_i m_i` over the local Tyurina basis of `f`.
pub fn build_versal_family(f: &QPoly, order: &MonomialOrder, opts: &Options) -> Result<DeformationFamily, LabError> {
    let report = tyurina_local(f, order, opts)?;
    let basis = report.quotient_basis;
    let tau = basis.len();
    let params: Vec<String> = (0..tau).map(|i| format!("lambda{}", i)).collect();
    let base = f.with_order(order);
    let mut family = base.to_param();
    for i in 0..tau {
        let m = basis[tau - 1 - i].clone();
        let c = ParamCoeff::from_poly(IntPoly::var(i));
        family = family.add_poly(&ParamPoly::term(order.clone(), m, c));
    }
    Ok(DeformationFamily { base, basis, params, family })
}
