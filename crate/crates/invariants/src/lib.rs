//! Milnor and Tyurina numbers: local dimensions via standard bases, global
//! ones via Groebner bases, and the fused global-then-local pipelines.

use std::fmt;

use localstd_core::{IntPoly, Locality, Monomial, MonomialOrder, Poly, Scalar};
use localstd_engines::{buchberger_in, standard_basis_in, standard_monomials, EngineError, Options, PolySet, Session};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Jacobian,
    Tyurina,
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::Jacobian => "jacobian",
            IdealKind::Tyurina => "tyurina",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("your Short Monomial Order should be {}", if *.expected == Locality::Local { "LOCAL" } else { "GLOBAL" })]
    WrongOrder { expected: Locality, found: Locality },
    #[error("the monomial order is neither global nor local")]
    MixedOrder,
    #[error("{}", not_isolated_message(*.kind, *.locality))]
    NotIsolated { kind: IdealKind, locality: Locality },
    #[error("step budget of {limit} reduction steps exhausted")]
    StepBudget { limit: u64 },
    #[error("no standard monomial may reach the degree bound {bound}")]
    BoundTooSmall { bound: u32 },
    #[error(transparent)]
    Engine(EngineError),
}

fn not_isolated_message(kind: IdealKind, locality: Locality) -> &'static str {
    match (kind, locality) {
        (IdealKind::Jacobian, Locality::Local) => "the given critical point is not isolated",
        (IdealKind::Tyurina, Locality::Local) => "the given singular point is not isolated",
        (IdealKind::Jacobian, _) => "there are non isolated critical points",
        (IdealKind::Tyurina, _) => "there are non isolated singular points",
    }
}

impl From<EngineError> for InvariantError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::OrderClass { expected, found } => InvariantError::WrongOrder { expected, found },
            EngineError::MixedOrder => InvariantError::MixedOrder,
            EngineError::StepBudget { limit } => InvariantError::StepBudget { limit },
            other => InvariantError::Engine(other),
        }
    }
}

/// Outcome of one pipeline run.
#[derive(Clone, Debug)]
pub struct InvariantReport<C> {
    pub ideal: IdealKind,
    pub locality: Locality,
    pub order: MonomialOrder,
    pub basis: PolySet<C>,
    pub leading: Vec<Monomial>,
    /// Standard monomials in increasing order.
    pub quotient_basis: Vec<Monomial>,
    pub dimension: usize,
    /// Parameter polynomials assumed nonzero, primitive and sign-normalised.
    pub assumptions: Vec<IntPoly>,
    pub steps: u64,
}

#[derive(Clone, Debug)]
pub struct FusedReport<C> {
    pub global: InvariantReport<C>,
    pub local: InvariantReport<C>,
}

/// Nonzero partial derivatives of `f`, in variable order.
pub fn jacobian_ideal<C: Scalar>(f: &Poly<C>) -> PolySet<C> {
    let parts = (0..f.arity()).map(|i| f.partial(i).expect("index in range"));
    PolySet::new(f.arity(), f.order().clone(), parts).expect("same arity")
}

/// `f` followed by its nonzero partial derivatives.
pub fn tyurina_ideal<C: Scalar>(f: &Poly<C>) -> PolySet<C> {
    let mut set = PolySet::new(f.arity(), f.order().clone(), [f.clone()]).expect("same arity");
    for p in jacobian_ideal(f).into_elements() {
        set.push(p);
    }
    set
}

pub fn ideal_of<C: Scalar>(f: &Poly<C>, kind: IdealKind) -> PolySet<C> {
    match kind {
        IdealKind::Jacobian => jacobian_ideal(f),
        IdealKind::Tyurina => tyurina_ideal(f),
    }
}

/// Every variable has a pure power among `leading`, or `leading` contains 1.
pub fn is_zero_dimensional(leading: &[Monomial], arity: usize) -> bool {
    if leading.iter().any(|m| m.is_one()) {
        return true;
    }
    (0..arity).all(|i| leading.iter().any(|m| m.pure_power_var() == Some(i)))
}

/// `arity` times the largest total degree among `leading`.
pub fn degree_bound(leading: &[Monomial], arity: usize) -> u32 {
    arity as u32 * leading.iter().map(|m| m.degree()).max().unwrap_or(0)
}

/// Monomials outside the leading ideal, in increasing order under `order`.
pub fn quotient_basis(leading: &[Monomial], arity: usize, order: &MonomialOrder) -> Result<Vec<Monomial>, InvariantError> {
    let bound = degree_bound(leading, arity);
    let mut out = standard_monomials(leading, arity).ok_or(InvariantError::BoundTooSmall { bound })?;
    if out.iter().any(|m| m.degree() >= bound && bound > 0) {
        return Err(InvariantError::BoundTooSmall { bound });
    }
    out.sort_by(|a, b| order.compare(a, b));
    Ok(out)
}

fn require(order: &MonomialOrder, arity: usize, expected: Locality) -> Result<(), InvariantError> {
    match order.classify(arity) {
        Locality::Mixed => Err(InvariantError::MixedOrder),
        found if found == expected => Ok(()),
        found => Err(InvariantError::WrongOrder { expected, found }),
    }
}

fn report<C: Scalar>(
    kind: IdealKind,
    locality: Locality,
    basis: PolySet<C>,
    session: Session,
) -> Result<InvariantReport<C>, InvariantError> {
    let arity = basis.arity();
    let leading = basis.leading_monomials();
    if !is_zero_dimensional(&leading, arity) {
        return Err(InvariantError::NotIsolated { kind, locality });
    }
    let order = basis.order().clone();
    let quotient_basis = quotient_basis(&leading, arity, &order)?;
    Ok(InvariantReport {
        ideal: kind,
        locality,
        dimension: quotient_basis.len(),
        quotient_basis,
        leading,
        order,
        basis,
        steps: session.steps(),
        assumptions: session.into_assumptions(),
    })
}

fn run<C: Scalar>(
    f: &Poly<C>,
    order: &MonomialOrder,
    kind: IdealKind,
    locality: Locality,
    opts: &Options,
) -> Result<InvariantReport<C>, InvariantError> {
    require(order, f.arity(), locality)?;
    let f = f.with_order(order);
    let gens = ideal_of(&f, kind);
    let mut session = Session::new(opts.step_budget);
    let basis = match locality {
        Locality::Local => standard_basis_in(&gens, opts, &mut session)?,
        _ => buchberger_in(&gens, opts, &mut session)?,
    };
    report(kind, locality, basis, session)
}

/// Local Milnor number at the origin.
pub fn milnor_local<C: Scalar>(f: &Poly<C>, order: &MonomialOrder, opts: &Options) -> Result<InvariantReport<C>, InvariantError> {
    run(f, order, IdealKind::Jacobian, Locality::Local, opts)
}

/// Local Tyurina number at the origin.
pub fn tyurina_local<C: Scalar>(f: &Poly<C>, order: &MonomialOrder, opts: &Options) -> Result<InvariantReport<C>, InvariantError> {
    run(f, order, IdealKind::Tyurina, Locality::Local, opts)
}

/// Total Milnor number over all critical points.
pub fn milnor_global<C: Scalar>(f: &Poly<C>, order: &MonomialOrder, opts: &Options) -> Result<InvariantReport<C>, InvariantError> {
    run(f, order, IdealKind::Jacobian, Locality::Global, opts)
}

/// Total Tyurina number over all singular points.
pub fn tyurina_global<C: Scalar>(f: &Poly<C>, order: &MonomialOrder, opts: &Options) -> Result<InvariantReport<C>, InvariantError> {
    run(f, order, IdealKind::Tyurina, Locality::Global, opts)
}

fn fused<C: Scalar>(
    f: &Poly<C>,
    local: &MonomialOrder,
    global: &MonomialOrder,
    kind: IdealKind,
    opts: &Options,
) -> Result<FusedReport<C>, InvariantError> {
    require(local, f.arity(), Locality::Local)?;
    let g = run(f, global, kind, Locality::Global, opts)?;
    let seeds = g.basis.elements().iter().map(|p| p.with_order(local));
    let seeds = PolySet::new(f.arity(), local.clone(), seeds)?;
    let mut session = Session::new(opts.step_budget.saturating_sub(g.steps));
    let basis = standard_basis_in(&seeds, opts, &mut session)?;
    let mut l = report(kind, Locality::Local, basis, session)?;
    let mut assumptions = g.assumptions.clone();
    for a in l.assumptions.drain(..) {
        if !assumptions.contains(&a) {
            assumptions.push(a);
        }
    }
    l.assumptions = assumptions;
    Ok(FusedReport { global: g, local: l })
}

/// Global Milnor data, then the local standard basis computed from the
/// global Groebner basis.
pub fn milnor_fused<C: Scalar>(
    f: &Poly<C>,
    local: &MonomialOrder,
    global: &MonomialOrder,
    opts: &Options,
) -> Result<FusedReport<C>, InvariantError> {
    fused(f, local, global, IdealKind::Jacobian, opts)
}

/// Tyurina analogue of [`milnor_fused`].
pub fn tyurina_fused<C: Scalar>(
    f: &Poly<C>,
    local: &MonomialOrder,
    global: &MonomialOrder,
    opts: &Options,
) -> Result<FusedReport<C>, InvariantError> {
    fused(f, local, global, IdealKind::Tyurina, opts)
}

/// Leading coefficient and monomial of each basis element, in basis order.
pub fn leading_coefficients<C: Scalar>(report: &InvariantReport<C>) -> Vec<(C, Monomial)> {
    report
        .basis
        .elements()
        .iter()
        .map(|p| {
            let (m, c) = p.leading_term().expect("nonzero");
            (c.clone(), m.clone())
        })
        .collect()
}

/// `f(x + p)`: moves the point `p` to the origin.
pub fn translate<C: Scalar>(f: &Poly<C>, point: &[C]) -> Poly<C> {
    assert_eq!(point.len(), f.arity(), "point arity");
    let images: Vec<Option<Poly<C>>> = point
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_zero() {
                None
            } else {
                let x = Poly::var(f.arity(), f.order().clone(), i);
                Some(x.add_poly(&Poly::constant(f.arity(), f.order().clone(), c.clone())))
            }
        })
        .collect();
    f.substitute(&images).expect("arity checked")
}
