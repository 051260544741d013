use localstd_core::{Locality, Monomial, MonomialOrder, Poly, Scalar};

use crate::error::EngineError;

/// A duplicate-free list of nonzero polynomials sharing arity and order.
#[derive(Clone, Debug)]
pub struct PolySet<C> {
    arity: usize,
    order: MonomialOrder,
    elements: Vec<Poly<C>>,
}

impl<C: Scalar> PolySet<C> {
    /// Collects `polys` under `order`, dropping zeros and repeats.
    pub fn new<I>(arity: usize, order: MonomialOrder, polys: I) -> Result<Self, EngineError>
    where
        I: IntoIterator<Item = Poly<C>>,
    {
        let mut set = PolySet { arity, order, elements: Vec::new() };
        for p in polys {
            if p.arity() != arity {
                return Err(EngineError::Incompatible);
            }
            set.push(p);
        }
        Ok(set)
    }

    /// Adds `p` unless it is zero or already present. Returns whether it was added.
    pub fn push(&mut self, p: Poly<C>) -> bool {
        if p.is_zero() {
            return false;
        }
        let p = p.with_order(&self.order);
        if self.elements.contains(&p) {
            return false;
        }
        self.elements.push(p);
        true
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn locality(&self) -> Locality {
        self.order.classify(self.arity)
    }

    pub fn elements(&self) -> &[Poly<C>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Poly<C>> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// Whether some element is a nonzero constant.
    pub fn contains_unit(&self) -> bool {
        self.elements.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }
}

impl<C: Scalar> PartialEq for PolySet<C> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.order == other.order && self.elements == other.elements
    }
}

/// Drop every element whose leading monomial is divisible by the leading
/// monomial of another; among equal leading monomials the first survives.
pub fn minimalize<C: Scalar>(polys: Vec<Poly<C>>) -> Vec<Poly<C>> {
    let lms: Vec<Monomial> = polys.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect();
    polys
        .into_iter()
        .enumerate()
        .filter(|(i, _)| {
            !lms.iter()
                .enumerate()
                .any(|(j, m)| j != *i && m.divides(&lms[*i]) && (m != &lms[*i] || j < *i))
        })
        .map(|(_, p)| p)
        .collect()
}

/// Monomials divisible by no element of `leading`, or `None` when there are
/// infinitely many. Listed in discovery order, starting from 1.
pub fn standard_monomials(leading: &[Monomial], arity: usize) -> Option<Vec<Monomial>> {
    if leading.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    if !(0..arity).all(|i| leading.iter().any(|m| m.pure_power_var() == Some(i))) {
        return None;
    }
    let one = Monomial::one(arity);
    let mut seen = std::collections::HashSet::from([one.clone()]);
    let mut out = vec![one];
    let mut k = 0;
    while k < out.len() {
        for i in 0..arity {
            let next = out[k].mul(&Monomial::var(arity, i));
            if !leading.iter().any(|l| l.divides(&next)) && seen.insert(next.clone()) {
                out.push(next);
            }
        }
        k += 1;
    }
    Some(out)
}
