//! Sparse polynomials with terms kept in decreasing order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::CoreError;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::param::ParamCoeff;
use crate::scalar::Scalar;

/// A polynomial in a fixed number of variables.
///
/// Terms are strictly decreasing under `order` and carry no zero
/// coefficient. The order only affects presentation: equality compares the
/// underlying term sets.
#[derive(Clone, Debug)]
pub struct Poly<C> {
    arity: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> Poly<C> {
    pub fn zero(arity: usize, order: MonomialOrder) -> Self {
        Poly { arity, order, terms: Vec::new() }
    }

    pub fn constant(arity: usize, order: MonomialOrder, c: C) -> Self {
        Self::term(order, Monomial::one(arity), c)
    }

    pub fn one(arity: usize, order: MonomialOrder) -> Self {
        Self::constant(arity, order, C::one())
    }

    pub fn term(order: MonomialOrder, m: Monomial, c: C) -> Self {
        let arity = m.arity();
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly { arity, order, terms }
    }

    /// The variable with index `i`.
    pub fn var(arity: usize, order: MonomialOrder, i: usize) -> Self {
        Self::term(order, Monomial::var(arity, i), C::one())
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I>(arity: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), arity, "monomial arity");
            match acc.get_mut(&m) {
                Some(slot) => *slot = slot.add_ref(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Poly { arity, order, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The maximal term under the polynomial's order.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal term under an arbitrary order.
    pub fn leading_term_under(&self, order: &MonomialOrder) -> Result<(&Monomial, &C), CoreError> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .map(|(m, c)| (m, c))
            .ok_or(CoreError::ZeroPolynomial)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> C {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(C::zero)
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// The same polynomial presented under another order.
    pub fn with_order(&self, order: &MonomialOrder) -> Self {
        if *order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Poly { arity: self.arity, order: order.clone(), terms }
    }

    fn aligned<'a>(&self, other: &'a Self) -> std::borrow::Cow<'a, Self> {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        if self.order == other.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(&self.order))
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let other = self.aligned(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.order.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((m.clone(), if negate { -c.clone() } else { c.clone() }));
        }
        Poly { arity: self.arity, order: self.order.clone(), terms: out }
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg_poly(&self) -> Self {
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity, self.order.clone());
        }
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul_ref(k))).collect(),
        }
    }

    pub fn div_scalar(&self, k: &C) -> Self {
        assert!(!k.is_zero(), "division by zero");
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.div_ref(k))).collect(),
        }
    }

    /// Multiply by the term `k * m`; multiplicativity keeps the order intact.
    pub fn mul_term(&self, m: &Monomial, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity, self.order.clone());
        }
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.mul_ref(k))).collect(),
        }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = slot.add_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_terms(self.arity, self.order.clone(), acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.arity, self.order.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Result<Self, CoreError> {
        if i >= self.arity {
            return Err(CoreError::VariableIndex { index: i, arity: self.arity });
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                m.differentiate(i)
                    .map(|(k, dm)| (dm, c.mul_ref(&C::from_int(k as i64))))
            })
            .collect();
        Ok(Poly { arity: self.arity, order: self.order.clone(), terms })
    }

    /// Simultaneous substitution; `None` leaves a variable unchanged.
    pub fn substitute(&self, images: &[Option<Poly<C>>]) -> Result<Self, CoreError> {
        if images.len() != self.arity {
            return Err(CoreError::ArityMismatch { expected: self.arity, found: images.len() });
        }
        for p in images.iter().flatten() {
            if p.arity != self.arity {
                return Err(CoreError::ArityMismatch { expected: self.arity, found: p.arity });
            }
        }
        let mut powers: Vec<Vec<Poly<C>>> = (0..self.arity)
            .map(|_| vec![Self::one(self.arity, self.order.clone())])
            .collect();
        let mut out = Self::zero(self.arity, self.order.clone());
        for (m, c) in &self.terms {
            let mut kept = vec![0u32; self.arity];
            let mut t = Self::one(self.arity, self.order.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    None => kept[i] = e,
                    Some(img) => {
                        while powers[i].len() <= e as usize {
                            let next = powers[i].last().expect("seeded").mul_poly(img);
                            powers[i].push(next);
                        }
                        t = t.mul_poly(&powers[i][e as usize]);
                    }
                }
            }
            out = out.add_poly(&t.mul_term(&Monomial::new(kept), c));
        }
        Ok(out)
    }

    /// Apply a coefficient map, dropping terms that become zero.
    pub fn map_coeffs<D: Scalar, F: FnMut(&C) -> D>(&self, mut f: F) -> Poly<D> {
        Poly {
            arity: self.arity,
            order: self.order.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    if d.is_zero() {
                        None
                    } else {
                        Some((m.clone(), d))
                    }
                })
                .collect(),
        }
    }

    /// Fallible coefficient map.
    pub fn try_map_coeffs<D: Scalar, E, F: FnMut(&C) -> Result<D, E>>(&self, mut f: F) -> Result<Poly<D>, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.push((m.clone(), d));
            }
        }
        Ok(Poly { arity: self.arity, order: self.order.clone(), terms })
    }

    /// Evaluate every variable at the given values.
    pub fn evaluate(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.arity, "point arity");
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul_ref(&point[i]);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Whether every coefficient is a plain number.
    pub fn is_numeric(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_numeric())
    }
}

impl Poly<ParamCoeff> {
    /// Replace every parameter by a value in `C`. Fails when some coefficient
    /// denominator vanishes.
    pub fn eval_params<C: Scalar>(&self, values: &[C]) -> Result<Poly<C>, CoreError> {
        self.try_map_coeffs(|c| c.eval(values).ok_or(CoreError::VanishingDenominator))
    }

    /// Replace all parameters by rationals.
    pub fn specialize(&self, values: &[BigRational]) -> Result<Poly<BigRational>, CoreError> {
        self.eval_params(values)
    }

    /// Replace some parameters by parameter-dependent values, keeping the rest.
    pub fn substitute_params(&self, images: &[Option<ParamCoeff>]) -> Result<Self, CoreError> {
        let vals: Vec<ParamCoeff> = images
            .iter()
            .enumerate()
            .map(|(i, v)| v.clone().unwrap_or_else(|| ParamCoeff::param(i)))
            .collect();
        let width = self
            .terms
            .iter()
            .map(|(_, c)| c.numer().width().max(c.denom().width()))
            .max()
            .unwrap_or(0);
        if width > vals.len() {
            return Err(CoreError::ArityMismatch { expected: width, found: vals.len() });
        }
        self.eval_params(&vals)
    }

    /// Coerce to plain rational coefficients when no parameter occurs.
    pub fn to_rational(&self) -> Option<Poly<BigRational>> {
        if !self.is_numeric() {
            return None;
        }
        Some(self.map_coeffs(|c| c.as_rational().expect("numeric")))
    }
}

impl Poly<BigRational> {
    pub fn to_param(&self) -> Poly<ParamCoeff> {
        self.map_coeffs(|c| ParamCoeff::from(c.clone()))
    }
}

impl<C: Scalar> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity || self.terms.len() != other.terms.len() {
            return false;
        }
        let other = self.aligned(other);
        self.terms == other.terms
    }
}

impl<C: Scalar> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.add_poly(rhs)
    }
}

impl<C: Scalar> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.sub_poly(rhs)
    }
}

impl<C: Scalar> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Scalar> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}

impl<C: Scalar> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        self.add_poly(&rhs)
    }
}

impl<C: Scalar> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        self.sub_poly(&rhs)
    }
}

impl<C: Scalar> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        self.mul_poly(&rhs)
    }
}

impl<C: Scalar> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}
