//! Sparse multivariate polynomials with integer coefficients in the
//! parameters, and their gcd.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Exponent vectors are stored with trailing zeros removed, so that values
/// built with different parameter counts compare correctly and the derived
/// lexicographic order on keys is the lex monomial order with parameter 0
/// most significant.
type Exps = Vec<u32>;

fn trim(mut e: Exps) -> Exps {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exps_degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

fn exps_add(a: &[u32], b: &[u32]) -> Exps {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn exps_divides(d: &[u32], m: &[u32]) -> bool {
    d.len() <= m.len() && d.iter().zip(m).all(|(x, y)| x <= y)
}

fn exps_sub(m: &[u32], d: &[u32]) -> Exps {
    let mut out = m.to_vec();
    for (o, s) in out.iter_mut().zip(d) {
        *o -= s;
    }
    trim(out)
}

/// Graded reverse lexicographic comparison of parameter exponent vectors.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    match exps_degree(a).cmp(&exps_degree(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    let n = a.len().max(b.len());
    for i in (0..n).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<Exps, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        IntPoly { terms }
    }

    /// The parameter with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, BigInt::one());
        IntPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigInt)>>(it: I) -> Self {
        let mut terms: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (e, c) in it {
            if c.is_zero() {
                continue;
            }
            let e = trim(e);
            let slot = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&e);
            }
        }
        IntPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// The value when the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// One past the largest parameter index that occurs.
    pub fn width(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| exps_degree(e)).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// Leading term under graded reverse lex on the parameters.
    pub fn leading(&self) -> Option<(&[u32], &BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| grevlex_cmp(a.0, b.0))
            .map(|(e, c)| (e.as_slice(), c))
    }

    fn lex_leading(&self) -> Option<(&Exps, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_int(&self, k: &BigInt) -> Self {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c / k)).collect(),
        }
    }

    /// Positive gcd of the integer coefficients; zero for the zero polynomial.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Returns the polynomial with positive leading coefficient together with
    /// whether a sign flip was applied.
    pub fn sign_normalized(self) -> (Self, bool) {
        match self.leading() {
            Some((_, c)) if c.is_negative() => (-self, true),
            _ => (self, false),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients as a polynomial in parameter `v`, index = power of `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<IntPoly> {
        let mut out = vec![IntPoly::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            let k = e.get(v).copied().unwrap_or(0) as usize;
            let mut rest = e.clone();
            if v < rest.len() {
                rest[v] = 0;
            }
            out[k].terms.insert(trim(rest), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[IntPoly]) -> Self {
        let mut terms = BTreeMap::new();
        for (k, p) in coeffs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut full = e.clone();
                if k > 0 {
                    if full.len() <= v {
                        full.resize(v + 1, 0);
                    }
                    full[v] = k as u32;
                }
                terms.insert(trim(full), c.clone());
            }
        }
        IntPoly { terms }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(k) = d.as_constant() {
            return if self.terms.values().all(|c| (c % &k).is_zero()) {
                Some(self.div_int(&k))
            } else {
                None
            };
        }
        let (dm, dc) = d.lex_leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.lex_leading() {
            if !exps_divides(&dm, rm) {
                return None;
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = exps_sub(rm, &dm);
            let step = IntPoly {
                terms: std::iter::once((qm.clone(), q.clone())).collect(),
            };
            rem = &rem - &(&step * d);
            quot.insert(qm, q);
        }
        Some(IntPoly { terms: quot })
    }

    fn lowest_var(&self) -> Option<usize> {
        let w = self.width();
        (0..w).find(|&v| self.degree_in(v) > 0)
    }

    /// Greatest common divisor, normalised to a positive leading coefficient.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.clone().sign_normalized().0;
        }
        if b.is_zero() {
            return a.clone().sign_normalized().0;
        }
        if a.is_constant() || b.is_constant() {
            return IntPoly::constant(a.int_content().gcd(&b.int_content()));
        }
        if a == b {
            return a.clone().sign_normalized().0;
        }
        let v = match (a.lowest_var(), b.lowest_var()) {
            (Some(x), Some(y)) => x.min(y),
            _ => unreachable!("non-constant polynomials involve some parameter"),
        };
        if a.degree_in(v) == 0 {
            return IntPoly::gcd(a, &b.content_in(v));
        }
        if b.degree_in(v) == 0 {
            return IntPoly::gcd(&a.content_in(v), b);
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        let g = primitive_prs(pa, pb, v);
        (&IntPoly::gcd(&ca, &cb) * &g).sign_normalized().0
    }

    /// gcd of the coefficients with respect to parameter `v`.
    pub fn content_in(&self, v: usize) -> IntPoly {
        let mut g = IntPoly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = IntPoly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> IntPoly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Evaluate with `vals[i]` substituted for parameter `i`.
    pub fn eval<C: Scalar>(&self, vals: &[C]) -> C {
        let width = self.width();
        assert!(vals.len() >= width, "missing parameter values");
        let mut powers: Vec<Vec<C>> = vec![vec![C::one()]; width];
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = C::from_rational(num_rational::BigRational::from_integer(c.clone()));
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= k as usize {
                    let next = cache.last().expect("seeded").mul_ref(&vals[i]);
                    cache.push(next);
                }
                t = t.mul_ref(&cache[k as usize]);
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Human readable rendering, terms in decreasing graded reverse lex order.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        let mut out = String::new();
        for (i, (e, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let mono = render_exps(e, names);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", mag, mono));
            }
        }
        out
    }
}

pub(crate) fn render_exps(e: &[u32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("p{}", i));
        if k == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, k));
        }
    }
    parts.join("*")
}

/// Pseudo-remainder of `a` by `b` as polynomials in parameter `v`.
fn pseudo_rem(a: &IntPoly, b: &IntPoly, v: usize) -> IntPoly {
    let bc = b.coeffs_in(v);
    let db = bc.len() - 1;
    let lb = &bc[db];
    let mut r = a.coeffs_in(v);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (k, c) in bc.iter().enumerate() {
            let t = &lr * c;
            r[k + shift] = &r[k + shift] - &t;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    IntPoly::from_coeffs_in(v, &r)
}

/// gcd of two polynomials primitive in `v` and of positive degree in `v`.
fn primitive_prs(mut p: IntPoly, mut q: IntPoly, v: usize) -> IntPoly {
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, v);
        if r.is_zero() {
            return q.primitive_in(v);
        }
        if r.degree_in(v) == 0 {
            return IntPoly::one();
        }
        p = q;
        q = r.primitive_in(v);
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.get_mut(e) {
                Some(slot) => {
                    *slot += c;
                    if slot.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), c.clone());
                }
            }
        }
        IntPoly { terms }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.get_mut(e) {
                Some(slot) => {
                    *slot -= c;
                    if slot.is_zero() {
                        terms.remove(e);
                    }
                }
                None => {
                    terms.insert(e.clone(), -c);
                }
            }
        }
        IntPoly { terms }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut terms: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = exps_add(ea, eb);
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        IntPoly { terms }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}
