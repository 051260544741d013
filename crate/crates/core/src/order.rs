//! Monomial orders and their global/local classification.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CoreError;
use crate::monomial::Monomial;
use crate::scalar::render_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Grevlex,
    Lex,
    NegGrevlex,
    NegLex,
}

impl BaseOrder {
    pub fn name(self) -> &'static str {
        match self {
            BaseOrder::Grevlex => "grevlex",
            BaseOrder::Lex => "lex",
            BaseOrder::NegGrevlex => "neg-grevlex",
            BaseOrder::NegLex => "neg-lex",
        }
    }

    pub fn negated(self) -> BaseOrder {
        match self {
            BaseOrder::Grevlex => BaseOrder::NegGrevlex,
            BaseOrder::Lex => BaseOrder::NegLex,
            BaseOrder::NegGrevlex => BaseOrder::Grevlex,
            BaseOrder::NegLex => BaseOrder::Lex,
        }
    }

    fn parse(s: &str) -> Option<BaseOrder> {
        match s {
            "grevlex" | "tdeg" => Some(BaseOrder::Grevlex),
            "lex" | "plex" => Some(BaseOrder::Lex),
            "neg-grevlex" | "neg_grevlex" | "tdeg_min" => Some(BaseOrder::NegGrevlex),
            "neg-lex" | "neg_lex" | "plex_min" => Some(BaseOrder::NegLex),
            _ => None,
        }
    }
}

/// Whether 1 is the minimum, the maximum or neither among the variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Locality {
    Global,
    Local,
    Mixed,
}

impl fmt::Display for Locality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Locality::Global => "global",
            Locality::Local => "local",
            Locality::Mixed => "mixed",
        })
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    base: BaseOrder,
    weights: Option<Vec<BigRational>>,
    scaled: Option<Vec<BigInt>>,
    perm: Option<Vec<usize>>,
}

/// A multiplicative total order on monomials of a fixed arity.
///
/// `perm`, when present, lists variable indices from most to least
/// significant. A weight vector, when present, is compared first and the base
/// order breaks ties.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    inner: Arc<Inner>,
}

impl MonomialOrder {
    fn build(base: BaseOrder, weights: Option<Vec<BigRational>>, perm: Option<Vec<usize>>) -> Self {
        let scaled = weights.as_ref().map(|w| {
            let l = w.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            w.iter().map(|q| (q.numer() * &l) / q.denom()).collect()
        });
        let perm = perm.filter(|p| p.iter().enumerate().any(|(i, &v)| i != v));
        MonomialOrder { inner: Arc::new(Inner { base, weights, scaled, perm }) }
    }

    pub fn grevlex() -> Self {
        Self::build(BaseOrder::Grevlex, None, None)
    }

    pub fn lex() -> Self {
        Self::build(BaseOrder::Lex, None, None)
    }

    pub fn neg_grevlex() -> Self {
        Self::build(BaseOrder::NegGrevlex, None, None)
    }

    pub fn neg_lex() -> Self {
        Self::build(BaseOrder::NegLex, None, None)
    }

    pub fn base(base: BaseOrder) -> Self {
        Self::build(base, None, None)
    }

    pub fn weighted(weights: Vec<BigRational>, tie: BaseOrder) -> Self {
        Self::build(tie, Some(weights), None)
    }

    /// The same order with variable significance given by `perm`
    /// (most significant first). `perm` must be a permutation of `0..n`.
    pub fn with_permutation(&self, perm: Vec<usize>) -> Result<Self, CoreError> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(CoreError::Order(format!("not a permutation: {:?}", perm)));
            }
            seen[p] = true;
        }
        Ok(Self::build(self.inner.base, self.inner.weights.clone(), Some(perm)))
    }

    pub fn base_kind(&self) -> BaseOrder {
        self.inner.base
    }

    pub fn weights(&self) -> Option<&[BigRational]> {
        self.inner.weights.as_deref()
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.inner.perm.as_deref()
    }

    /// The opposite order.
    pub fn negated(&self) -> Self {
        let weights = self
            .inner
            .weights
            .as_ref()
            .map(|w| w.iter().map(|q| -q.clone()).collect());
        Self::build(self.inner.base.negated(), weights, self.inner.perm.clone())
    }

    fn var_at(&self, k: usize) -> usize {
        match &self.inner.perm {
            Some(p) => p[k],
            None => k,
        }
    }

    fn lex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for k in 0..a.arity() {
            let i = self.var_at(k);
            match a.exp(i).cmp(&b.exp(i)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn grevlex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        for k in (0..a.arity()).rev() {
            let i = self.var_at(k);
            match a.exp(i).cmp(&b.exp(i)) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }

    fn base_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.inner.base {
            BaseOrder::Grevlex => self.grevlex_cmp(a, b),
            BaseOrder::Lex => self.lex_cmp(a, b),
            BaseOrder::NegGrevlex => self.grevlex_cmp(b, a),
            BaseOrder::NegLex => self.lex_cmp(b, a),
        }
    }

    /// Compare two monomials of equal arity.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity(), "arity mismatch");
        if let Some(w) = &self.inner.scaled {
            let wa: BigInt = w.iter().zip(a.exps()).map(|(x, &e)| x * BigInt::from(e)).sum();
            let wb: BigInt = w.iter().zip(b.exps()).map(|(x, &e)| x * BigInt::from(e)).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        self.base_cmp(a, b)
    }

    /// Checked comparison reporting an arity mismatch.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, CoreError> {
        if a.arity() != b.arity() {
            return Err(CoreError::ArityMismatch { expected: a.arity(), found: b.arity() });
        }
        if let Some(w) = &self.inner.weights {
            if w.len() != a.arity() {
                return Err(CoreError::ArityMismatch { expected: w.len(), found: a.arity() });
            }
        }
        Ok(self.compare(a, b))
    }

    /// Probe `1` against every variable.
    pub fn classify(&self, arity: usize) -> Locality {
        let one = Monomial::one(arity);
        let mut above = 0;
        let mut below = 0;
        for i in 0..arity {
            match self.compare(&one, &Monomial::var(arity, i)) {
                Ordering::Less => above += 1,
                Ordering::Greater => below += 1,
                Ordering::Equal => unreachable!("total order"),
            }
        }
        if above == arity {
            Locality::Global
        } else if below == arity {
            Locality::Local
        } else {
            Locality::Mixed
        }
    }

    /// Parse an order description such as `neg-lex`, `weighted:1,-1:lex`
    /// or `neg-lex/z,y` (significance given by variable names).
    pub fn parse(text: &str, vars: &[String]) -> Result<Self, CoreError> {
        let bad = |m: String| CoreError::Order(m);
        let (body, perm) = match text.rsplit_once('/') {
            Some((b, p)) if !p.contains(':') && p.trim().starts_with(|c: char| c.is_alphabetic()) => {
                (b.trim(), Some(p.trim()))
            }
            _ => (text.trim(), None),
        };
        let order = if let Some(rest) = body.strip_prefix("weighted:") {
            let (ws, tie) = rest
                .rsplit_once(':')
                .ok_or_else(|| bad(format!("weighted order needs a tie-break: {}", text)))?;
            let tie = BaseOrder::parse(tie.trim())
                .ok_or_else(|| bad(format!("unknown tie-break order `{}`", tie)))?;
            let weights = ws
                .split(',')
                .map(|w| parse_rational(w.trim()).ok_or_else(|| bad(format!("bad weight `{}`", w))))
                .collect::<Result<Vec<_>, _>>()?;
            if weights.len() != vars.len() {
                return Err(bad(format!(
                    "weight vector has {} entries for {} variables",
                    weights.len(),
                    vars.len()
                )));
            }
            MonomialOrder::weighted(weights, tie)
        } else {
            let b = BaseOrder::parse(body).ok_or_else(|| bad(format!("unknown order `{}`", body)))?;
            MonomialOrder::base(b)
        };
        match perm {
            None => Ok(order),
            Some(p) => {
                let idx = p
                    .split(',')
                    .map(|n| {
                        let n = n.trim();
                        vars.iter()
                            .position(|v| v == n)
                            .ok_or_else(|| bad(format!("unknown variable `{}` in order", n)))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if idx.len() != vars.len() {
                    return Err(bad("significance list must name every variable".into()));
                }
                order.with_permutation(idx)
            }
        }
    }

    /// Text form accepted by [`MonomialOrder::parse`].
    pub fn describe(&self, vars: &[String]) -> String {
        let mut s = match &self.inner.weights {
            Some(w) => format!(
                "weighted:{}:{}",
                w.iter().map(render_rational).collect::<Vec<_>>().join(","),
                self.inner.base.name()
            ),
            None => self.inner.base.name().to_string(),
        };
        if let Some(p) = &self.inner.perm {
            let names: Vec<String> = p
                .iter()
                .map(|&i| vars.get(i).cloned().unwrap_or_else(|| format!("x{}", i)))
                .collect();
            s.push('/');
            s.push_str(&names.join(","));
        }
        s
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(&[]))
    }
}
