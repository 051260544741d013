use localstd_core::{Locality, Monomial, Poly, Scalar};

use crate::error::EngineError;
use crate::polyset::PolySet;
use crate::session::Session;

/// `(lcm / LT(f)) f - (lcm / LT(g)) g`, with `lcm` the lcm of the leading
/// monomials. When a leading coefficient involves parameters the
/// denominator-free variant `LC(g) m_f f - LC(f) m_g g` is used instead.
pub fn s_polynomial<C: Scalar>(f: &Poly<C>, g: &Poly<C>) -> Result<Poly<C>, EngineError> {
    let (mf, cf) = f.leading_term().ok_or(EngineError::ZeroInput)?;
    let (mg, cg) = g.leading_term().ok_or(EngineError::ZeroInput)?;
    let g = &g.with_order(f.order());
    let l = mf.lcm(mg);
    let uf = l.div(mf).expect("lcm");
    let ug = l.div(mg).expect("lcm");
    if cf.is_numeric() && cg.is_numeric() {
        Ok(f.mul_term(&uf, &C::one().div_ref(cf)).sub_poly(&g.mul_term(&ug, &C::one().div_ref(cg))))
    } else {
        Ok(f.mul_term(&uf, cg).sub_poly(&g.mul_term(&ug, cf)))
    }
}

/// Cancel the term of `h` at `m` against the leading term of `g`, where
/// `LM(g)` divides `m`.
pub(crate) fn cancel<C: Scalar>(h: &Poly<C>, m: &Monomial, c: &C, g: &Poly<C>) -> Poly<C> {
    let (mg, cg) = g.leading_term().expect("nonzero");
    let u = m.div(mg).expect("divisible");
    if cg.is_numeric() && c.is_numeric() {
        h.sub_poly(&g.mul_term(&u, &c.div_ref(cg)))
    } else {
        h.scale(cg).sub_poly(&g.mul_term(&u, c))
    }
}

/// Total degree minus the degree of the leading monomial.
pub fn ecart<C: Scalar>(f: &Poly<C>) -> Result<u32, EngineError> {
    let lm = f.leading_monomial().ok_or(EngineError::ZeroInput)?;
    Ok(f.degree() - lm.degree())
}

fn require(set_loc: Locality, expected: Locality) -> Result<(), EngineError> {
    match (set_loc, expected) {
        (Locality::Mixed, _) => Err(EngineError::MixedOrder),
        (a, b) if a == b => Ok(()),
        (found, expected) => Err(EngineError::OrderClass { expected, found }),
    }
}

pub(crate) fn require_global(loc: Locality) -> Result<(), EngineError> {
    require(loc, Locality::Global)
}

pub(crate) fn require_local(loc: Locality) -> Result<(), EngineError> {
    require(loc, Locality::Local)
}

/// Full reduction of `f` by `divisors`: no monomial of the result is
/// divisible by a leading monomial of a divisor.
pub(crate) fn full_reduce<C: Scalar>(
    f: &Poly<C>,
    divisors: &[Poly<C>],
    session: &mut Session,
) -> Result<Poly<C>, EngineError> {
    let mut h = f.clone();
    let mut k = 0;
    while k < h.len() {
        let (m, c) = {
            let (m, c) = &h.terms()[k];
            (m.clone(), c.clone())
        };
        match divisors.iter().find(|g| g.leading_monomial().expect("nonzero").divides(&m)) {
            Some(g) => {
                session.tick()?;
                h = cancel(&h, &m, &c, g);
                // Terms above `m` keep their positions.
                k = h.terms().iter().take_while(|(t, _)| h.order().compare(t, &m).is_gt()).count();
            }
            None => k += 1,
        }
    }
    Ok(h)
}

/// Remainder of classical division by `g` under a global order.
pub fn normal_form<C: Scalar>(f: &Poly<C>, g: &PolySet<C>, session: &mut Session) -> Result<Poly<C>, EngineError> {
    require_global(g.locality())?;
    if f.arity() != g.arity() {
        return Err(EngineError::Incompatible);
    }
    let f = f.with_order(g.order());
    full_reduce(&f, g.elements(), session)
}

/// Drop every term of total degree at least `cutoff`.
pub(crate) fn truncate<C: Scalar>(p: Poly<C>, cutoff: Option<u32>) -> Poly<C> {
    match cutoff {
        Some(d) if p.degree() >= d => {
            let kept: Vec<_> = p.terms().iter().filter(|(m, _)| m.degree() < d).cloned().collect();
            Poly::from_terms(p.arity(), p.order().clone(), kept)
        }
        _ => p,
    }
}

/// Mora's weak normal form. `pool` starts as the divisor list; it only grows
/// within this call. The divisor of least ecart is chosen, the earliest one
/// on ties. With a `cutoff`, terms of that degree and above are discarded;
/// the caller guarantees they lie in the local ideal.
pub(crate) fn mora_reduce<C: Scalar>(
    f: Poly<C>,
    divisors: &[Poly<C>],
    cutoff: Option<u32>,
    session: &mut Session,
) -> Result<Poly<C>, EngineError> {
    let mut pool: Vec<(Poly<C>, u32)> = divisors.iter().map(|g| (g.clone(), ecart(g).expect("nonzero"))).collect();
    let mut h = truncate(f, cutoff);
    loop {
        let Some(lm) = h.leading_monomial().cloned() else { return Ok(h) };
        let mut best: Option<usize> = None;
        for (i, (g, e)) in pool.iter().enumerate() {
            if g.leading_monomial().expect("nonzero").divides(&lm) && best.is_none_or(|b| *e < pool[b].1) {
                best = Some(i);
            }
        }
        let Some(b) = best else { return Ok(h) };
        let eh = ecart(&h)?;
        let g = pool[b].0.clone();
        if eh < pool[b].1 && !pool.iter().any(|(p, _)| *p == h) {
            pool.push((h.clone(), eh));
        }
        session.tick()?;
        let c = h.leading_coeff().expect("nonzero").clone();
        h = cancel(&h, &lm, &c, &g);
        h = session.normalize(truncate(h, cutoff));
    }
}

/// Weak normal form of `f` with respect to `g`. Accepts local and global
/// orders; mixed orders are rejected.
pub fn weak_normal_form<C: Scalar>(
    f: &Poly<C>,
    g: &PolySet<C>,
    session: &mut Session,
) -> Result<Poly<C>, EngineError> {
    if g.locality() == Locality::Mixed {
        return Err(EngineError::MixedOrder);
    }
    if f.arity() != g.arity() {
        return Err(EngineError::Incompatible);
    }
    mora_reduce(f.with_order(g.order()), g.elements(), None, session)
}
