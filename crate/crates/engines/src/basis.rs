use localstd_core::{BaseOrder, IntPoly, MonomialOrder, Poly, Scalar};

use crate::error::EngineError;
use crate::pairs::PairQueue;
use crate::polyset::{minimalize, standard_monomials, PolySet};
use crate::reduce::{full_reduce, mora_reduce, require_global, require_local, s_polynomial, truncate};
use crate::session::{Options, Session};

/// A completed basis with the parameter conditions assumed along the way.
#[derive(Clone, Debug)]
pub struct Basis<C> {
    pub set: PolySet<C>,
    pub assumptions: Vec<IntPoly>,
    pub steps: u64,
}

enum Reducer {
    Full,
    Weak,
}

/// A degree `d` with every monomial of degree `d` in the local ideal, once the
/// leading monomials leave finitely many standard monomials. For orders that
/// refine the negative degree the staircase height suffices; otherwise the
/// staircase size bounds the length of the quotient.
fn cutoff<C: Scalar>(work: &[Poly<C>], queue: &PairQueue, order: &MonomialOrder) -> Option<u32> {
    let arity = work.first()?.arity();
    let leading: Vec<_> = queue.active_indices().map(|k| work[k].leading_monomial().expect("nonzero").clone()).collect();
    let stairs = standard_monomials(&leading, arity)?;
    if order.base_kind() == BaseOrder::NegGrevlex && order.weights().is_none() {
        Some(stairs.iter().map(|m| m.degree() + 1).max().unwrap_or(0))
    } else {
        Some(stairs.len() as u32)
    }
}

fn complete<C: Scalar>(
    input: &PolySet<C>,
    opts: &Options,
    session: &mut Session,
    reducer: Reducer,
) -> Result<PolySet<C>, EngineError> {
    let order = input.order().clone();
    let mut queue = PairQueue::new(opts.criteria);
    let mut work: Vec<Poly<C>> = Vec::new();
    let mut bound = None;
    let reduce = |f: Poly<C>, work: &[Poly<C>], queue: &PairQueue, bound: Option<u32>, session: &mut Session| {
        let divisors: Vec<Poly<C>> = queue.active_indices().map(|k| work[k].clone()).collect();
        match reducer {
            Reducer::Full => full_reduce(&f, &divisors, session),
            Reducer::Weak => mora_reduce(f, &divisors, bound, session),
        }
    };
    let weak = matches!(reducer, Reducer::Weak);
    for f in input.elements() {
        let f = session.normalize(f.clone());
        let h = match reducer {
            Reducer::Full => reduce(f, &work, &queue, None, session)?,
            Reducer::Weak => truncate(f, bound),
        };
        if h.is_zero() || work.contains(&h) {
            continue;
        }
        work.push(session.normalize(h));
        queue.update(&work, work.len() - 1);
        if weak {
            bound = cutoff(&work, &queue, &order);
        }
    }
    while let Some(p) = queue.pop(&order) {
        if work.iter().any(|g| g.leading_monomial().is_some_and(|m| m.is_one())) {
            break;
        }
        let s = s_polynomial(&work[p.i], &work[p.j])?;
        let h = reduce(s, &work, &queue, bound, session)?;
        if h.is_zero() {
            continue;
        }
        work.push(session.normalize(h));
        queue.update(&work, work.len() - 1);
        if weak {
            bound = cutoff(&work, &queue, &order);
        }
    }
    let kept: Vec<Poly<C>> = match work.iter().find(|g| g.leading_monomial().is_some_and(|m| m.is_one())) {
        Some(unit) => vec![unit.clone()],
        None => queue.active_indices().map(|k| work[k].clone()).collect(),
    };
    let mut out = minimalize(kept);
    if opts.interreduce {
        if let Reducer::Full = reducer {
            for k in 0..out.len() {
                let others: Vec<Poly<C>> =
                    out.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
                let lt = out[k].terms()[0].clone();
                let tail = Poly::from_terms(out[k].arity(), order.clone(), out[k].terms()[1..].iter().cloned());
                let tail = full_reduce(&tail, &others, session)?;
                let head = Poly::term(order.clone(), lt.0, lt.1);
                out[k] = session.normalize(head.add_poly(&tail));
            }
        }
    }
    PolySet::new(input.arity(), order, out)
}

/// Groebner basis under a global order, minimalized; numeric leading
/// coefficients are made monic.
pub fn buchberger_in<C: Scalar>(
    input: &PolySet<C>,
    opts: &Options,
    session: &mut Session,
) -> Result<PolySet<C>, EngineError> {
    require_global(input.locality())?;
    complete(input, opts, session, Reducer::Full)
}

/// Standard basis under a local order via Mora's weak normal form.
pub fn standard_basis_in<C: Scalar>(
    input: &PolySet<C>,
    opts: &Options,
    session: &mut Session,
) -> Result<PolySet<C>, EngineError> {
    require_local(input.locality())?;
    complete(input, opts, session, Reducer::Weak)
}

pub fn buchberger<C: Scalar>(input: &PolySet<C>, opts: &Options) -> Result<Basis<C>, EngineError> {
    let mut session = Session::new(opts.step_budget);
    let set = buchberger_in(input, opts, &mut session)?;
    Ok(Basis { set, steps: session.steps(), assumptions: session.into_assumptions() })
}

pub fn standard_basis<C: Scalar>(input: &PolySet<C>, opts: &Options) -> Result<Basis<C>, EngineError> {
    let mut session = Session::new(opts.step_budget);
    let set = standard_basis_in(input, opts, &mut session)?;
    Ok(Basis { set, steps: session.steps(), assumptions: session.into_assumptions() })
}
