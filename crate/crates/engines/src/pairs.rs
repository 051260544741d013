use localstd_core::{Monomial, MonomialOrder, Poly, Scalar};

/// Indices `i < j` into the working list together with the lcm of their
/// leading monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
}

/// Pending pairs plus the set of elements still allowed to form new pairs.
pub(crate) struct PairQueue {
    pending: Vec<CriticalPair>,
    active: Vec<bool>,
    criteria: bool,
}

impl PairQueue {
    pub(crate) fn new(criteria: bool) -> Self {
        PairQueue { pending: Vec::new(), active: Vec::new(), criteria }
    }

    pub(crate) fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter().enumerate().filter(|(_, a)| **a).map(|(i, _)| i)
    }

    /// Register `basis[h]` (the newest element) and create its pairs,
    /// pruned by the Gebauer-Moeller rules when criteria are enabled.
    pub(crate) fn update<C: Scalar>(&mut self, basis: &[Poly<C>], h: usize) {
        let lm = |k: usize| basis[k].leading_monomial().expect("nonzero");
        let lh = lm(h).clone();
        self.active.resize(basis.len(), false);
        let mut fresh: Vec<CriticalPair> = self
            .active_indices()
            .map(|g| CriticalPair { i: g, j: h, lcm: lm(g).lcm(&lh) })
            .collect();
        if !self.criteria {
            self.pending.extend(fresh);
            self.active[h] = true;
            return;
        }
        let mut kept: Vec<CriticalPair> = Vec::new();
        while let Some(p) = fresh.pop() {
            let coprime = lm(p.i).is_coprime(&lh);
            if coprime
                || (!fresh.iter().any(|q| q.lcm.divides(&p.lcm)) && !kept.iter().any(|q| q.lcm.divides(&p.lcm)))
            {
                kept.push(p);
            }
        }
        kept.retain(|p| !lm(p.i).is_coprime(&lh));
        self.pending.retain(|p| {
            !(lh.divides(&p.lcm) && lm(p.i).lcm(&lh) != p.lcm && lm(p.j).lcm(&lh) != p.lcm)
        });
        self.pending.extend(kept);
        let dominated: Vec<usize> = self.active_indices().filter(|&g| lh.divides(lm(g))).collect();
        for g in dominated {
            self.active[g] = false;
        }
        self.active[h] = true;
    }

    /// The pair of least lcm: lowest degree first, then smallest under `order`.
    pub(crate) fn pop(&mut self, order: &MonomialOrder) -> Option<CriticalPair> {
        let best = (0..self.pending.len()).min_by(|&a, &b| {
            let (x, y) = (&self.pending[a].lcm, &self.pending[b].lcm);
            x.degree().cmp(&y.degree()).then_with(|| order.compare(x, y))
        })?;
        Some(self.pending.swap_remove(best))
    }
}
