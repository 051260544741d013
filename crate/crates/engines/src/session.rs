use localstd_core::{IntPoly, Poly, Scalar};

use crate::error::EngineError;

/// Default number of reduction steps before a computation is abandoned.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub step_budget: u64,
    /// Discard pairs by the product and chain criteria.
    pub criteria: bool,
    /// Reduce tails of the final basis (global orders only).
    pub interreduce: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { step_budget: DEFAULT_STEP_BUDGET, criteria: true, interreduce: false }
    }
}

impl Options {
    pub fn with_budget(step_budget: u64) -> Self {
        Options { step_budget, ..Self::default() }
    }
}

/// Mutable state of one computation: step count and the parameter
/// polynomials assumed nonzero so far.
#[derive(Debug)]
pub struct Session {
    limit: u64,
    steps: u64,
    assumptions: Vec<IntPoly>,
}

impl Session {
    pub fn new(limit: u64) -> Self {
        Session { limit, steps: 0, assumptions: Vec::new() }
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn tick(&mut self) -> Result<(), EngineError> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(EngineError::StepBudget { limit: self.limit });
        }
        Ok(())
    }

    pub fn assume<I: IntoIterator<Item = IntPoly>>(&mut self, conds: I) {
        for c in conds {
            if !self.assumptions.contains(&c) {
                self.assumptions.push(c);
            }
        }
    }

    pub fn assumptions(&self) -> &[IntPoly] {
        &self.assumptions
    }

    pub fn into_assumptions(self) -> Vec<IntPoly> {
        self.assumptions
    }

    /// Scale `p` to a canonical representative: monic when the leading
    /// coefficient is a plain number, otherwise primitive. Every division
    /// performed is recorded as an assumption.
    pub fn normalize<C: Scalar>(&mut self, p: Poly<C>) -> Poly<C> {
        let Some(lc) = p.leading_coeff() else { return p };
        if lc.is_numeric() {
            if lc.is_one() {
                return p;
            }
            let lc = lc.clone();
            return p.div_scalar(&lc);
        }
        let content = C::content(p.terms().iter().map(|(_, c)| c));
        let p = if content.is_one() {
            p
        } else {
            self.assume(content.conditions());
            p.div_scalar(&content)
        };
        self.assume(p.leading_coeff().expect("nonzero").conditions());
        p
    }
}
