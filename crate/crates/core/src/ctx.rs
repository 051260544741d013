//! Variable and parameter names used for parsing and printing.

use crate::error::CoreError;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Names of the ring variables and of the symbolic parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarCtx {
    vars: Vec<String>,
    params: Vec<String>,
}

impl VarCtx {
    pub fn new(vars: Vec<String>, params: Vec<String>) -> Result<Self, CoreError> {
        if vars.is_empty() {
            return Err(CoreError::Context("at least one variable is required".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for n in vars.iter().chain(&params) {
            if n.is_empty() {
                return Err(CoreError::Context("empty name".into()));
            }
            if !seen.insert(n.as_str()) {
                return Err(CoreError::Context(format!("name `{}` declared twice", n)));
            }
        }
        Ok(VarCtx { vars, params })
    }

    /// Convenience constructor from string slices.
    pub fn from_names(vars: &[&str], params: &[&str]) -> Result<Self, CoreError> {
        Self::new(
            vars.iter().map(|s| s.to_string()).collect(),
            params.iter().map(|s| s.to_string()).collect(),
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        m.render(&self.vars)
    }

    pub fn fmt_coeff<C: Scalar>(&self, c: &C) -> String {
        c.render(&self.params)
    }

    /// Render with terms in the polynomial's own (decreasing) order.
    pub fn fmt_poly<C: Scalar>(&self, p: &Poly<C>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let mut body = c.render(&self.params);
            let negative = body.starts_with('-') && c.is_atomic(&self.params);
            if negative {
                body.remove(0);
            }
            let sep = match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            out.push_str(sep);
            let coeff = if c.is_atomic(&self.params) { body } else { format!("({})", body) };
            if m.is_one() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&self.fmt_monomial(m));
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&self.fmt_monomial(m));
            }
        }
        out
    }
}
