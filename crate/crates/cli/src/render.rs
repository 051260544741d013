use std::fmt::Write;

use localstd_core::{IntPoly, Poly, Scalar, VarCtx};
use localstd_invariants::InvariantReport;
use localstd_lab::StratumRecord;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct Envelope<'a> {
    pub command: &'a str,
    pub invocation: Invocation,
    pub report: &'a Value,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct Invocation {
    pub input: Option<String>,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub order: Option<String>,
    pub step_budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Reduction steps are deterministic; wall-clock time is opt-in so that
/// repeated runs print identical JSON.
#[derive(Serialize)]
pub struct Timing {
    pub reduction_steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct ReportJson {
    ideal: String,
    locality: String,
    order: String,
    basis: Vec<String>,
    leading: Vec<String>,
    quotient_basis: Vec<String>,
    dimension: usize,
    genericity_assumptions: Vec<String>,
}

#[derive(Serialize)]
struct StratumJson {
    name: String,
    equations: Vec<String>,
    expected: String,
    witness: serde_json::Map<String, Value>,
    mu: usize,
    tau: usize,
    ok: bool,
    corank: usize,
    class: Option<String>,
    variants: serde_json::Map<String, Value>,
}

pub fn assumption(p: &IntPoly, ctx: &VarCtx) -> String {
    format!("{} != 0", p.render(ctx.params()))
}

pub fn polys<C: Scalar>(ps: &[Poly<C>], ctx: &VarCtx) -> Vec<String> {
    ps.iter().map(|p| ctx.fmt_poly(p)).collect()
}

pub fn invariant<C: Scalar>(r: &InvariantReport<C>, ctx: &VarCtx) -> Value {
    let out = ReportJson {
        ideal: r.ideal.to_string(),
        locality: r.locality.to_string(),
        order: r.order.describe(ctx.vars()),
        basis: polys(r.basis.elements(), ctx),
        leading: r.leading.iter().map(|m| ctx.fmt_monomial(m)).collect(),
        quotient_basis: r.quotient_basis.iter().map(|m| ctx.fmt_monomial(m)).collect(),
        dimension: r.dimension,
        genericity_assumptions: r.assumptions.iter().map(|a| assumption(a, ctx)).collect(),
    };
    serde_json::to_value(out).expect("serializable")
}

pub fn stratum(r: &StratumRecord) -> Value {
    let out = StratumJson {
        name: r.name.clone(),
        equations: r.equations.clone(),
        expected: r.expected.to_string(),
        witness: r.witness.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect(),
        mu: r.mu,
        tau: r.tau,
        ok: r.ok,
        corank: r.corank,
        class: r.class.map(|c| c.to_string()),
        variants: r.variants.iter().map(|(k, v)| (k.clone(), json!(v))).collect(),
    };
    serde_json::to_value(out).expect("serializable")
}

/// Plain text: one `key: value` line per field, nested objects indented.
pub fn text(v: &Value) -> String {
    let mut out = String::new();
    write_text(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("none".into()),
        Value::Object(_) => None,
    }
}

fn write_text(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => writeln!(out, "{}{}: {}", pad, k, s).unwrap(),
                    None => {
                        writeln!(out, "{}{}:", pad, k).unwrap();
                        write_text(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                write_text(out, item, depth);
            }
        }
        other => writeln!(out, "{}{}", pad, scalar(other).unwrap_or_default()).unwrap(),
    }
}
