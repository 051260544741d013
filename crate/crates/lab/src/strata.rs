//! Strata of the deformation spaces of simple singularities.
//!
//! Each catalog works in local coordinates: the singular point of the
//! deformed fibre sits at the origin and the family is
//! `base + sum v_k m_k` over a fixed monomial list. A stratum carries its
//! defining equations in the `v_k`, the class of a generic member, a few
//! genericity conditions, and a parameterization used to draw witnesses.

use std::collections::BTreeMap;

use localstd_core::{BigInt, BigRational, GaussPoly, GaussRational, IntPoly, MonomialOrder, ParamPoly, VarCtx, Zero};
use localstd_engines::Options;
use localstd_expr::{parse_poly, parse_rational_poly};
use localstd_invariants::{milnor_local, tyurina_local};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::class::{Family, SingularityClass};
use crate::classify::classify_with_mu;
use crate::hessian::hessian_corank;
use crate::LabError;

/// Values of the family parameters. Complex branches use `i`.
pub type Witness = BTreeMap<String, GaussRational>;

/// `base + sum v_k m_k` in the variables `y, z`.
#[derive(Clone, Debug)]
pub struct LocalFamily {
    pub class: SingularityClass,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub text: String,
    pub poly: ParamPoly,
}

impl LocalFamily {
    fn ctx(&self) -> VarCtx {
        VarCtx::new(self.vars.clone(), self.params.clone()).expect("distinct names")
    }

    fn param_equation(&self, text: &str) -> IntPoly {
        let p = parse_poly(text, &self.ctx(), &MonomialOrder::neg_grevlex()).expect("catalog equation parses");
        assert!(p.degree() == 0, "equation involves the variables: {}", text);
        p.constant_term().numer().clone()
    }
}

/// Another transcription of a stratum's equations, checked alongside.
#[derive(Clone, Debug)]
pub struct EquationVariant {
    pub label: String,
    pub texts: Vec<String>,
    pub equations: Vec<IntPoly>,
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub name: String,
    pub expected: SingularityClass,
    pub equation_texts: Vec<String>,
    pub equations: Vec<IntPoly>,
    /// Polynomials that must not vanish at a generic point.
    pub side_texts: Vec<String>,
    pub side_conditions: Vec<IntPoly>,
    /// Symbols drawn at random when sampling a witness: the extra names
    /// below followed by every family parameter that `definitions` leaves
    /// free.
    pub free: Vec<String>,
    /// Evaluated in order; each may use `I`, the free symbols and the
    /// names defined before it.
    pub definitions: Vec<(String, String)>,
    pub variants: Vec<EquationVariant>,
}

/// Outcome of checking one witness.
#[derive(Clone, Debug)]
pub struct StratumRecord {
    pub name: String,
    pub equations: Vec<String>,
    pub expected: SingularityClass,
    pub witness: Witness,
    pub specialized: GaussPoly,
    pub mu: usize,
    pub tau: usize,
    pub corank: usize,
    pub class: Option<SingularityClass>,
    /// Which equation variants vanish at the witness.
    pub variants: Vec<(String, bool)>,
    pub ok: bool,
}

struct Entry {
    name: String,
    expected: SingularityClass,
    eqs: Vec<String>,
    side: Vec<String>,
    free: Vec<String>,
    defs: Vec<(String, String)>,
    variants: Vec<(String, Vec<String>)>,
}

fn entry(name: impl Into<String>, expected: SingularityClass) -> Entry {
    Entry {
        name: name.into(),
        expected,
        eqs: Vec::new(),
        side: Vec::new(),
        free: Vec::new(),
        defs: Vec::new(),
        variants: Vec::new(),
    }
}

fn owned(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl Entry {
    fn eqs(mut self, e: &[&str]) -> Self {
        self.eqs.extend(owned(e));
        self
    }

    fn eq(mut self, e: String) -> Self {
        self.eqs.push(e);
        self
    }

    fn side(mut self, s: &[&str]) -> Self {
        self.side.extend(owned(s));
        self
    }

    fn side_owned(mut self, s: String) -> Self {
        self.side.push(s);
        self
    }

    fn free(mut self, f: &[&str]) -> Self {
        self.free.extend(owned(f));
        self
    }

    fn defs(mut self, d: &[(&str, &str)]) -> Self {
        self.defs.extend(d.iter().map(|(a, b)| (a.to_string(), b.to_string())));
        self
    }

    fn def(mut self, name: String, expr: String) -> Self {
        self.defs.push((name, expr));
        self
    }

    fn zero(mut self, names: &[String]) -> Self {
        for n in names {
            self.eqs.push(n.clone());
            self.defs.push((n.clone(), "0".into()));
        }
        self
    }

    fn variant(mut self, label: &str, eqs: &[&str]) -> Self {
        self.variants.push((label.to_string(), owned(eqs)));
        self
    }

    fn build(self, fam: &LocalFamily) -> Stratum {
        let defined: Vec<&String> = self.defs.iter().map(|(n, _)| n).collect();
        let mut free = self.free.clone();
        free.extend(fam.params.iter().filter(|p| !defined.contains(p)).cloned());
        Stratum {
            equations: self.eqs.iter().map(|e| fam.param_equation(e)).collect(),
            side_conditions: self.side.iter().map(|e| fam.param_equation(e)).collect(),
            variants: self
                .variants
                .into_iter()
                .map(|(label, texts)| EquationVariant {
                    equations: texts.iter().map(|e| fam.param_equation(e)).collect(),
                    label,
                    texts,
                })
                .collect(),
            name: self.name,
            expected: self.expected,
            equation_texts: self.eqs,
            side_texts: self.side,
            free,
            definitions: self.defs,
        }
    }
}

fn names(prefix: &str, range: impl Iterator<Item = u32>) -> Vec<String> {
    range.map(|k| format!("{}{}", prefix, k)).collect()
}

fn family(cls: SingularityClass, base: &str, params: Vec<String>, directions: &[String]) -> LocalFamily {
    let mut text = base.to_string();
    for (p, m) in params.iter().zip(directions) {
        text.push_str(&format!(" + {}*{}", p, m));
    }
    let vars = owned(&["y", "z"]);
    let ctx = VarCtx::new(vars.clone(), params.clone()).expect("distinct names");
    let poly = parse_poly(&text, &ctx, &MonomialOrder::neg_grevlex()).expect("family parses");
    LocalFamily { class: cls, vars, params, text, poly }
}

/// The family of local deformations the catalog of `cls` is written in.
pub fn local_family(cls: SingularityClass) -> Result<LocalFamily, LabError> {
    let n = cls.index();
    Ok(match cls.family() {
        Family::A => {
            let params = names("v", 2..n + 1);
            let dirs: Vec<String> = (2..n + 1).map(|k| format!("z^{}", k)).collect();
            family(cls, &format!("y^2 + z^{}", n + 1), params, &dirs)
        }
        Family::D => {
            let params = names("v", 0..n - 1);
            let mut dirs = owned(&["y*z", "y^2"]);
            dirs.extend((2..n - 1).map(|k| format!("z^{}", k)));
            family(cls, &format!("y^2*z + z^{}", n - 1), params, &dirs)
        }
        Family::E => {
            let (base, dirs): (&str, &[&str]) = match n {
                6 => ("y^3 + z^4", &["y*z", "y^2", "z^2", "y*z^2", "z^3"]),
                7 => ("y^3 + y*z^3", &["y*z", "y^2", "z^2", "y*z^2", "z^3", "z^4"]),
                _ => ("y^3 + z^5", &["y*z", "y^2", "z^2", "y*z^2", "z^3", "y*z^3", "z^4"]),
            };
            family(cls, base, names("v", 0..dirs.len() as u32), &owned(dirs))
        }
    })
}

fn a_catalog(fam: &LocalFamily) -> Vec<Entry> {
    let n = fam.class.index();
    let mut out = Vec::new();
    if n >= 2 {
        out.push(entry("L", SingularityClass::a(1)).side(&["v2"]));
    }
    for m in 2..=n {
        let name = if m == n { "origin".to_string() } else { format!("V2^{}", m) };
        let mut s = entry(name, SingularityClass::a(m)).zero(&names("v", 2..m + 1));
        if m < n {
            s = s.side_owned(format!("v{}", m + 1));
        }
        out.push(s);
    }
    out
}

/// `I^k` as text.
fn i_power(k: u32) -> &'static str {
    ["1", "I", "(-1)", "(-I)"][(k % 4) as usize]
}

fn sign(k: u32) -> &'static str {
    if k.is_multiple_of(2) {
        ""
    } else {
        "-"
    }
}

fn d_catalog(fam: &LocalFamily) -> Vec<Entry> {
    let n = fam.class.index();
    let w = |k: u32| -> String {
        if k == 2 {
            "4*v1*v2 - v0^2".into()
        } else if k <= n - 2 {
            format!("v1*v{} + v{}", k, k - 1)
        } else {
            format!("v1 + v{}", n - 2)
        }
    };
    let mut out = vec![entry("L", SingularityClass::a(1)).side_owned(w(2))];
    for m in 2..n {
        let name = if m == 2 { "W2".to_string() } else { format!("W2^{}", m) };
        let mut s = entry(name, SingularityClass::a(m));
        for k in 2..=m {
            s = s.eq(w(k));
        }
        s = s.free(&["a"]).def("v1".into(), "a^2".into());
        if m <= n - 2 {
            // v_m = b^2 and v_{k-1} = -v_1 v_k below it.
            s = s.free(&["b"]);
            for k in 2..=m {
                s = s.def(format!("v{}", k), format!("{}a^{}*b^2", sign(m - k), 2 * (m - k)));
            }
            s = s.def("v0".into(), format!("2*{}*a^{}*b", i_power(m), m - 1));
            s = s.side(&["v1"]);
            if m < n - 1 {
                s = s.side_owned(w(m + 1));
            }
        } else {
            for k in 2..=n - 2 {
                s = s.def(format!("v{}", k), format!("{}a^{}", sign(n - 1 - k), 2 * (n - 1 - k)));
            }
            s = s.def("v0".into(), format!("2*{}*a^{}", i_power(n - 3), n - 2));
            s = s.side(&["v1"]);
        }
        out.push(s);
    }
    out.push(entry("V0^1", SingularityClass::a(3)).zero(&names("v", 0..2)).side(&["v2"]));
    for m in 2..=n - 2 {
        let name = if m == n - 2 { "origin".to_string() } else { format!("V0^{}", m) };
        let mut s = entry(name, SingularityClass::d(m + 2)).zero(&names("v", 0..m + 1));
        if m < n - 2 {
            s = s.side_owned(format!("v{}", m + 1));
        }
        out.push(s);
    }
    out
}

const W2: &str = "4*v1*v2 - v0^2";
const W3: &str = "v1^3*v4^2 - v2*(v1*v3 + v2)^2";
const V: &str = "4*v3^3 + 27*v4^2";

/// Double line direction `(w1 y + w2 z)^2` with `w2 = u w1`.
const A2_DEFS: &[(&str, &str)] = &[("v0", "2*w1*w2"), ("v1", "w1^2"), ("v2", "w2^2")];
const A3_DEFS: &[(&str, &str)] = &[("v1", "p"), ("v0", "2*p*u"), ("v2", "p*u^2"), ("v4", "u*(v3 + u^2)")];
const D5_DEFS: &[(&str, &str)] = &[("v0", "0"), ("v1", "0"), ("v2", "0"), ("v3", "-3*a^2"), ("v4", "-2*a^3")];

fn e6_catalog() -> Vec<Entry> {
    let w4 = "4*v1^3 - (v1*v3 + 3*v2)^2";
    let w5 = "v1*v3 + 3*v2";
    vec![
        entry("L", SingularityClass::a(1)).side(&[W2]),
        entry("W2", SingularityClass::a(2)).eqs(&[W2]).free(&["w1", "w2"]).defs(A2_DEFS).side(&["v1", W3]),
        entry("W2^3", SingularityClass::a(3)).eqs(&[W2, W3]).free(&["p", "u"]).defs(A3_DEFS).side(&["v1", w4]),
        entry("V0^2", SingularityClass::d(4)).zero(&names("v", 0..3)).side(&[V]),
        entry("W2^4", SingularityClass::a(4))
            .eqs(&[W2, W3, w4])
            .free(&["u"])
            .defs(&[
                ("v1", "(3*u^2 + v3)^2/4"),
                ("v0", "2*v1*u"),
                ("v2", "v1*u^2"),
                ("v4", "u*(v3 + u^2)"),
            ])
            .side(&["v1", "v2", w5]),
        entry("V&V0^2", SingularityClass::d(5)).eqs(&["v0", "v1", "v2", V]).free(&["a"]).defs(D5_DEFS).side(&["v3"]),
        entry("W&V0&V2&V4", SingularityClass::a(5))
            .eqs(&["v0", "v2", "v4", "v3^2 - 4*v1"])
            .defs(&[("v0", "0"), ("v2", "0"), ("v4", "0"), ("v1", "v3^2/4")])
            .side(&["v3"]),
        entry("origin", SingularityClass::e(6)).zero(&names("v", 0..5)),
    ]
}

/// Parameterization of the tilde-W strata of E7 and E8 from `w1, u, t`.
const E7_TAIL: &[(&str, &str)] = &[
    ("v0", "2*u*w1^2"),
    ("v1", "w1^2"),
    ("v2", "u^2*w1^2"),
    ("v3", "2*t*w1 - 3*u^2"),
    ("v4", "u*(v3 + u^2)"),
    ("v5", "t^2 + u"),
];

fn e7_catalog() -> Vec<Entry> {
    let w4 = "16*v1^5*v2 - ((v1*v3 + 3*v2)^2 - 4*v1^3*v5)^2";
    let w4_v1v2 = "16*v1^5*v2 - ((v1*v2 + 3*v2)^2 - 4*v1^3*v5)^2";
    let w5 = "v1*v5^2 - v2";
    let w5b = "v1*(v1^2 - 9*v2*v5)^2 - 81*v2^3";
    let w6 = "16*v1^5 - 729*v2^3";
    let v_prime = ["v3 + 3*v5^2", "v4 + 2*v5^3"];
    let with_tail = |s: Entry, pre: &[(&str, &str)]| s.defs(pre).defs(E7_TAIL).variant("v1v2", &[w4_v1v2]);
    vec![
        entry("L", SingularityClass::a(1)).side(&[W2]),
        entry("W2", SingularityClass::a(2)).eqs(&[W2]).free(&["w1", "w2"]).defs(A2_DEFS).side(&["v1", W3]),
        entry("W2^3", SingularityClass::a(3)).eqs(&[W2, W3]).free(&["p", "u"]).defs(A3_DEFS).side(&["v1", w4]),
        entry("V0^2", SingularityClass::d(4)).zero(&names("v", 0..3)).side(&[V]),
        entry("V&V0^2", SingularityClass::d(5))
            .eqs(&["v0", "v1", "v2", V])
            .free(&["a"])
            .defs(D5_DEFS)
            .side(&["v3", v_prime[0]]),
        entry("V0^4", SingularityClass::e(6)).zero(&names("v", 0..5)).side(&["v5"]),
        entry("V'&V0^2", SingularityClass::d(6))
            .eqs(&["v0", "v1", "v2", v_prime[0], v_prime[1]])
            .free(&["a"])
            .defs(D5_DEFS)
            .defs(&[("v5", "a")])
            .side(&["v5"]),
        with_tail(entry("W2^4", SingularityClass::a(4)).eqs(&[W2, W3, w4]).free(&["w1", "u", "t"]), &[])
            .side(&["v1", w5, w5b]),
        with_tail(entry("W2^5", SingularityClass::a(5)).eqs(&[W2, W3, w4, w5]).free(&["w1", "u"]), &[("t", "0")])
            .side(&["v1", "v2"]),
        with_tail(
            entry("W'2^5", SingularityClass::a(5)).eqs(&[W2, W3, w4, w5b]).free(&["u", "t"]),
            &[("w1", "-3*u*t")],
        )
        .side(&["v1", w6]),
        with_tail(
            entry("W'2^6", SingularityClass::a(6)).eqs(&[W2, W3, w4, w5b, w6]).free(&["t"]),
            &[("u", "4/3*t^2"), ("w1", "-3*u*t")],
        )
        .side(&["v1"]),
        entry("origin", SingularityClass::e(7)).zero(&names("v", 0..6)),
    ]
}

const E8_TAIL: &[(&str, &str)] = &[
    ("v0", "2*u*w1^2"),
    ("v1", "w1^2"),
    ("v2", "u^2*w1^2"),
    ("v3", "2*t*w1 - 3*u^2"),
    ("v4", "u*(v3 + u^2)"),
    ("v6", "t^2 + u*v5"),
];

fn e8_catalog() -> Vec<Entry> {
    let w4 = "16*v1^5*v2*v5^2 - ((v1*v3 + 3*v2)^2 - 4*v1^3*v6)^2";
    let w5 = "(4*v1^5*v5^2*(v1*v3 + 3*v2)^2 + 16*v1^7*(v1^2 + v1*v3*v5 + 3*v2*v5) - 9*v2*(v1*v3 + 3*v2)^4)\
              *(4*v1^5*v5^2*(v1*v3 + 3*v2)^2 + 16*v1^7*(v1^2 - v1*v3*v5 - 3*v2*v5) - 9*v2*(v1*v3 + 3*v2)^4)";
    let w6 = "(32*v1^9 - 2*v1^5*v5*(v1*v3 + 3*v2)*(8*v1^2 - 3*v2*v5 - v1*v3*v5) + (v1*v3 + 3*v2)^5)\
              *(32*v1^9 + 2*v1^5*v5*(v1*v3 + 3*v2)*(8*v1^2 + 3*v2*v5 + v1*v3*v5) - (v1*v3 + 3*v2)^5)";
    let w7 = "256*v2 - v1*v5^4";
    let v_prime = ["v3*v5^2 + 3*v6^2", "v4*v5^3 + 2*v6^3"];
    let v_second = "12*v6 + v5^3";
    let a5_pre: &[(&str, &str)] = &[("u", "(b^2 - v5^2)/12"), ("w1", "t*(v5 - b)/2")];
    let a6_pre: &[(&str, &str)] =
        &[("v5", "b - 8*c^2"), ("t", "c*b"), ("u", "(b^2 - v5^2)/12"), ("w1", "t*(v5 - b)/2")];
    let a7_pre: &[(&str, &str)] =
        &[("b", "-8*c^2"), ("v5", "b - 8*c^2"), ("t", "c*b"), ("u", "(b^2 - v5^2)/12"), ("w1", "t*(v5 - b)/2")];
    vec![
        entry("L", SingularityClass::a(1)).side(&[W2]),
        entry("W2", SingularityClass::a(2)).eqs(&[W2]).free(&["w1", "w2"]).defs(A2_DEFS).side(&["v1", W3]),
        entry("W2^3", SingularityClass::a(3)).eqs(&[W2, W3]).free(&["p", "u"]).defs(A3_DEFS).side(&["v1", w4]),
        entry("V0^2", SingularityClass::d(4)).zero(&names("v", 0..3)).side(&[V]),
        entry("V&V0^2", SingularityClass::d(5))
            .eqs(&["v0", "v1", "v2", V])
            .free(&["a"])
            .defs(D5_DEFS)
            .side(&["v3", v_prime[0]]),
        entry("V'&V0^2", SingularityClass::d(6))
            .eqs(&["v0", "v1", "v2", v_prime[0], v_prime[1]])
            .free(&["a"])
            .defs(D5_DEFS)
            .defs(&[("v6", "a*v5")])
            .side(&["v3", v_second]),
        entry("V''&V0^2", SingularityClass::d(7))
            .eqs(&["v0", "v1", "v2", v_prime[0], v_prime[1], v_second])
            .defs(&[("a", "-v5^2/12")])
            .defs(D5_DEFS)
            .defs(&[("v6", "a*v5")])
            .side(&["v5"]),
        entry("V0^4", SingularityClass::e(6)).zero(&names("v", 0..5)).side(&["v6"]),
        entry("V0^4&V6", SingularityClass::e(7)).zero(&names("v", 0..5)).zero(&["v6".into()]).side(&["v5"]),
        entry("W2^4", SingularityClass::a(4))
            .eqs(&[W2, W3, w4])
            .free(&["w1", "u", "t"])
            .defs(E8_TAIL)
            .side(&["v1", "v5", w5]),
        entry("W2^5", SingularityClass::a(5))
            .eqs(&[W2, W3, w4, w5])
            .free(&["t", "b"])
            .defs(a5_pre)
            .defs(E8_TAIL)
            .side(&["v1", w6]),
        entry("W2^6", SingularityClass::a(6))
            .eqs(&[W2, W3, w4, w5, w6])
            .free(&["c", "b"])
            .defs(a6_pre)
            .defs(E8_TAIL)
            .side(&["v1", w7]),
        entry("W2^7", SingularityClass::a(7))
            .eqs(&[W2, W3, w4, w5, w6, w7])
            .free(&["c"])
            .defs(a7_pre)
            .defs(E8_TAIL)
            .side(&["v1"]),
        entry("origin", SingularityClass::e(8)).zero(&names("v", 0..7)),
    ]
}

/// Strata of the local deformation family of `cls`, most generic first
/// within each chain.
pub fn stratum_catalog(cls: SingularityClass) -> Result<Vec<Stratum>, LabError> {
    let fam = local_family(cls)?;
    let specs = match (cls.family(), cls.index()) {
        (Family::A, _) => a_catalog(&fam),
        (Family::D, _) => d_catalog(&fam),
        (Family::E, 6) => e6_catalog(),
        (Family::E, 7) => e7_catalog(),
        (Family::E, 8) => e8_catalog(),
        _ => return Err(LabError::Unsupported(cls)),
    };
    Ok(specs.into_iter().map(|s| s.build(&fam)).collect())
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = loop {
        let k: i64 = rng.gen_range(-7..=7);
        if k != 0 {
            break k;
        }
    };
    let den: i64 = rng.gen_range(1..=7);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn evaluate_definitions(fam: &LocalFamily, s: &Stratum, free_vals: Vec<BigRational>) -> Result<Witness, LabError> {
    let mut env: Vec<(String, GaussRational)> =
        s.free.iter().cloned().zip(free_vals.into_iter().map(GaussRational::from)).collect();
    env.push(("I".into(), GaussRational::i()));
    for (name, expr) in &s.definitions {
        let ctx = VarCtx::new(env.iter().map(|(n, _)| n.clone()).collect(), Vec::new())?;
        let p = parse_rational_poly(expr, &ctx, &MonomialOrder::grevlex())?;
        let point: Vec<GaussRational> = env.iter().map(|(_, v)| v.clone()).collect();
        let value = p.map_coeffs(|c| GaussRational::from(c.clone())).evaluate(&point);
        env.push((name.clone(), value));
    }
    Ok(fam
        .params
        .iter()
        .map(|p| {
            let v = env.iter().rev().find(|(n, _)| n == p).map(|(_, v)| v.clone()).expect("every parameter valued");
            (p.clone(), v)
        })
        .collect())
}

fn values(fam: &LocalFamily, w: &Witness) -> Result<Vec<GaussRational>, LabError> {
    fam.params
        .iter()
        .map(|p| {
            w.get(p).cloned().ok_or_else(|| LabError::MissingValue(p.clone()))
        })
        .collect()
}

/// Draw a generic point of `s` from its parameterization, retrying when a
/// side condition vanishes.
pub fn sample_witness<R: Rng>(cls: SingularityClass, s: &Stratum, rng: &mut R) -> Result<Witness, LabError> {
    let fam = local_family(cls)?;
    for _ in 0..20 {
        let free: Vec<BigRational> = s.free.iter().map(|_| random_rational(rng)).collect();
        let w = evaluate_definitions(&fam, s, free)?;
        let vals = values(&fam, &w)?;
        if s.side_conditions.iter().all(|c| !c.eval(&vals).is_zero()) {
            return Ok(w);
        }
    }
    Err(LabError::NoWitness(s.name.clone()))
}

/// Check that `witness` lies on `s`, then compute the invariants of the
/// specialized family at the origin.
pub fn verify_stratum(cls: SingularityClass, s: &Stratum, witness: &Witness) -> Result<StratumRecord, LabError> {
    let fam = local_family(cls)?;
    let vals = values(&fam, witness)?;
    for (eq, text) in s.equations.iter().zip(&s.equation_texts) {
        if !eq.eval(&vals).is_zero() {
            return Err(LabError::OffStratum { stratum: s.name.clone(), equation: text.clone() });
        }
    }
    for (c, text) in s.side_conditions.iter().zip(&s.side_texts) {
        if c.eval(&vals).is_zero() {
            return Err(LabError::NotGeneric { stratum: s.name.clone(), condition: text.clone() });
        }
    }
    let variants = s
        .variants
        .iter()
        .map(|v| (v.label.clone(), v.equations.iter().all(|e| e.eval(&vals).is_zero())))
        .collect();
    let f = fam.poly.eval_params(&vals)?;
    let order = MonomialOrder::neg_grevlex();
    let opts = Options::default();
    let mu = milnor_local(&f, &order, &opts)?.dimension;
    let tau = tyurina_local(&f, &order, &opts)?.dimension;
    let corank = hessian_corank(&f);
    let class = classify_with_mu(&f, mu);
    let ok = class == Some(s.expected) && mu == tau;
    Ok(StratumRecord {
        name: s.name.clone(),
        equations: s.equation_texts.clone(),
        expected: s.expected,
        witness: witness.clone(),
        specialized: f,
        mu,
        tau,
        corank,
        class,
        variants,
        ok,
    })
}

/// [`verify_stratum`] at a witness drawn from a seeded generator.
pub fn verify_with_seed(cls: SingularityClass, s: &Stratum, seed: u64) -> Result<StratumRecord, LabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = sample_witness(cls, s, &mut rng)?;
    verify_stratum(cls, s, &w)
}
