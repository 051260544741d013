//! Acceptance criteria 1-8, one pass/fail line each. Exits nonzero when any
//! criterion fails.

#[path = "../../invariants/tests/support/mod.rs"]
mod support;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use localstd_core::{rat, MonomialOrder, VarCtx};
use localstd_engines::Options;
use localstd_expr::parse_poly;
use localstd_invariants::{milnor_global, milnor_local, translate, tyurina_global, tyurina_local};
use localstd_lab::{milnor_orlik, normal_form, weight_vector, SingularityClass};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use support::macaulay::{default_bound, quotient_dimension};
use support::{jacobian, random_singular, tyurina_gens};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Inequalities `small <= large` collected from suites 1-3.
#[derive(Default)]
struct Bounds(Vec<(String, usize, usize)>);

impl Bounds {
    fn push(&mut self, label: impl Into<String>, small: usize, large: usize) {
        self.0.push((label.into(), small, large));
    }
}

struct Run {
    code: i32,
    json: Value,
    stderr: String,
    elapsed: Duration,
}

fn cli(args: &[&str]) -> Run {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_localstd")).args(args).arg("--json").output().expect("binary runs");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    Run {
        code: out.status.code().unwrap_or(-1),
        json: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        elapsed,
    }
}

fn report(args: &[&str]) -> Result<Value, String> {
    let r = cli(args);
    ensure(r.code == 0, || format!("{:?} exited {}: {}", args, r.code, r.stderr.trim()))?;
    ensure(r.elapsed < Duration::from_secs(5), || format!("{:?} took {:?}", args, r.elapsed))?;
    Ok(r.json["report"].clone())
}

fn dim(v: &Value) -> usize {
    v["dimension"].as_u64().expect("dimension") as usize
}

fn strings(v: &Value) -> BTreeSet<String> {
    v.as_array().map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn expect_dim(args: &[&str], want: usize) -> Result<usize, String> {
    let d = dim(&report(args)?);
    ensure(d == want, || format!("{:?}: dimension {} instead of {}", args, d, want))?;
    Ok(d)
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn reference_corpus(bounds: &mut Bounds) -> Check {
    let quintic = "x^5+y^5+x^2*y^2";
    let gm = expect_dim(&["poly-milnor", "--vars", "x,y", quintic], 16)?;
    let lm = expect_dim(&["milnor", "--vars", "x,y", quintic], 11)?;
    let gt = expect_dim(&["poly-tyurina", "--vars", "x,y", quintic], 10)?;
    let lt = expect_dim(&["tyurina", "--vars", "x,y", quintic], 10)?;
    bounds.push("quintic local/global milnor", lm, gm);
    bounds.push("quintic local/global tyurina", lt, gt);
    bounds.push("quintic tau/mu global", gt, gm);
    bounds.push("quintic tau/mu local", lt, lm);

    expect_dim(&["poly-milnor", "--vars", "x,y,z,t", "x^2+y^3+z^4+t^2"], 6)?;

    let cusp = "x^3+y^4+x*y^2";
    let fm = report(&["milnor-fused", "--vars", "x,y", cusp])?;
    let ft = report(&["tyurina-fused", "--vars", "x,y", cusp])?;
    let (g, l) = (dim(&fm["global"]), dim(&fm["local"]));
    ensure((g, l) == (6, 4), || format!("fused milnor ({}, {})", g, l))?;
    let (tg, tl) = (dim(&ft["global"]), dim(&ft["local"]));
    ensure((tg, tl) == (4, 4), || format!("fused tyurina ({}, {})", tg, tl))?;
    let basis = strings(&fm["local"]["quotient_basis"]);
    ensure(basis == set(&["1", "y", "x", "x^2"]), || format!("cusp local basis {:?}", basis))?;
    bounds.push("cusp fused milnor", l, g);
    bounds.push("cusp fused tyurina", tl, tg);
    bounds.push("cusp tau/mu global", tg, g);
    bounds.push("cusp tau/mu local", tl, l);

    let cubic = "y^2-x*(x-1)*(x-2)";
    let cg = expect_dim(&["poly-milnor", "--vars", "x,y", cubic], 2)?;
    let cl = expect_dim(&["milnor", "--vars", "x,y", cubic], 0)?;
    let ct = expect_dim(&["poly-tyurina", "--vars", "x,y", cubic], 0)?;
    bounds.push("cubic local/global", cl, cg);
    bounds.push("cubic tau/mu", ct, cg);
    let r = cli(&["poly-milnor", "--vars", "x,y,z", cubic]);
    ensure(r.code == 4, || format!("cubic in x,y,z exited {}", r.code))?;

    let ft_src = "x^3+y^4+x*y^2+t*x^2";
    let fam = report(&["milnor", "--vars", "x,y", "--params", "t", ft_src])?;
    ensure(dim(&fam) == 3, || format!("F_t generic dimension {}", dim(&fam)))?;
    let assumed = strings(&fam["genericity_assumptions"]);
    ensure(assumed.contains("t != 0") && assumed.contains("4*t-1 != 0"), || format!("F_t assumptions {:?}", assumed))?;
    let ctx = VarCtx::from_names(&["x", "y"], &["t"]).unwrap();
    let o = MonomialOrder::neg_grevlex();
    let pf = parse_poly(ft_src, &ctx, &o).unwrap();
    for (t, want) in [(rat(1, 4), 5), (rat(0, 1), 4)] {
        let f = pf.specialize(std::slice::from_ref(&t)).unwrap();
        let d = milnor_local(&f, &o, &Options::default()).map_err(|e| e.to_string())?.dimension;
        ensure(d == want, || format!("F_t at t={}: {} instead of {}", t, d, want))?;
    }

    let e8 = "x^2+y^3+z^5+t^2+y*z^2+z^3+y*z^3+z^4";
    let v = "x,y,z,t";
    let a = expect_dim(&["poly-milnor", "--vars", v, "--order", "grevlex", e8], 8)?;
    expect_dim(&["poly-milnor", "--vars", v, "--order", "lex", e8], 8)?;
    let tl = report(&["tyurina", "--vars", v, "--order", "neg-lex", e8])?;
    ensure(strings(&tl["quotient_basis"]) == set(&["y^2", "y", "z", "1"]), || format!("neg-lex basis {}", tl["quotient_basis"]))?;
    let tg = report(&["tyurina", "--vars", v, "--order", "neg-grevlex/t,z,y,x", e8])?;
    ensure(strings(&tg["quotient_basis"]) == set(&["z^2", "z", "y", "1"]), || format!("neg-grevlex basis {}", tg["quotient_basis"]))?;
    ensure(dim(&report(&["tyurina", "--vars", v, e8])?) == 4, || "neg-grevlex size".into())?;
    bounds.push("e8 surface tau/mu", dim(&tl), a);

    let r = cli(&["poly-milnor", "--vars", "x,y,z", "x^2*z^2+y^2*z^2+x^2*y^2"]);
    ensure(r.code == 4 && r.stderr.contains("non-isolated critical points"), || format!("exit {}: {}", r.code, r.stderr))
}

fn milnor_orlik_suite() -> Check {
    let start = Instant::now();
    let o = MonomialOrder::neg_grevlex();
    let opts = Options::default();
    let mut classes: Vec<SingularityClass> = (1..=12).map(SingularityClass::a).collect();
    classes.extend((4..=12).map(SingularityClass::d));
    classes.extend((6..=8).map(SingularityClass::e));
    for cls in classes {
        let n = cls.index() as usize;
        let curve = normal_form(cls, 2).map_err(|e| e.to_string())?;
        let w = weight_vector(&curve).ok_or_else(|| format!("{} has no weights", cls))?;
        let mo = milnor_orlik(&w).map_err(|e| e.to_string())?;
        ensure(mo == rat(n as i64, 1), || format!("{}: Milnor-Orlik {}", cls, mo))?;
        for m in 2..=4 {
            let f = normal_form(cls, m).map_err(|e| e.to_string())?;
            let mu = milnor_local(&f, &o, &opts).map_err(|e| e.to_string())?.dimension;
            let tau = tyurina_local(&f, &o, &opts).map_err(|e| e.to_string())?.dimension;
            ensure((mu, tau) == (n, n), || format!("{} in {} variables: ({}, {})", cls, m, mu, tau))?;
        }
    }
    ensure(start.elapsed() < Duration::from_secs(1), || format!("took {:?}", start.elapsed()))
}

const PLAN: [(usize, u32); 25] = [
    (2, 3), (2, 4), (2, 5), (2, 5), (2, 4), (2, 3), (2, 5), (2, 4), (2, 5), (2, 3),
    (2, 4), (2, 5), (2, 5), (2, 4), (2, 5),
    (3, 3), (3, 3), (3, 3), (3, 3), (3, 3), (3, 3), (3, 4), (3, 3), (3, 3), (3, 3),
];

fn oracle_suite(bounds: &mut Bounds) -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let opts = Options::default();
    for (k, &(arity, degree)) in PLAN.iter().enumerate() {
        let mut attempts = 0;
        loop {
            attempts += 1;
            ensure(attempts < 50, || format!("no isolated instance for slot {}", k))?;
            let f = random_singular(&mut rng, arity, degree, 3 + 2 * arity);
            if f.degree() < 2 {
                continue;
            }
            let j = jacobian(&f);
            let t = tyurina_gens(&f);
            let Some(mu) = quotient_dimension(&j, arity, default_bound(&j, arity)) else { continue };
            let Some(tau) = quotient_dimension(&t, arity, default_bound(&t, arity)) else { continue };
            let g = MonomialOrder::grevlex();
            let gm = milnor_global(&f, &g, &opts).map_err(|e| e.to_string())?.dimension;
            let gt = tyurina_global(&f, &g, &opts).map_err(|e| e.to_string())?.dimension;
            ensure((gm, gt) == (mu, tau), || format!("slot {}: engines ({}, {}) oracle ({}, {})", k, gm, gt, mu, tau))?;
            let l = MonomialOrder::neg_grevlex();
            let lm = milnor_local(&f, &l, &opts).map_err(|e| e.to_string())?.dimension;
            let lt = tyurina_local(&f, &l, &opts).map_err(|e| e.to_string())?.dimension;
            bounds.push(format!("oracle {} tau/mu", k), gt, gm);
            bounds.push(format!("oracle {} local/global milnor", k), lm, gm);
            bounds.push(format!("oracle {} local/global tyurina", k), lt, gt);
            bounds.push(format!("oracle {} local tau/mu", k), lt, lm);
            break;
        }
    }
    ensure(start.elapsed() < Duration::from_secs(60), || format!("took {:?}", start.elapsed()))
}

fn inequalities(bounds: &Bounds) -> Check {
    ensure(!bounds.0.is_empty(), || "no runs recorded".into())?;
    for (label, small, large) in &bounds.0 {
        ensure(small <= large, || format!("{}: {} > {}", label, small, large))?;
    }
    Ok(())
}

fn local_to_global() -> Check {
    let src = "x^3/3 + x^2/2";
    let total = expect_dim(&["poly-milnor", "--vars", "x", src], 2)?;
    let at_origin = expect_dim(&["milnor", "--vars", "x", src], 1)?;
    let ctx = VarCtx::from_names(&["x"], &[]).unwrap();
    let f = localstd_expr::parse_rational_poly(src, &ctx, &MonomialOrder::neg_grevlex()).unwrap();
    let moved = ctx.fmt_poly(&translate(&f, &[rat(-1, 1)]));
    let at_minus_one = expect_dim(&["milnor", "--vars", "x", &moved], 1)?;
    ensure(at_origin + at_minus_one == total, || format!("{} + {} != {}", at_origin, at_minus_one, total))
}

/// Stratum name, class and Milnor number, in catalog order.
type Catalog = &'static [(&'static str, &'static str, u64)];

const STRATA: [(&str, Catalog); 4] = [
    (
        "D6",
        &[
            ("L", "A1", 1),
            ("W2", "A2", 2),
            ("W2^3", "A3", 3),
            ("W2^4", "A4", 4),
            ("W2^5", "A5", 5),
            ("V0^1", "A3", 3),
            ("V0^2", "D4", 4),
            ("V0^3", "D5", 5),
            ("origin", "D6", 6),
        ],
    ),
    (
        "E6",
        &[
            ("L", "A1", 1),
            ("W2", "A2", 2),
            ("W2^3", "A3", 3),
            ("V0^2", "D4", 4),
            ("W2^4", "A4", 4),
            ("V&V0^2", "D5", 5),
            ("W&V0&V2&V4", "A5", 5),
            ("origin", "E6", 6),
        ],
    ),
    (
        "E7",
        &[
            ("L", "A1", 1),
            ("W2", "A2", 2),
            ("W2^3", "A3", 3),
            ("V0^2", "D4", 4),
            ("V&V0^2", "D5", 5),
            ("V0^4", "E6", 6),
            ("V'&V0^2", "D6", 6),
            ("W2^4", "A4", 4),
            ("W2^5", "A5", 5),
            ("W'2^5", "A5", 5),
            ("W'2^6", "A6", 6),
            ("origin", "E7", 7),
        ],
    ),
    (
        "E8",
        &[
            ("L", "A1", 1),
            ("W2", "A2", 2),
            ("W2^3", "A3", 3),
            ("V0^2", "D4", 4),
            ("V&V0^2", "D5", 5),
            ("V'&V0^2", "D6", 6),
            ("V''&V0^2", "D7", 7),
            ("V0^4", "E6", 6),
            ("V0^4&V6", "E7", 7),
            ("W2^4", "A4", 4),
            ("W2^5", "A5", 5),
            ("W2^6", "A6", 6),
            ("W2^7", "A7", 7),
            ("origin", "E8", 8),
        ],
    ),
];

fn strata_suite() -> Check {
    let start = Instant::now();
    for (cls, table) in STRATA {
        for seed in ["11", "12", "13"] {
            let r = cli(&["strata", cls, "--seed", seed]);
            ensure(r.code == 0, || format!("strata {} exited {}: {}", cls, r.code, r.stderr.trim()))?;
            let records = r.json["report"]["strata"].as_array().cloned().unwrap_or_default();
            ensure(records.len() == table.len(), || format!("{}: {} strata", cls, records.len()))?;
            for (rec, &(name, class, mu)) in records.iter().zip(table) {
                let got = (rec["name"].as_str(), rec["class"].as_str(), rec["mu"].as_u64(), rec["tau"].as_u64());
                ensure(got == (Some(name), Some(class), Some(mu), Some(mu)) && rec["ok"] == true, || {
                    format!("{} seed {}: {:?} expected ({}, {}, {})", cls, seed, got, name, class, mu)
                })?;
                if class.starts_with('D') || class.starts_with('E') {
                    ensure(rec["corank"] == 2, || format!("{} {}: corank {}", cls, name, rec["corank"]))?;
                }
            }
        }
    }
    ensure(start.elapsed() < Duration::from_secs(120), || format!("took {:?}", start.elapsed()))
}

fn adjacency_suite() -> Check {
    let start = Instant::now();
    let mut kinds: Vec<String> = (4..=9).map(|n| format!("A{}<-D{}", n - 1, n)).collect();
    kinds.extend(["A5<-E6", "D5<-E6", "A6<-E7", "D6<-E7", "A7<-E8", "D7<-E8"].map(String::from));
    for kind in &kinds {
        let target = kind.split("<-").next().unwrap();
        let index: u64 = target[1..].parse().unwrap();
        for t in ["1", "2", "-1", "1/2", "3"] {
            let r = report(&["adjacency", kind, "--t", t])?;
            ensure(r["class"].as_str() == Some(target) && r["mu"].as_u64() == Some(index), || {
                format!("{} at t={}: class {} mu {}", kind, t, r["class"], r["mu"])
            })?;
            if target.starts_with('A') {
                ensure(r["corank"].as_u64().is_some_and(|c| c <= 1), || format!("{} at t={}: corank {}", kind, t, r["corank"]))?;
            }
        }
    }
    ensure(start.elapsed() < Duration::from_secs(60), || format!("took {:?}", start.elapsed()))
}

fn engine_guards() -> Check {
    let f = "x^3+y^4";
    let mixed = "weighted:1,-1:grevlex";
    let cases: [(&[&str], &str); 9] = [
        (&["milnor", "--order", "grevlex"], "LOCAL"),
        (&["tyurina", "--order", "lex"], "LOCAL"),
        (&["poly-milnor", "--order", "neg-grevlex"], "GLOBAL"),
        (&["poly-tyurina", "--order", "neg-lex"], "GLOBAL"),
        (&["milnor", "--order", mixed], ""),
        (&["poly-milnor", "--order", mixed], ""),
        (&["milnor-fused", "--order", mixed], ""),
        (&["groebner", "--order", mixed], ""),
        (&["std-basis", "--order", mixed], ""),
    ];
    for (args, word) in cases {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--vars", "x,y", f]);
        let r = cli(&full);
        ensure(r.code == 3 && r.stderr.contains(word), || format!("{:?}: exit {} {}", args, r.code, r.stderr.trim()))?;
    }
    Ok(())
}

fn main() {
    let mut bounds = Bounds::default();
    let mut results: Vec<(u32, &str, Check, Duration)> = Vec::new();
    let mut record = |n: u32, name: &'static str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let r = f();
        results.push((n, name, r, start.elapsed()));
    };
    record(1, "reference corpus", &mut || reference_corpus(&mut bounds));
    record(2, "Milnor-Orlik property suite", &mut milnor_orlik_suite);
    record(3, "brute-force oracle equivalence", &mut || oracle_suite(&mut bounds));
    record(4, "local <= global and tau <= mu", &mut || inequalities(&bounds));
    record(5, "local-to-global sum", &mut local_to_global);
    record(6, "stratification witnesses", &mut strata_suite);
    record(7, "adjacency families", &mut adjacency_suite);
    record(8, "engine guards", &mut engine_guards);
    let mut failed = 0;
    for (n, name, r, t) in &results {
        match r {
            Ok(()) => println!("criterion {} ({}): PASS [{:.2?}]", n, name, t),
            Err(e) => {
                failed += 1;
                println!("criterion {} ({}): FAIL [{:.2?}] {}", n, name, t, e);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
