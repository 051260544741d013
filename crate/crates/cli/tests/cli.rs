use std::process::{Command, Output};

use localstd_core::{MonomialOrder, VarCtx};
use localstd_expr::parse_poly;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_localstd")).args(args).env_remove("LOCALSTD_STEP_BUDGET").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn keys(v: &Value) -> Vec<String> {
    v.as_object().unwrap().keys().cloned().collect()
}

#[test]
fn reference_examples() {
    let text = stdout(&["milnor", "--vars", "x,y", "x^5+y^5+x^2*y^2"]);
    assert!(text.contains("dimension: 11"), "{}", text);

    let out = run(&["poly-milnor", "--vars", "x,y,z", "x^2*z^2+y^2*z^2+x^2*y^2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-isolated critical points"));

    let r = json(&["milnor", "--vars", "x,y", "--params", "t", "x^3+y^4+x*y^2+t*x^2"]);
    assert_eq!(r["report"]["dimension"], 3);
    assert_eq!(r["report"]["quotient_basis"], serde_json::json!(["y^2", "y", "1"]));
    assert_eq!(r["report"]["genericity_assumptions"], serde_json::json!(["t != 0", "4*t-1 != 0"]));
}

#[test]
fn json_schema() {
    let r = json(&["tyurina", "--vars", "x,y", "x^3+y^4"]);
    assert_eq!(keys(&r), ["command", "invocation", "report", "timing"]);
    assert_eq!(r["command"], "tyurina");
    assert_eq!(
        keys(&r["report"]),
        ["ideal", "locality", "order", "basis", "leading", "quotient_basis", "dimension", "genericity_assumptions"]
    );
    assert_eq!(r["report"]["ideal"], "tyurina");
    assert_eq!(r["report"]["locality"], "local");
    assert_eq!(r["report"]["order"], "neg-grevlex");
    assert_eq!(r["invocation"]["vars"], serde_json::json!(["x", "y"]));
    assert!(r["timing"]["reduction_steps"].is_u64());
    assert!(r["timing"].get("elapsed_ms").is_none());

    let timed = json(&["tyurina", "--vars", "x,y", "x^3+y^4", "--wall-clock"]);
    assert!(timed["timing"]["elapsed_ms"].is_f64());

    let s = json(&["verify-stratum", "D6", "V0^2", "--seed", "3"]);
    let rec = &s["report"]["record"];
    for k in ["name", "equations", "expected", "witness", "mu", "tau", "ok"] {
        assert!(rec.get(k).is_some(), "missing {}", k);
    }
    assert_eq!((rec["mu"].as_u64(), rec["corank"].as_u64(), rec["class"].as_str()), (Some(4), Some(2), Some("D4")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["milnor-fused", "--vars", "x,y", "x^3+y^4+x*y^2", "--json"][..],
        &["strata", "E7", "--seed", "5", "--json"][..],
        &["std-basis", "--vars", "x,y", "--params", "t", "x^2+t*y^3, x*y", "--json"][..],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn default_orders_follow_the_subcommand() {
    assert_eq!(json(&["milnor", "--vars", "x,y", "x^2+y^3"])["report"]["order"], "neg-grevlex");
    assert_eq!(json(&["poly-milnor", "--vars", "x,y", "x^2+y^3"])["report"]["order"], "grevlex");
    assert_eq!(json(&["groebner", "--vars", "x,y", "x^2+y^3"])["report"]["order"], "grevlex");
    assert_eq!(json(&["std-basis", "--vars", "x,y", "x^2+y^3"])["report"]["order"], "neg-grevlex");
    let fused = json(&["tyurina-fused", "--vars", "x,y", "x^2+y^3"]);
    assert_eq!(fused["report"]["global"]["order"], "grevlex");
    assert_eq!(fused["report"]["local"]["order"], "neg-grevlex");
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&["milnor", "--vars", "x,y", ""]), 2);
    assert_eq!(code(&["milnor", "--vars", "x,y", "x+z"]), 2);
    assert_eq!(code(&["milnor", "--vars", "x,y", "x^y"]), 2);
    assert_eq!(code(&["milnor", "--vars", "x,y", "x*(y"]), 2);
    assert_eq!(code(&["milnor", "x^2"]), 2);
    assert_eq!(code(&["milnor", "--vars", "x,x", "x^2"]), 2);
    assert_eq!(code(&["milnor", "--vars", "x,y", "--order", "tdeg_max", "x^2"]), 2);
    assert_eq!(code(&["classify", "--vars", "x,y", "--params", "t", "t*x^2+y^2"]), 2);
    assert_eq!(code(&["strata", "E9"]), 2);
    assert_eq!(code(&["verify-stratum", "E6", "nowhere"]), 2);
    assert_eq!(code(&["adjacency", "A4<-E6"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn order_errors_exit_three() {
    assert_eq!(code(&["milnor", "--vars", "x,y", "--order", "grevlex", "x^2+y^3"]), 3);
    assert_eq!(code(&["poly-tyurina", "--vars", "x,y", "--order", "neg-lex", "x^2+y^3"]), 3);
    assert_eq!(code(&["groebner", "--vars", "x,y", "--order", "neg-lex", "x^2+y^3"]), 3);
    assert_eq!(code(&["milnor-fused", "--vars", "x,y", "--global-order", "neg-lex", "x^2+y^3"]), 3);
    assert_eq!(code(&["deform", "--vars", "x,y", "--order", "lex", "x^2+y^3"]), 3);
}

#[test]
fn budget_exhaustion_exits_five() {
    let f = "x^2+y^3+z^5+t^2+y*z^2+z^3+y*z^3+z^4";
    assert_eq!(code(&["milnor", "--vars", "x,y,z,t", "--step-budget", "0", f]), 5);
    let out = Command::new(env!("CARGO_BIN_EXE_localstd"))
        .args(["milnor", "--vars", "x,y,z,t", f])
        .env("LOCALSTD_STEP_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
    // The flag wins over the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_localstd"))
        .args(["milnor", "--vars", "x,y,z,t", "--step-budget", "1000", f])
        .env("LOCALSTD_STEP_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn file_input() {
    let dir = std::env::temp_dir().join(format!("localstd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quintic.txt");
    std::fs::write(&path, "x^5 + y^5\n + x^2*y^2\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json(&["poly-milnor", "--vars", "x,y", "--file", p])["report"]["dimension"], 16);
    assert_eq!(code(&["poly-milnor", "--vars", "x,y", "--file", p, "x^2"]), 2);
    assert_eq!(code(&["poly-milnor", "--vars", "x,y", "--file", dir.join("missing").to_str().unwrap()]), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

const CORPUS: [(&str, &str, &str); 10] = [
    ("x^5+y^5+x^2*y^2", "x,y", ""),
    ("x^2+y^3+z^4+t^2", "x,y,z,t", ""),
    ("x^3+y^4+x*y^2", "x,y", ""),
    ("y^2-x*(x-1)*(x-2)", "x,y", ""),
    ("y^2-x*(x-1)*(x-2)", "x,y,z", ""),
    ("x^3+y^4+x*y^2+t*x^2", "x,y", "t"),
    ("x^2+y^3+z^5+t^2+y*z^2+z^3+y*z^3+z^4", "x,y,z,t", ""),
    ("x^2*z^2+y^2*z^2+x^2*y^2", "x,y,z", ""),
    ("x^3/3 + x^2/2", "x", ""),
    ("(1/2 + 1/3*x)*x^2 - (1-4*t)*y^3/(2*t)", "x,y", "t"),
];

#[test]
fn print_then_parse_is_the_identity() {
    for (src, vars, params) in CORPUS {
        let mut args = vec!["parse", "--vars", vars];
        if !params.is_empty() {
            args.extend(["--params", params]);
        }
        let printed = json(&[args.clone(), vec![src]].concat())["report"]["poly"].as_str().unwrap().to_string();
        let again = json(&[args, vec![printed.as_str()]].concat())["report"]["poly"].as_str().unwrap().to_string();
        assert_eq!(printed, again, "{}", src);

        let v: Vec<&str> = vars.split(',').collect();
        let p: Vec<&str> = if params.is_empty() { vec![] } else { params.split(',').collect() };
        let ctx = VarCtx::from_names(&v, &p).unwrap();
        for o in [MonomialOrder::grevlex(), MonomialOrder::neg_lex()] {
            let f = parse_poly(src, &ctx, &o).unwrap();
            assert_eq!(parse_poly(&ctx.fmt_poly(&f), &ctx, &o).unwrap(), f, "{}", src);
        }
    }
}

#[test]
fn lab_subcommands() {
    let c = json(&["classify", "--vars", "x,y,z", "x^2+y^3+z^5"]);
    assert_eq!((c["report"]["class"].as_str(), c["report"]["mu"].as_u64()), (Some("E8"), Some(8)));
    let c = json(&["classify", "--vars", "x,y", "x^3+y^6"]);
    assert!(c["report"]["class"].is_null());

    let d = json(&["deform", "--vars", "y,z", "--order", "neg-grevlex/z,y", "y^3+z^4"]);
    assert_eq!(d["report"]["basis"], serde_json::json!(["y*z^2", "z^2", "y*z", "z", "y", "1"]));
    assert_eq!(d["report"]["tau"], 6);

    let m = json(&["milnor-orlik", "--vars", "y,z", "y^2*z+z^5"]);
    assert_eq!(m["report"]["weights"], serde_json::json!(["2/5", "1/5"]));
    assert_eq!(m["report"]["milnor_orlik"], "6");
    assert_eq!(code(&["milnor-orlik", "--vars", "x,y", "x^3+y^4+x*y^2"]), 1);

    let s = json(&["strata", "A4"]);
    assert_eq!(s["report"]["all_ok"], true);
    assert_eq!(s["report"]["strata"].as_array().unwrap().len(), 4);

    let w = "v0=-32768,v1=1024,v2=262144,v3=-1280,v4=16384,v5=-16,v6=320";
    let v = json(&["verify-stratum", "E8", "W2^7", "--witness", w]);
    assert_eq!(v["report"]["record"]["class"], "A7");
    assert_eq!(code(&["verify-stratum", "D6", "W2", "--witness", "v0=1,v1=1,v2=1,v3=1,v4=1"]), 1);
    assert_eq!(code(&["verify-stratum", "D6", "W2", "--witness", "v0=2"]), 1);

    let a = json(&["adjacency", "D5<-E6", "--t", "-2", "--ambient", "3"]);
    assert_eq!(a["report"]["vars"], serde_json::json!(["x1", "x2", "x3"]));
    assert_eq!(a["report"]["class"], "D5");
    assert_eq!(json(&["adjacency", "A7<-E8"])["report"]["family"].as_str().map(|s| s.contains('t')), Some(true));
}
