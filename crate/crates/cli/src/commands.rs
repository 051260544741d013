use std::time::Instant;

use localstd_core::{BigRational, GaussRational, MonomialOrder, Poly, Scalar, VarCtx};
use localstd_engines::{buchberger, standard_basis, Options, PolySet, DEFAULT_STEP_BUDGET};
use localstd_invariants::{
    milnor_fused, milnor_global, milnor_local, tyurina_fused, tyurina_global, tyurina_local, FusedReport,
    InvariantError, InvariantReport,
};
use localstd_lab::{
    build_versal_family, classify_simple, hessian_corank, milnor_orlik, special_adjacency_family, stratum_catalog,
    verify_stratum, verify_with_seed, weight_vector, AdjacencyKind, LabError, SingularityClass, Witness,
};
use serde_json::{json, Value};

use crate::error::{CliError, GENERIC};
use crate::input::{context, order, parse_all, parse_one, parse_rational, read_input, split_list, Parsed};
use crate::render::{self, Envelope, Invocation, Timing};
use crate::{Cli, Command};

const LOCAL: &str = "neg-grevlex";
const GLOBAL: &str = "grevlex";
const DEFAULT_SEED: u64 = 1;

/// A report and the reduction steps spent on it, when known.
struct Outcome {
    report: Value,
    steps: Option<u64>,
}

impl Outcome {
    fn plain(report: Value) -> Self {
        Outcome { report, steps: None }
    }
}

#[derive(Clone, Copy)]
enum Pipeline {
    MilnorLocal,
    TyurinaLocal,
    MilnorGlobal,
    TyurinaGlobal,
}

impl Pipeline {
    fn default_order(self) -> &'static str {
        match self {
            Pipeline::MilnorLocal | Pipeline::TyurinaLocal => LOCAL,
            _ => GLOBAL,
        }
    }

    fn run<C: Scalar>(self, f: &Poly<C>, o: &MonomialOrder, opts: &Options) -> Result<InvariantReport<C>, InvariantError> {
        match self {
            Pipeline::MilnorLocal => milnor_local(f, o, opts),
            Pipeline::TyurinaLocal => tyurina_local(f, o, opts),
            Pipeline::MilnorGlobal => milnor_global(f, o, opts),
            Pipeline::TyurinaGlobal => tyurina_global(f, o, opts),
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Parse { .. } => "parse",
        Command::Groebner { .. } => "groebner",
        Command::StdBasis { .. } => "std-basis",
        Command::Milnor { .. } => "milnor",
        Command::Tyurina { .. } => "tyurina",
        Command::PolyMilnor { .. } => "poly-milnor",
        Command::PolyTyurina { .. } => "poly-tyurina",
        Command::MilnorFused { .. } => "milnor-fused",
        Command::TyurinaFused { .. } => "tyurina-fused",
        Command::Classify { .. } => "classify",
        Command::Deform { .. } => "deform",
        Command::Strata { .. } => "strata",
        Command::VerifyStratum { .. } => "verify-stratum",
        Command::Adjacency { .. } => "adjacency",
        Command::MilnorOrlik { .. } => "milnor-orlik",
    }
}

/// Run the invocation and return what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let start = Instant::now();
    let common = &cli.common;
    let budget = common.step_budget.unwrap_or(DEFAULT_STEP_BUDGET);
    let opts = Options::with_budget(budget);
    let (input, outcome) = match &cli.command {
        Command::Parse { input } => {
            let src = read_input(common, input)?;
            let out = parse_cmd(cli, &src)?;
            (Some(src), out)
        }
        Command::Groebner { input } | Command::StdBasis { input } => {
            let global = matches!(cli.command, Command::Groebner { .. });
            let src = read_input(common, input)?;
            let out = basis_cmd(cli, &src, global, &opts)?;
            (Some(src), out)
        }
        Command::Milnor { input }
        | Command::Tyurina { input }
        | Command::PolyMilnor { input }
        | Command::PolyTyurina { input } => {
            let pipeline = match cli.command {
                Command::Milnor { .. } => Pipeline::MilnorLocal,
                Command::Tyurina { .. } => Pipeline::TyurinaLocal,
                Command::PolyMilnor { .. } => Pipeline::MilnorGlobal,
                _ => Pipeline::TyurinaGlobal,
            };
            let src = read_input(common, input)?;
            let out = invariant_cmd(cli, &src, pipeline, &opts)?;
            (Some(src), out)
        }
        Command::MilnorFused { input, global_order } | Command::TyurinaFused { input, global_order } => {
            let milnor = matches!(cli.command, Command::MilnorFused { .. });
            let src = read_input(common, input)?;
            let out = fused_cmd(cli, &src, global_order.as_deref(), milnor, &opts)?;
            (Some(src), out)
        }
        Command::Classify { input } => {
            let src = read_input(common, input)?;
            let out = classify_cmd(cli, &src, &opts)?;
            (Some(src), out)
        }
        Command::Deform { input } => {
            let src = read_input(common, input)?;
            let out = deform_cmd(cli, &src, &opts)?;
            (Some(src), out)
        }
        Command::MilnorOrlik { input } => {
            let src = read_input(common, input)?;
            let out = milnor_orlik_cmd(cli, &src)?;
            (Some(src), out)
        }
        Command::Strata { class } => (Some(class.clone()), strata_cmd(class, common.seed.unwrap_or(DEFAULT_SEED))?),
        Command::VerifyStratum { class, name, witness } => {
            let out = verify_cmd(class, name, witness.as_deref(), common.seed.unwrap_or(DEFAULT_SEED))?;
            (Some(format!("{} {}", class, name)), out)
        }
        Command::Adjacency { kind, t, ambient } => (Some(kind.clone()), adjacency_cmd(kind, t.as_deref(), *ambient, &opts)?),
    };
    if !common.json {
        return Ok(render::text(&outcome.report));
    }
    let envelope = Envelope {
        command: command_name(&cli.command),
        invocation: Invocation {
            input,
            vars: common.vars.clone(),
            params: common.params.clone(),
            order: common.order.clone(),
            step_budget: budget,
            seed: common.seed,
        },
        report: &outcome.report,
        timing: Timing {
            reduction_steps: outcome.steps,
            elapsed_ms: common.wall_clock.then(|| start.elapsed().as_secs_f64() * 1000.0),
        },
    };
    let mut s = serde_json::to_string_pretty(&envelope).expect("serializable");
    s.push('\n');
    Ok(s)
}

fn parse_cmd(cli: &Cli, src: &str) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), GLOBAL, &ctx)?;
    let (poly, terms, degree) = match parse_one(src, &ctx, &o)? {
        Parsed::Rational(ps) => (ctx.fmt_poly(&ps[0]), ps[0].len(), ps[0].degree()),
        Parsed::Param(ps) => (ctx.fmt_poly(&ps[0]), ps[0].len(), ps[0].degree()),
    };
    Ok(Outcome::plain(json!({
        "poly": poly,
        "order": o.describe(ctx.vars()),
        "terms": terms,
        "degree": degree,
    })))
}

fn basis_of<C: Scalar>(ps: Vec<Poly<C>>, ctx: &VarCtx, o: &MonomialOrder, global: bool, opts: &Options) -> Result<Outcome, CliError> {
    let set = PolySet::new(ctx.arity(), o.clone(), ps)?;
    let b = if global { buchberger(&set, opts)? } else { standard_basis(&set, opts)? };
    let leading: Vec<String> =
        b.set.elements().iter().map(|p| ctx.fmt_monomial(p.leading_monomial().expect("nonzero"))).collect();
    Ok(Outcome {
        report: json!({
            "order": o.describe(ctx.vars()),
            "locality": o.classify(ctx.arity()).to_string(),
            "basis": render::polys(b.set.elements(), ctx),
            "leading": leading,
            "genericity_assumptions": b.assumptions.iter().map(|a| render::assumption(a, ctx)).collect::<Vec<_>>(),
        }),
        steps: Some(b.steps),
    })
}

fn basis_cmd(cli: &Cli, src: &str, global: bool, opts: &Options) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), if global { GLOBAL } else { LOCAL }, &ctx)?;
    match parse_all(&split_list(src), &ctx, &o)? {
        Parsed::Rational(ps) => basis_of(ps, &ctx, &o, global, opts),
        Parsed::Param(ps) => basis_of(ps, &ctx, &o, global, opts),
    }
}

fn invariant_of<C: Scalar>(f: &Poly<C>, ctx: &VarCtx, o: &MonomialOrder, p: Pipeline, opts: &Options) -> Result<Outcome, CliError> {
    let r = p.run(f, o, opts)?;
    Ok(Outcome { report: render::invariant(&r, ctx), steps: Some(r.steps) })
}

fn invariant_cmd(cli: &Cli, src: &str, p: Pipeline, opts: &Options) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), p.default_order(), &ctx)?;
    match parse_one(src, &ctx, &o)? {
        Parsed::Rational(ps) => invariant_of(&ps[0], &ctx, &o, p, opts),
        Parsed::Param(ps) => invariant_of(&ps[0], &ctx, &o, p, opts),
    }
}

fn fused_of<C: Scalar>(
    f: &Poly<C>,
    ctx: &VarCtx,
    local: &MonomialOrder,
    global: &MonomialOrder,
    milnor: bool,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let r: FusedReport<C> =
        if milnor { milnor_fused(f, local, global, opts)? } else { tyurina_fused(f, local, global, opts)? };
    Ok(Outcome {
        report: json!({
            "global": render::invariant(&r.global, ctx),
            "local": render::invariant(&r.local, ctx),
        }),
        steps: Some(r.global.steps + r.local.steps),
    })
}

fn fused_cmd(cli: &Cli, src: &str, global_order: Option<&str>, milnor: bool, opts: &Options) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let local = order(cli.common.order.as_deref(), LOCAL, &ctx)?;
    let global = order(global_order, GLOBAL, &ctx)?;
    match parse_one(src, &ctx, &global)? {
        Parsed::Rational(ps) => fused_of(&ps[0], &ctx, &local, &global, milnor, opts),
        Parsed::Param(ps) => fused_of(&ps[0], &ctx, &local, &global, milnor, opts),
    }
}

fn classify_cmd(cli: &Cli, src: &str, opts: &Options) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), LOCAL, &ctx)?;
    let f = parse_rational(src, &ctx, &o)?;
    let mu = milnor_local(&f, &o, opts)?;
    let tau = tyurina_local(&f, &o, opts)?;
    let class = classify_simple(&f)?;
    Ok(Outcome {
        report: json!({
            "poly": ctx.fmt_poly(&f),
            "class": class.map(|c| c.to_string()),
            "mu": mu.dimension,
            "tau": tau.dimension,
            "corank": hessian_corank(&f),
        }),
        steps: Some(mu.steps + tau.steps),
    })
}

fn deform_cmd(cli: &Cli, src: &str, opts: &Options) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), LOCAL, &ctx)?;
    let f = parse_rational(src, &ctx, &o)?;
    let fam = build_versal_family(&f, &o, opts)?;
    let fam_ctx = VarCtx::new(ctx.vars().to_vec(), fam.params.clone())?;
    Ok(Outcome::plain(json!({
        "base": ctx.fmt_poly(&fam.base),
        "order": o.describe(ctx.vars()),
        "tau": fam.tau(),
        "basis": fam.basis.iter().map(|m| ctx.fmt_monomial(m)).collect::<Vec<_>>(),
        "params": fam.params,
        "family": fam_ctx.fmt_poly(&fam.family),
    })))
}

fn milnor_orlik_cmd(cli: &Cli, src: &str) -> Result<Outcome, CliError> {
    let ctx = context(&cli.common)?;
    let o = order(cli.common.order.as_deref(), LOCAL, &ctx)?;
    let f = parse_rational(src, &ctx, &o)?;
    let w = weight_vector(&f).ok_or_else(|| CliError::new(GENERIC, "the polynomial is not quasi-homogeneous"))?;
    let value = milnor_orlik(&w)?;
    Ok(Outcome::plain(json!({
        "poly": ctx.fmt_poly(&f),
        "weights": w.weights.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "integer_weights": w.integer_weights.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "degree": w.degree.to_string(),
        "milnor_orlik": value.to_string(),
    })))
}

fn parse_class(s: &str) -> Result<SingularityClass, CliError> {
    Ok(s.parse::<SingularityClass>()?)
}

fn strata_cmd(class: &str, seed: u64) -> Result<Outcome, CliError> {
    let cls = parse_class(class)?;
    let fam = localstd_lab::local_family(cls)?;
    let mut records = Vec::new();
    let mut all_ok = true;
    for s in stratum_catalog(cls)? {
        let r = verify_with_seed(cls, &s, seed)?;
        all_ok &= r.ok;
        records.push(render::stratum(&r));
    }
    Ok(Outcome::plain(json!({
        "class": cls.to_string(),
        "family": fam.text,
        "seed": seed,
        "all_ok": all_ok,
        "strata": records,
    })))
}

/// `v0=1,v1=-2/3,v2=2*I`: each value is a rational expression in `I`.
fn parse_witness(text: &str) -> Result<Witness, CliError> {
    let ctx = VarCtx::from_names(&["I"], &[])?;
    let mut w = Witness::new();
    for item in split_list(text) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("witness entry `{}` is not of the form name=value", item)))?;
        let p = parse_rational(value, &ctx, &MonomialOrder::grevlex())?;
        let v = p.map_coeffs(|c| GaussRational::from(c.clone())).evaluate(&[GaussRational::i()]);
        w.insert(name.trim().to_string(), v);
    }
    Ok(w)
}

fn verify_cmd(class: &str, name: &str, witness: Option<&str>, seed: u64) -> Result<Outcome, CliError> {
    let cls = parse_class(class)?;
    let s = stratum_catalog(cls)?
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| LabError::UnknownStratum(name.to_string()))?;
    let r = match witness {
        Some(text) => verify_stratum(cls, &s, &parse_witness(text)?)?,
        None => verify_with_seed(cls, &s, seed)?,
    };
    Ok(Outcome::plain(json!({ "class": cls.to_string(), "record": render::stratum(&r) })))
}

fn adjacency_cmd(kind: &str, t: Option<&str>, ambient: usize, opts: &Options) -> Result<Outcome, CliError> {
    let kind: AdjacencyKind = kind.parse()?;
    let fam = special_adjacency_family(kind, ambient)?;
    let ctx = VarCtx::new(fam.vars.clone(), fam.params.clone())?;
    let mut report = json!({
        "kind": kind.to_string(),
        "source": kind.source().to_string(),
        "target": kind.target().to_string(),
        "vars": fam.vars,
        "family": ctx.fmt_poly(&fam.poly),
    });
    if let Some(t) = t {
        let t: BigRational = t.trim().parse().map_err(|_| CliError::usage(format!("`{}` is not a rational number", t)))?;
        let member = fam.at(&t);
        let o = MonomialOrder::neg_grevlex();
        let mu = milnor_local(&member, &o, opts)?.dimension;
        let obj = report.as_object_mut().expect("object");
        obj.insert("t".into(), json!(t.to_string()));
        obj.insert("member".into(), json!(ctx.fmt_poly(&member)));
        obj.insert("class".into(), json!(classify_simple(&member)?.map(|c| c.to_string())));
        obj.insert("mu".into(), json!(mu));
        obj.insert("corank".into(), json!(hessian_corank(&member)));
    }
    Ok(Outcome::plain(report))
}
