use localstd_core::{MonomialOrder, ParamPoly, QPoly, VarCtx};
use localstd_expr::parse_poly;

use crate::error::CliError;
use crate::Common;

/// The positional input or the contents of `--file`, never both.
pub fn read_input(common: &Common, positional: &Option<String>) -> Result<String, CliError> {
    match (positional, &common.file) {
        (Some(_), Some(_)) => Err(CliError::usage("give the input either inline or with --file, not both")),
        (Some(s), None) => Ok(s.clone()),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::new(crate::error::GENERIC, format!("cannot read {}: {}", path.display(), e))),
        (None, None) => Err(CliError::usage("missing input polynomial")),
    }
}

pub fn context(common: &Common) -> Result<VarCtx, CliError> {
    if common.vars.is_empty() {
        return Err(CliError::usage("--vars is required for polynomial input"));
    }
    Ok(VarCtx::new(common.vars.clone(), common.params.clone())?)
}

pub fn order(text: Option<&str>, default: &str, ctx: &VarCtx) -> Result<MonomialOrder, CliError> {
    Ok(MonomialOrder::parse(text.unwrap_or(default), ctx.vars())?)
}

/// Generator lists are separated by commas, semicolons or newlines.
pub fn split_list(text: &str) -> Vec<&str> {
    text.split([',', ';', '\n']).map(str::trim).filter(|s| !s.is_empty()).collect()
}

/// Parsed input: plain rational coefficients when no parameters are
/// declared, rational functions in the parameters otherwise.
pub enum Parsed {
    Rational(Vec<QPoly>),
    Param(Vec<ParamPoly>),
}

pub fn parse_all(sources: &[&str], ctx: &VarCtx, order: &MonomialOrder) -> Result<Parsed, CliError> {
    let polys = sources.iter().map(|s| parse_poly(s, ctx, order)).collect::<Result<Vec<_>, _>>()?;
    if ctx.params().is_empty() {
        Ok(Parsed::Rational(polys.iter().map(|p| p.to_rational().expect("no parameters declared")).collect()))
    } else {
        Ok(Parsed::Param(polys))
    }
}

pub fn parse_one(src: &str, ctx: &VarCtx, order: &MonomialOrder) -> Result<Parsed, CliError> {
    parse_all(&[src], ctx, order)
}

pub fn parse_rational(src: &str, ctx: &VarCtx, order: &MonomialOrder) -> Result<QPoly, CliError> {
    Ok(localstd_expr::parse_rational_poly(src, ctx, order)?)
}
