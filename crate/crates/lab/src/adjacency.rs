//! Explicit one-parameter deformations realizing adjacencies.

use std::fmt;
use std::str::FromStr;

use localstd_core::{BigRational, GaussPoly, GaussRational, MonomialOrder, ParamPoly, VarCtx};
use localstd_expr::parse_poly;

use crate::class::SingularityClass;
use crate::LabError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdjacencyKind {
    /// `A_{n-1} <- D_n`, `n >= 4`.
    DToA(u32),
    E6ToA5,
    E6ToD5,
    E7ToA6,
    E7ToD6,
    E8ToA7,
    E8ToD7,
}

impl AdjacencyKind {
    pub fn all_exceptional() -> [AdjacencyKind; 6] {
        use AdjacencyKind::*;
        [E6ToA5, E6ToD5, E7ToA6, E7ToD6, E8ToA7, E8ToD7]
    }

    pub fn source(&self) -> SingularityClass {
        use AdjacencyKind::*;
        match *self {
            DToA(n) => SingularityClass::d(n),
            E6ToA5 | E6ToD5 => SingularityClass::e(6),
            E7ToA6 | E7ToD6 => SingularityClass::e(7),
            E8ToA7 | E8ToD7 => SingularityClass::e(8),
        }
    }

    pub fn target(&self) -> SingularityClass {
        use AdjacencyKind::*;
        match *self {
            DToA(n) => SingularityClass::a(n - 1),
            E6ToA5 => SingularityClass::a(5),
            E6ToD5 => SingularityClass::d(5),
            E7ToA6 => SingularityClass::a(6),
            E7ToD6 => SingularityClass::d(6),
            E8ToA7 => SingularityClass::a(7),
            E8ToD7 => SingularityClass::d(7),
        }
    }

    /// Curve part in `x = x_N`, `y = x_{N+1}`; `I` squares to -1.
    fn curve_text(&self) -> String {
        use AdjacencyKind::*;
        match *self {
            DToA(n) if n % 2 == 0 => {
                let m = (n - 4) / 2;
                let mut s = format!("x^2*y + y^{} + t*(x + I*t^{}*y)^2", n - 1, m);
                for k in 3..=2 * m + 2 {
                    s.push_str(&format!(" + (-t)^{}*y^{}", 2 * m + 3 - k, k));
                }
                s
            }
            DToA(n) => {
                let m = (n - 5) / 2;
                let mut s = format!("x^2*y + y^{} + t^2*(x + t^{}*y)^2", n - 1, 2 * m + 1);
                for k in 3..=2 * m + 3 {
                    s.push_str(&format!(" + (-t^2)^{}*y^{}", 2 * m + 4 - k, k));
                }
                s
            }
            E6ToA5 => "x^3 + y^4 + t^2*x^2 + 2*t*x*y^2".into(),
            E6ToD5 => "x^3 + y^4 - 3*t^2*x*y^2 - 2*t^3*y^3".into(),
            E7ToA6 => "x^3 + x*y^3 + 432*t^3*(x + 4*t*y)^2 - 120*t^2*x*y^2 - 416*t^3*y^3 + 7*t*y^4".into(),
            E7ToD6 => "x^3 + x*y^3 - 3*t^2*x*y^2 - 2*t^3*y^3 + t*y^4".into(),
            E8ToA7 => "x^3 + y^5 + t^5*(x - t^2*y)^2 - 5*t^4*x*y^2 + 4*t^6*y^3 - 4*t*x*y^3 + 5*t^3*y^4".into(),
            E8ToD7 => "x^3 + y^5 - 27*t^4*x*y^2 + 54*t^6*y^3 - 6*t*x*y^3 + 18*t^3*y^4".into(),
        }
    }
}

impl fmt::Display for AdjacencyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<-{}", self.target(), self.source())
    }
}

impl FromStr for AdjacencyKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let bad = || LabError::UnknownAdjacency(s.to_string());
        let (target, source) = s.split_once("<-").ok_or_else(bad)?;
        let target: SingularityClass = target.parse().map_err(|_| bad())?;
        let source: SingularityClass = source.parse().map_err(|_| bad())?;
        let candidates = AdjacencyKind::all_exceptional()
            .into_iter()
            .chain((source.family() == crate::Family::D).then_some(AdjacencyKind::DToA(source.index())));
        candidates.into_iter().find(|k| k.source() == source && k.target() == target).ok_or_else(bad)
    }
}

/// A family `f_t` in the variables `vars` with parameters `t` and `I`.
#[derive(Clone, Debug)]
pub struct AdjacencyFamily {
    pub kind: AdjacencyKind,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub poly: ParamPoly,
}

impl AdjacencyFamily {
    /// The member at `t`, with `I` replaced by `i`.
    pub fn at(&self, t: &BigRational) -> GaussPoly {
        self.poly
            .eval_params(&[GaussRational::from(t.clone()), GaussRational::i()])
            .expect("polynomial in the parameters")
    }
}

/// The family realizing `kind` in `ambient_dim` variables: squares of
/// `x1 .. x_{N-1}` plus the curve family in `x_N, x_{N+1}`. Two variables
/// are named `x, y`.
pub fn special_adjacency_family(kind: AdjacencyKind, ambient_dim: usize) -> Result<AdjacencyFamily, LabError> {
    if let AdjacencyKind::DToA(n) = kind {
        if n < 4 {
            return Err(LabError::UnknownAdjacency(format!("A{}<-D{}", n.saturating_sub(1), n)));
        }
    }
    if ambient_dim < 2 {
        return Err(LabError::AmbientTooSmall { class: kind.source(), min: 2 });
    }
    let vars: Vec<String> = if ambient_dim == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=ambient_dim).map(|i| format!("x{}", i)).collect()
    };
    let mut text = kind.curve_text();
    if ambient_dim > 2 {
        let (x, y) = (&vars[ambient_dim - 2], &vars[ambient_dim - 1]);
        // Rename in two steps so `x` inside `x_N` is not touched twice.
        text = text.replace('x', "\u{1}").replace('y', y).replace('\u{1}', x);
        let squares: Vec<String> = vars[..ambient_dim - 2].iter().map(|v| format!("{}^2", v)).collect();
        text = format!("{} + {}", squares.join(" + "), text);
    }
    let params = vec!["t".to_string(), "I".to_string()];
    let ctx = VarCtx::new(vars.clone(), params.clone())?;
    let poly = parse_poly(&text, &ctx, &MonomialOrder::neg_grevlex())?;
    Ok(AdjacencyFamily { kind, vars, params, poly })
}
