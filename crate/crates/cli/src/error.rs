use localstd_core::{CoreError, Locality};
use localstd_engines::EngineError;
use localstd_expr::ParseError;
use localstd_invariants::{IdealKind, InvariantError};
use localstd_lab::LabError;

pub const GENERIC: u8 = 1;
pub const PARSE: u8 = 2;
pub const ORDER: u8 = 3;
pub const NOT_ISOLATED: u8 = 4;
pub const BUDGET: u8 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::new(PARSE, message)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::new(PARSE, e.to_string())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Order(_) | CoreError::Context(_) => PARSE,
            _ => GENERIC,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::OrderClass { .. } | EngineError::MixedOrder => ORDER,
            EngineError::StepBudget { .. } => BUDGET,
            _ => GENERIC,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::WrongOrder { .. } | InvariantError::MixedOrder => CliError::new(ORDER, e.to_string()),
            InvariantError::NotIsolated { kind, locality } => {
                let what = match kind {
                    IdealKind::Jacobian => "critical point",
                    IdealKind::Tyurina => "singular point",
                };
                let short = match locality {
                    Locality::Local => format!("non-isolated {} at the origin", what),
                    _ => format!("non-isolated {}s", what),
                };
                CliError::new(NOT_ISOLATED, format!("{} ({})", short, e))
            }
            InvariantError::StepBudget { .. } => CliError::new(BUDGET, e.to_string()),
            InvariantError::Engine(inner) => inner.into(),
            InvariantError::BoundTooSmall { .. } => CliError::new(GENERIC, e.to_string()),
        }
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        match e {
            LabError::Invariant(inner) => inner.into(),
            LabError::Core(inner) => inner.into(),
            LabError::Parse(inner) => inner.into(),
            LabError::InvalidClass(_) | LabError::UnknownStratum(_) | LabError::UnknownAdjacency(_) => {
                CliError::new(PARSE, e.to_string())
            }
            other => CliError::new(GENERIC, other.to_string()),
        }
    }
}
