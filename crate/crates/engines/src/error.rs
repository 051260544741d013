use localstd_core::{CoreError, Locality};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("a {expected} order is required, got a {found} one")]
    OrderClass { expected: Locality, found: Locality },
    #[error("mixed orders are not supported")]
    MixedOrder,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("step budget of {limit} reduction steps exhausted")]
    StepBudget { limit: u64 },
    #[error("inputs disagree on arity or order")]
    Incompatible,
    #[error(transparent)]
    Core(#[from] CoreError),
}
