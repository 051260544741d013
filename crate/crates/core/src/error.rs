use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid monomial order: {0}")]
    Order(String),
    #[error("invalid context: {0}")]
    Context(String),
    #[error("variable index {index} out of range for {arity} variables")]
    VariableIndex { index: usize, arity: usize },
    #[error("a coefficient denominator vanishes under the given parameter values")]
    VanishingDenominator,
    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
}
