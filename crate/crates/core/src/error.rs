use thiserror::Error;

/// Errors raised by the symbolic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid rational literal `{0}`")]
    ParseRational(String),

    #[error("asymmetric data: {0}")]
    Asymmetric(String),

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: String, found: String },

    #[error("resonant weight delta = {delta}: {hint}")]
    ResonantWeight { delta: String, hint: String },

    #[error("unsupported dimension n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("operator order: {0}")]
    Order(String),

    #[error("missing coefficient `{0}`")]
    MissingCoefficient(&'static str),

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
