use thiserror::Error;

/// Errors raised by the invariant engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("algebra mismatch: Y({0},{1}) vs Y({2},{3})")]
    AlgebraMismatch(u32, usize, u32, usize),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} does not divide {1}")]
    NotDivisor(u32, u32),

    #[error("subset must be non-empty")]
    EmptySubset,

    #[error("invalid divisor chain: {0}")]
    InvalidChain(String),

    #[error("cannot add invariant values with different half-power of lambda")]
    MixedParity,

    #[error("coherence violation: {0}")]
    Coherence(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input or failed validation.
    Validation,
    /// A mathematical precondition does not hold.
    Precondition,
    /// An internal consistency check failed.
    Coherence,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::InvalidChain(_) | Error::Invalid(_) => ErrorKind::Validation,
            Error::Coherence(_) => ErrorKind::Coherence,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
