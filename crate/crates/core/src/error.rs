use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be at least 3, got {0}")]
    Dimension(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration would exceed {limit} levels")]
    TooManyLevels { limit: usize },

    #[error("spectrum has {count} states, more than the {limit} that can be expanded")]
    TooManyStates { count: u128, limit: u128 },

    #[error("l-sum still growing after {terms} terms")]
    NotConverged { terms: usize },

    #[error("could not bracket beta for entropy {target}")]
    BracketExhausted { target: f64 },

    #[error("entropy {target} outside feasible range [{min}, {max}]")]
    EntropyOutOfRange { target: f64, min: f64, max: f64 },

    #[error("malformed input at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
