use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions the
/// caller violated. Mathematical outcomes (failed checks, inexact encoding)
/// are reported as data, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value must be a positive integer, got zero")]
    Zero,
    #[error("malformed integer {0:?}")]
    Malformed(String),
    #[error("prefix must contain at least one term")]
    EmptyPrefix,
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("prefix length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("prefix has {len} terms, index {index} requested")]
    PrefixTooShort { len: usize, index: usize },
    #[error("term {index} is not 1, peeling hypothesis violated")]
    HypothesisViolated { index: usize },
    #[error("peeled term does not divide term {index}")]
    NotDivisible { index: usize },
    #[error("{chains} chains requested but the prime pool holds {pool}")]
    PoolExhausted { chains: usize, pool: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
