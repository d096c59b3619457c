use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("unit ideal")]
    UnitIdeal,

    #[error("ideal is not zero-dimensional (dimension {0})")]
    PositiveDimension(usize),

    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("series not stabilized up to n = {nmax}; raise nmax")]
    NotStabilized { nmax: u64, values: Vec<u64> },

    #[error("sampling failed: {0}")]
    SamplingFailed(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
