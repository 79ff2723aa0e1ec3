use thiserror::Error;

/// Errors raised by the library.
///
/// Resource limits are kept apart from input errors so that callers can
/// distinguish "the computation was cut short" from "the question was
/// malformed". A mathematical failure of Buchberger's algorithm cannot occur.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^31)")]
    ModulusTooLarge(u64),
    #[error("ring needs at least one variable")]
    NoVariables,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("weight vector must have {expected} strictly positive entries")]
    InvalidWeight { expected: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("witness {0} lies in the prime ideal")]
    WitnessInPrime(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
