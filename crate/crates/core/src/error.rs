use thiserror::Error;

/// Errors raised by the library. Axiom violations are not errors: validators
/// return reports, and only constructors that require a valid input convert a
/// failed report into [`Error::InvalidGroupoid`] or [`Error::InvalidAction`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus not prime: {0}")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown object {0}")]
    UnknownObject(usize),

    #[error("unknown morphism {0}")]
    UnknownMorphism(usize),

    #[error("groupoid has {found} morphisms, enumeration cap is {cap} (raise --max-morphisms)")]
    CapExceeded { found: usize, cap: usize },

    #[error("{found} subsets of S_G to enumerate, cap is {cap} (raise --max-sg-subsets)")]
    SubsetCapExceeded { found: usize, cap: usize },

    #[error("subgroupoid is not wide")]
    NotWide,

    #[error("subgroupoid {0} is not part of the wide-subgroupoid list")]
    UnknownSubgroupoid(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("skew groupoid ring is not associative: {0}")]
    NotAssociative(String),

    #[error("ill-defined class map: {0}")]
    IllDefined(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
