use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("reflection through the zero vector")]
    ZeroRoot,

    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: String, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("root generation exceeded the bound of {0} roots")]
    GenerationBound(usize),

    #[error("orbit enumeration exceeded the guard of {0} elements")]
    OrbitGuard(usize),

    #[error("{0}")]
    Domain(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("catalog parse error at line {line}: {message}")]
    CatalogParse { line: usize, message: String },

    #[error("catalog entry '{name}': {message}")]
    CatalogValidation { name: String, message: String },

    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),

    #[error("malformed space descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
