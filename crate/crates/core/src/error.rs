use thiserror::Error;

/// Failure modes shared by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("quiver has a directed cycle through {}", .0.join(" -> "))]
    CyclicQuiver(Vec<String>),
    #[error("duplicate name: {0}")]
    DuplicateName(String),
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),
    #[error("not perfect: {0}")]
    NotPerfect(String),
    #[error("tensor product is not derivable without resolving: {0}")]
    NotDerivable(String),
    #[error("ring is not regular: {0}")]
    NonRegularRing(String),
    #[error("poset map is not monotone: {0}")]
    MonotonicityViolation(String),
    #[error("universe is not closed: {0}")]
    UniverseNotClosed(String),
    #[error("ring is not a field: {0}")]
    NotAField(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported quiver: {0}")]
    UnsupportedQuiver(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnsupportedRing(_) => "UnsupportedRing",
            Error::RingMismatch(_) => "RingMismatch",
            Error::CyclicQuiver(_) => "CyclicQuiver",
            Error::DuplicateName(_) => "DuplicateName",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::NotPerfect(_) => "NotPerfect",
            Error::NotDerivable(_) => "NotDerivable",
            Error::NonRegularRing(_) => "NonRegularRing",
            Error::MonotonicityViolation(_) => "MonotonicityViolation",
            Error::UniverseNotClosed(_) => "UniverseNotClosed",
            Error::NotAField(_) => "NotAField",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::InvalidFiltration(_) => "InvalidFiltration",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Invalid(_) => "Invalid",
            Error::Parse(_) => "Parse",
            Error::UnsupportedQuiver(_) => "UnsupportedQuiver",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
