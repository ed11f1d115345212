use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BolError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid structure data: {0}")]
    InvalidData(String),
    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("subspace is not a subsystem: {0}")]
    NotASubsystem(String),
    #[error("ill-defined quotient: {0}")]
    IllDefinedQuotient(String),
    #[error("not a Bol algebra: {0}")]
    NotBol(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("envelope construction rejected: {0}")]
    Envelope(String),
    #[error("algebra has a nonzero binary product")]
    NonzeroBinary,
    #[error("radical strategies disagree: {0}")]
    StrategyDisagreement(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T, E = BolError> = std::result::Result<T, E>;
