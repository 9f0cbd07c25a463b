use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    NonExactDivision(String),
    #[error("parameter sequence too short: need {needed} entries, have {available}")]
    InsufficientParameters { needed: usize, available: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid strict partition: {0}")]
    InvalidPartition(String),
    #[error("{0} is not Grassmannian")]
    NotGrassmannian(String),
    #[error("generator {gen} is not available in type {ty}")]
    InvalidGenerator { gen: String, ty: String },
    #[error("type D permutation must change an even number of signs: {0}")]
    ParityViolation(String),
    #[error("reflection s_{0}{0} does not exist in type D")]
    NoSignReflection(u32),
    #[error("Pfaffian input is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetric(usize, usize),
    #[error("polynomial is not in the span of the basis: residual leading term {0}")]
    NotInSpan(String),
    #[error("integrality failure: {0}")]
    Integrality(String),
    #[error("stability check failed: {0}")]
    Unstable(String),
    #[error("recursion limit exceeded for {0}")]
    RecursionLimit(String),
    #[error("transition recursion left the index window for {0}")]
    WindowExceeded(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
