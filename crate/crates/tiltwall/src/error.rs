use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient space mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("operation requires ambient P3, got {0}")]
    RequiresP3(String),
    #[error("operation requires a surface class, got {0}")]
    RequiresSurface(String),
    #[error("third Chern character component is missing")]
    MissingCh3,
    #[error("vertical walls are not supported here")]
    VerticalWall,
    #[error("the zero polynomial cannot be compared")]
    ZeroPolynomial,
    #[error("lattice violation: {0}")]
    LatticeViolation(String),
    #[error("class shape not covered by the bound table: {0}")]
    ShapeMismatch(String),
    #[error("enumeration request is not finite: {0}")]
    InfiniteSearch(String),
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
