use thiserror::Error;

/// Errors raised while building or analysing complexes, panel structures and rings.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a complex on {m} vertices")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("{0:?} is not a simplex of the complex")]
    NotASimplex(Vec<u32>),

    #[error("the complex is not minimal: vertex {0} lies in no simplex")]
    NotMinimal(usize),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("panel {index} is not a subcomplex: {reason}")]
    NotASubcomplex { index: usize, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("sphere-pair spec has {got} entries, expected {expected}")]
    SpecLength { expected: usize, got: usize },

    #[error("boundary of boundary is nonzero in degree {degree}")]
    BoundarySquareNonzero { degree: i32 },

    #[error("cochain of degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },

    #[error("cochain does not vanish on the annihilating subcomplex")]
    AnnihilationViolated,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("rewrite did not terminate within {0} steps")]
    RewriteLimit(usize),

    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
