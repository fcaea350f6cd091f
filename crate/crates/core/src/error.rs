use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported field degree {0}; expected one of 1, 2, 4, 8")]
    UnsupportedFieldDegree(u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    Singular,

    #[error("wrong arity: cochain of degree {expected} evaluated on {got} arguments")]
    Arity { expected: usize, got: usize },

    #[error("weight {0} is not a weight of H²(L, L)")]
    NotAnH2Weight(String),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
