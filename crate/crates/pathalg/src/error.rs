use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quotient is not finite-dimensional below path length {0}")]
    NonTerminating(usize),
    #[error("relations are not invariant under the dash-swapping anti-automorphism")]
    PresentationNotSelfDual,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("unknown presentation {0:?}")]
    UnknownPresentation(String),
    #[error("module shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tilting construction did not stabilise after {0} passes")]
    NonConvergence(usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
