//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid penalty specification: {0}")]
    InvalidPenalty(String),

    #[error("invalid solver options: {0}")]
    InvalidOptions(String),

    #[error("invalid model specification: {0}")]
    InvalidModel(String),

    #[error("singular system: columns {columns:?} are linearly dependent")]
    Singular { columns: Vec<usize> },

    #[error("degenerate residuals: lag cross-product matrix is singular")]
    DegenerateResiduals,

    #[error("csv error at {path}: {message}")]
    Csv { path: String, message: String },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("invalid simulation config: {0}")]
    InvalidSimConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
