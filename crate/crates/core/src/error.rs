use thiserror::Error;

/// Errors raised by the simulator, the gate catalog and the protocol harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    Index { index: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("state is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("non-finite amplitude")]
    NonFinite,

    #[error("unknown gate `{0}`")]
    UnknownGate(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("contract violated: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
