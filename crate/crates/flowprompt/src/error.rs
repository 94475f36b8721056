//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Sampling from a buffer that has no entries yet.
    #[error("buffer is empty; warm it up before sampling")]
    EmptyBuffer,

    /// A batch operation received zero items.
    #[error("batch is empty")]
    EmptyBatch,

    /// Sequence length does not match the policy's configured length.
    #[error("sequence length {got} does not match configured length {want}")]
    LengthMismatch { want: usize, got: usize },

    /// Enumeration request over a space above the configured cap.
    #[error("sequence space of size {size} exceeds enumeration cap {cap}")]
    TooLarge { size: u64, cap: u64 },

    /// A correct count reached the reward without its positive floor.
    #[error("correct count must be positive, got {0}")]
    NonPositiveCount(f64),

    /// Two distributions cannot be compared.
    #[error("distribution support mismatch: {0}")]
    SupportMismatch(String),

    /// Bad or missing configuration.
    #[error("config error: {0}")]
    Config(String),

    /// Remote endpoint failed after retries.
    #[error("endpoint error: {0}")]
    Endpoint(String),

    /// The endpoint does not return per-token logprobs with echo.
    #[error("endpoint does not support per-token logprobs with echo")]
    LogprobsUnsupported,

    /// A verbalizer label has no scoreable token at the answer position.
    #[error("verbalizer label {0:?} is not scoreable at the answer position")]
    VerbalizerUnscoreable(String),

    /// Report requested over a directory with no run artifacts.
    #[error("no run artifacts found under {0}")]
    MissingArtifacts(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
