use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("coefficient q^{index} requested beyond truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },

    #[error("cannot divide by 1 - q^0")]
    ZeroStride,

    #[error("non-finite or out-of-domain argument: {0}")]
    Domain(String),

    #[error("coefficient at q^{index} violates the declared growth envelope")]
    EnvelopeViolated { index: usize },

    #[error("tail bound diverges for t = {t}")]
    DivergentTail { t: f64 },

    #[error("malformed table input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
