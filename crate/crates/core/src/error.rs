use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter lies outside its documented domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The spectral target carries no energy inside the band.
    #[error("degenerate spectral target: {0}")]
    DegenerateTarget(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// A group-delay law decreased between two consecutive samples.
    #[error("group delay is not monotone at index {index}")]
    NonMonotone { index: usize },

    /// A measurement vector no longer carries the target magnitude.
    #[error("measurement magnitude does not match the spectral target")]
    MagnitudeMismatch,
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
