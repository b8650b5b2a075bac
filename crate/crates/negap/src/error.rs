use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid system parameters: {0}")]
    InvalidParams(String),

    #[error("digit {digit} at position {position} is out of range for base {base}")]
    DigitOutOfRange {
        digit: u32,
        position: usize,
        base: u32,
    },

    #[error("word is not run-structured at position {position}: {reason}")]
    NotRunStructured { position: usize, reason: String },

    #[error("invalid probability vector: {0}")]
    InvalidProbVector(String),

    #[error("invalid digit word: {0}")]
    ParseWord(String),

    #[error("invalid rational: {0}")]
    ParseRational(String),

    #[error("enumeration of {needed} cylinders exceeds the cap {cap}; raise the cap to proceed")]
    CapExceeded { needed: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
