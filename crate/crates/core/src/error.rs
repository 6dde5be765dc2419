use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("invalid digit {glyph:?} at position {position} for base {base}")]
    InvalidDigitGlyph {
        position: usize,
        glyph: char,
        base: u32,
    },

    #[error("base {0} is outside the supported range 2..=36")]
    BaseOutOfRange(u64),

    #[error("digit value {value} at index {index} is not below base {base}")]
    DigitOutOfRange { index: usize, value: u64, base: u32 },

    #[error("operands use different bases ({left} and {right})")]
    BaseMismatch { left: u32, right: u32 },

    #[error("value does not fit in a 128-bit machine integer")]
    Overflow,

    #[error("expected an incremental trace")]
    WrongAlgorithm,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
