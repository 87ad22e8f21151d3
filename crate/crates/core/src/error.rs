use thiserror::Error;

use crate::monoid::MonoidKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monoid kind mismatch: {left} vs {right}")]
    KindMismatch { left: MonoidKind, right: MonoidKind },

    #[error("value {value} is outside the carrier of {kind}")]
    NotInCarrier { kind: MonoidKind, value: String },

    #[error("cannot parse {kind} value `{input}`")]
    InvalidValue { kind: MonoidKind, input: String },

    #[error("base weight {value} of letter `{letter}` violates the increasing property")]
    IncreasingPropertyViolation { letter: String, value: String },

    #[error("{letters} letters but {weights} weights")]
    ArityMismatch { letters: usize, weights: usize },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),

    #[error("measures are defined over different alphabets")]
    AlphabetMismatch,

    #[error("{value} exceeds the total weight {total}")]
    OutOfRange { value: String, total: String },

    #[error("result size {count} exceeds the limit {limit}")]
    CapacityExceeded { count: String, limit: u64 },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Usage and parse errors, as opposed to domain errors raised by a
    /// well-formed request.
    pub fn is_usage(&self) -> bool {
        !matches!(
            self,
            Error::OutOfRange { .. } | Error::CapacityExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
