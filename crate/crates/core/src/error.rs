use thiserror::Error;

use crate::rootsys::TypeLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("type {label} is not defined at rank {rank}")]
    InadmissibleType { label: TypeLabel, rank: usize },

    #[error("{what} index {index} is outside 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("element [{word}] is not a minimal coset representative for this parabolic")]
    NotInCoset { word: String },

    #[error("coset enumeration exceeded the guard of {guard} elements")]
    GuardExceeded { guard: usize },

    #[error("fundamental weight {r} is not minuscule in type {label}")]
    NotMinuscule { label: TypeLabel, r: usize },

    #[error("character must be dominant and nonzero")]
    InvalidCharacter,

    #[error("drop c = {c} is outside 0..={max}")]
    DropOutOfRange { c: i64, max: i64 },

    #[error("uniqueness violated: {0}")]
    UniquenessViolated(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
