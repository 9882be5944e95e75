use alloc::string::String;

use crate::family::Family;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("cannot add sqrt(pi) grades {left} and {right}")]
    GradeMismatch { left: i32, right: i32 },
    #[error("odd sqrt(pi) grade {0} cannot be folded into integer powers of pi")]
    OddGrade(i32),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("family mismatch: expected {expected}, found {found}")]
    FamilyMismatch { expected: Family, found: Family },
    #[error("{target} has no moments against the {family} basis")]
    ParityMismatch {
        target: &'static str,
        family: Family,
    },
    #[error("range must satisfy xmin < xmax with at least two samples")]
    BadRange,
    #[error("precision of {0} bits is below the 128-bit minimum")]
    PrecisionTooLow(usize),
    #[error("invalid number `{0}`")]
    Parse(String),
    #[error("high-precision arithmetic failed: {0}")]
    Float(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
