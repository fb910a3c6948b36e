use thiserror::Error;

use crate::construct::HypothesisFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} outside supported range 1..=24")]
    InvalidArity(u32),

    #[error("point index {index} out of range for table of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: u32, right: u32 },

    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },

    #[error("value {value} at position {position} is not in Z8")]
    BadValue { position: usize, value: u8 },

    #[error("parse error at position {position}: unexpected {found:?}")]
    Parse { position: usize, found: char },

    #[error("spectrum is not realizable: reconstruction fails at point {point}")]
    NotRealizable { point: usize },

    #[error("modulus {0} unsupported; expected 2, 4 or 8")]
    UnsupportedModulus(u32),

    #[error("bentness is undefined for odd variable count {0}")]
    OddArity(u32),

    #[error("map is not a bijection: {0} is hit twice")]
    NotBijective(usize),

    #[error("epsilon must be +1 or -1, got {0}")]
    InvalidEpsilon(i64),

    #[error("hypothesis failed: {0}")]
    Hypothesis(HypothesisFailure),

    #[error("infeasible sweep: {0}")]
    InfeasibleSweep(String),
}
