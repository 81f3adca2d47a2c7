use thiserror::Error;

use crate::cone::{Decomposition, SDecomposition};
use crate::hilbert::Polynomial;

pub type Result<T, E = BettiError> = std::result::Result<T, E>;

/// Progress made by a greedy decomposition before it got stuck.
#[derive(Debug, Clone, PartialEq)]
pub enum PartialDecomposition {
    B(Decomposition),
    S(SDecomposition),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BettiError {
    #[error("invalid pure type: {0}")]
    InvalidPureType(String),

    #[error("column {col} is out of range (at most {max})")]
    ColumnOutOfRange { col: usize, max: usize },

    #[error("tables over different rings: d = {left} vs d = {right}")]
    MismatchedDegree { left: u32, right: u32 },

    #[error("d = {d} is too small here (need d >= {min})")]
    DegreeTooSmall { d: u32, min: u32 },

    #[error("cannot combine an empty list of tables")]
    EmptyCombination,

    #[error("not the table of a finite-length module: numerator {numerator} is not divisible by (1-t)^2")]
    NotFiniteLength { numerator: Polynomial },

    #[error("infeasible class data at degree {degree}: {reason}")]
    InfeasibleClass { degree: i64, reason: String },

    #[error("table is not in the cone: {reason}")]
    NotInCone {
        reason: String,
        partial: Box<PartialDecomposition>,
    },
}
