use rncbetti_core::BettiError;
use thiserror::Error;

pub type Result<T, E = ResolverError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ResolverError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable '{name}' at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("expected a polynomial in {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("the zero ideal has no finite-length quotient")]
    ZeroIdeal,

    #[error("quotient does not have finite colength")]
    NotFiniteColength,

    #[error("column {col} has an entry in degree {degree}, which is not divisible by d = {d}")]
    UnsupportedShape { col: usize, degree: i64, d: u32 },

    #[error(transparent)]
    Betti(#[from] BettiError),
}

impl ResolverError {
    pub(crate) fn shifted(self, offset: usize) -> Self {
        match self {
            ResolverError::Syntax { position, message } => {
                ResolverError::Syntax { position: position + offset, message }
            }
            ResolverError::UnknownVariable { name, position } => {
                ResolverError::UnknownVariable { name, position: position + offset }
            }
            other => other,
        }
    }
}
