use thiserror::Error;

use crate::rootsystem::RootError;
use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("expected {expected} coordinates, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("projective point (0:0) is not a point")]
    ZeroPoint,
    #[error("malformed point {0:?}: expected \"u:v\"")]
    MalformedPoint(String),
    #[error("element is not in the Cartan subalgebra")]
    NotCartan,
    #[error("Cartan element is not regular: {0}")]
    NotRegular(String),
    #[error("singular fourfold: the long-root sextic vanishes at {0}")]
    Singular(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Internal failures signal a bug in this crate, not bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
