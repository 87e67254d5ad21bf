use thiserror::Error;

/// Errors surfaced by the arithmetic and cohomology routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("element is not in the kernel of the norm: {0}")]
    NotInKernel(String),
    #[error("element is not n-torsion: {0}")]
    NotTorsion(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("descent failed: {0}")]
    DescentFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
