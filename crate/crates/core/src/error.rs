use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("search too large: {0}")]
    SearchTooLarge(String),
    #[error("homomorphism domain/codomain mismatch")]
    DomainMismatch,
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("element is not in the span of the hat elements")]
    NotInSpan,
    #[error("Plesken elements use different bases")]
    BasisMismatch,
    #[error("map is not a group homomorphism: {0}")]
    InvalidHom(String),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
