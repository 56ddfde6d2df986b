use crate::compressionbody::BodyViolation;
use crate::decomposition::DecompositionViolation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("inadmissible body: {}", join(.0))]
    InadmissibleBody(Vec<BodyViolation>),
    #[error("invalid decomposition: {}", join(.0))]
    InvalidDecomposition(Vec<DecompositionViolation>),
    #[error("surgery: {0}")]
    Surgery(String),
    #[error("invalid factorization: {0}")]
    Factorization(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("enumeration self-check failed: {0}")]
    SelfCheck(String),
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
