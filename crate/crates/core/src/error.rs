use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial of degree {0} is not allowed here")]
    BadDegree(usize),
    #[error("derivative index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("sign list has length {got}, expected {expected}")]
    SignListLength { expected: usize, got: usize },
    #[error("sign list must start with +")]
    SignListHead,
    #[error("empty sign list")]
    EmptySignList,
    #[error("invalid sign character {0:?}")]
    BadSignChar(char),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}
