use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("near-concatenation needs two nonempty compositions")]
    EmptyOperand,
    #[error("{inner:?} is not contained in {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("invalid poset path: {0}")]
    InvalidPath(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
