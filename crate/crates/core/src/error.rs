use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be weakly decreasing)")]
    NotAPartition(Vec<usize>),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("offset {offset} is below the degree {degree}; the reversal would create negative exponents")]
    NegativeExponent { degree: usize, offset: usize },

    #[error("{partition} has non-empty {l}-core {core}")]
    NonEmptyCore {
        partition: Partition,
        l: usize,
        core: Partition,
    },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("mode mismatch: expected {expected}, found {found}")]
    ModeMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("invalid rigged configuration: {0}")]
    InvalidRigging(String),

    #[error("{0} admits no ribbon tableaux")]
    NoRibbonTableaux(String),

    #[error("bijection failed: {0}")]
    Bijection(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
