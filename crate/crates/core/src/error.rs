use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid type/rank: {0}")]
    InvalidType(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("element is not in the requested coset")]
    NotInCoset,
    #[error("subset is not stable under the given automorphism")]
    NotStable,
    #[error("subset must be a proper subset of the affine node set")]
    NotProper,
    #[error("delta power mismatch")]
    DeltaPowerMismatch,
    #[error("not a Coxeter element of the requested coset")]
    NotCoxeter,
    #[error("node budget exceeded after {explored} elements")]
    BudgetExceeded { explored: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
