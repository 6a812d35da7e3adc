use thiserror::Error;

use crate::extensions::DefiningPairReport;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operands live over different fields: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("shape mismatch: {0}")]
    ShapeError(String),

    #[error("subspace is not contained in the proposed enclosing space")]
    NotContained,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not a central ideal")]
    NotCentralIdeal,

    #[error("bilinear pair violates the cocycle axioms")]
    NotACocycle,

    #[error("product table is not associative (witness triple {0:?})")]
    NotAssociative((usize, usize, usize)),

    #[error("cover certification failed: {0:?}")]
    CoverCertificationFailed(DefiningPairReport),
}

pub type Result<T> = std::result::Result<T, Error>;
