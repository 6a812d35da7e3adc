//! Exact linear algebra substrate: scalars, dense matrices, and canonical
//! subspaces. Everything else in the crate reduces to rank, kernel, and
//! complement computations performed here.

mod field;
mod matrix;
mod subspace;

pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
