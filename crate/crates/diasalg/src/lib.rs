//! Exact-arithmetic invariants of finite-dimensional diassociative algebras.
//!
//! A diassociative algebra carries two associative bilinear products subject
//! to three mixed compatibility identities. This crate represents such
//! algebras by sparse structure constants over the rationals or a prime
//! field, and computes the objects their extension theory is built from:
//! two-cocycle and coboundary spaces, second cohomology, multipliers and
//! covers, the low-degree inflation/restriction/transgression maps with
//! machine-checked exactness, the star center, and unicentrality
//! certificates.
//!
//! All arithmetic is exact; there is no floating point anywhere. Subspaces
//! are kept in a canonical echelon form so that every equality test and every
//! reported dimension is reproducible bit for bit.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod format;
pub mod linalg;

pub use algebra::{Axiom, DiasAlgebra, Side, ValidationReport};
pub use cohomology::{CocyclePair, CohomologySpace, SequenceReport};
pub use extensions::{DefiningPairReport, ExtensionRecord, StemCenterCheck, Theorem49Report};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, Scalar, Subspace};
