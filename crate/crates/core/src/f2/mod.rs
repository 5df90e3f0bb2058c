//! Linear algebra over F₂, bigraded homology and Laurent polynomial bookkeeping.

pub mod column;
pub mod complex;
pub mod echelon;
pub mod grading;
pub mod poly;

pub use column::{BitVec, F2Column, SparseVec};
pub use complex::{Backend, BigradedComplex, Homology};
pub use echelon::Echelon;
pub use grading::Bigrading;
pub use poly::{poincare, LaurentPoly, LaurentPoly2};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F2Error {
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("complex invariant violated: {0}")]
    InvariantViolation(String),
    #[error("target is not in the image of the boundary")]
    NoSolution,
}
