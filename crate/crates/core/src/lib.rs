//! Variance uncertainty relations for two, three and four observables.
//!
//! The crate evaluates the Robertson bound, the three-observable sum and
//! product bounds with constant 1/sqrt(3), their root-sum-square precursor,
//! and the four-observable bound built from the three pair partitions of
//! {1, 2, 3, 4}. It also builds the 2x2 block operators `R` whose Gram
//! operator `R R^dagger` yields these bounds, checks the closed-form block
//! expressions, and searches state space for saturating instances.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod matcore;
pub mod roperator;
pub mod saturation;
pub mod tol;

pub use bounds::{BoundKind, BoundReport};
pub use error::{Error, Result};
pub use matcore::{ComplexMatrix, Observable, Seed, State};
