//! Dense complex matrices, observables, states and seeded generators.

mod json;
mod matrix;
mod quantum;
mod random;

pub use json::{MatrixJson, MatrixKind};
pub use matrix::{pauli, ComplexMatrix, I, ONE, ZERO};
pub use quantum::{center, commutator, expectation, std_dev, tensor, variance, Observable, State};
pub(crate) use quantum::clamp_variance;
pub use random::{
    complex_gaussian, ginibre, random_observable, random_observable_with, random_state,
    random_state_with, random_unitary, Seed,
};
