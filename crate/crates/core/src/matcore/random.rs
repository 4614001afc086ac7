//! Seeded random instances. Output depends only on `(dim, seed)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use super::quantum::{Observable, State};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// `seed + index`, wrapping.
    pub fn offset(self, index: u64) -> Seed {
        Seed(self.0.wrapping_add(index))
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Standard complex Gaussian: E|z|^2 = 1.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn ginibre<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    // Row-major draw order so the stream layout is independent of storage order.
    let mut m = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = complex_gaussian(rng);
        }
    }
    m
}

pub fn random_observable(dim: usize, seed: Seed) -> Result<Observable> {
    random_observable_with(dim, &mut seed.rng())
}

/// (G + G^dagger)/2 with G Ginibre.
pub fn random_observable_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Observable> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let g = ginibre(dim, rng);
    let h = (&g + g.adjoint()) * Complex64::new(0.5, 0.0);
    Ok(Observable::from_matrix_unchecked(
        ComplexMatrix::from_inner_unchecked(h),
    ))
}

pub fn random_state(dim: usize, pure: bool, seed: Seed) -> Result<State> {
    random_state_with(dim, pure, &mut seed.rng())
}

pub fn random_state_with<R: Rng + ?Sized>(dim: usize, pure: bool, rng: &mut R) -> Result<State> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if pure {
        let psi: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(rng)).collect();
        State::pure(&psi)
    } else {
        let g = ComplexMatrix::from_inner_unchecked(ginibre(dim, rng));
        State::from_factor(&g)
    }
}

/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
pub fn random_unitary(dim: usize, seed: Seed) -> Result<ComplexMatrix> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let g = ginibre(dim, &mut seed.rng());
    let qr = g.qr();
    let (mut q, r) = qr.unpack();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    Ok(ComplexMatrix::from_inner_unchecked(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = random_observable(4, Seed(7)).unwrap();
        let b = random_observable(4, Seed(7)).unwrap();
        assert_eq!(a, b);
        let c = random_observable(4, Seed(8)).unwrap();
        let differ = a
            .matrix()
            .inner()
            .iter()
            .zip(c.matrix().inner().iter())
            .all(|(x, y)| x != y);
        assert!(differ);
    }

    #[test]
    fn generated_observables_are_hermitian() {
        for s in 0..20 {
            let h = random_observable(5, Seed(s)).unwrap();
            assert!(Observable::new(h.matrix().clone()).is_ok());
            assert_eq!(h.matrix().hermiticity_defect().0, 0.0);
        }
    }

    #[test]
    fn generated_states_are_valid() {
        for s in 0..20 {
            for pure in [true, false] {
                let st = random_state(4, pure, Seed(s)).unwrap();
                State::new(st.matrix().clone()).unwrap();
            }
        }
    }

    #[test]
    fn pure_qubit_has_spectrum_one_zero() {
        let st = random_state(2, true, Seed(3)).unwrap();
        let ev = st.matrix().hermitian_eigenvalues();
        assert!(ev[0].abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn zero_dim_rejected() {
        assert!(matches!(random_observable(0, Seed(1)), Err(Error::ZeroDimension)));
        assert!(matches!(random_state(0, true, Seed(1)), Err(Error::ZeroDimension)));
    }

    #[test]
    fn unitary_is_unitary() {
        let u = random_unitary(5, Seed(11)).unwrap();
        let prod = u.try_mul(&u.adjoint()).unwrap();
        assert!(prod.max_abs_diff(&ComplexMatrix::identity(5)).unwrap() < 1e-12);
    }
}
