//! Observables, density matrices and the expectation machinery built on them.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{check_dim, Error, Result};
use crate::tol;

/// A Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable(ComplexMatrix);

impl Observable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        check_hermitian(&matrix)?;
        Ok(Self(matrix))
    }

    pub fn zero(dim: usize) -> Self {
        Self(ComplexMatrix::zeros(dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self(ComplexMatrix::identity(dim))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        Ok(Self(ComplexMatrix::from_real_diagonal(diag)?))
    }

    pub fn sigma1() -> Self {
        Self(super::pauli::sigma1())
    }

    pub fn sigma2() -> Self {
        Self(super::pauli::sigma2())
    }

    pub fn sigma3() -> Self {
        Self(super::pauli::sigma3())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Real multiple of the observable, still Hermitian.
    pub fn scaled(&self, c: f64) -> Self {
        Self(self.0.scale_real(c))
    }

    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        Self(matrix)
    }
}

/// A density matrix: Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone, PartialEq)]
pub struct State(ComplexMatrix);

impl State {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        check_hermitian(&matrix)?;
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol::TRACE {
            return Err(Error::Trace { trace });
        }
        let min_eigenvalue = matrix.hermitian_eigenvalues()[0];
        if min_eigenvalue < -tol::PSD {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(Self(matrix))
    }

    /// |psi><psi| for the normalized `psi`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        if psi.is_empty() {
            return Err(Error::ZeroDimension);
        }
        let norm_sq: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sq.is_finite() && norm_sq > 0.0) {
            return Err(Error::Degenerate("state vector has zero norm".into()));
        }
        let n = psi.len();
        let inv = 1.0 / norm_sq;
        let m = DMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj() * inv);
        Ok(Self(ComplexMatrix::from_inner_unchecked(m)))
    }

    /// G G^dagger / Tr(G G^dagger); positive by construction.
    pub fn from_factor(factor: &ComplexMatrix) -> Result<Self> {
        let gram = factor.inner() * factor.inner().adjoint();
        let trace = gram.trace().re;
        if !(trace.is_finite() && trace > 0.0) {
            return Err(Error::Degenerate("state factor is zero".into()));
        }
        let mut rho = gram * Complex64::new(1.0 / trace, 0.0);
        // Force exact hermiticity.
        let n = rho.nrows();
        for i in 0..n {
            rho[(i, i)].im = 0.0;
            for j in (i + 1)..n {
                rho[(j, i)] = rho[(i, j)].conj();
            }
        }
        Ok(Self(ComplexMatrix::from_inner_unchecked(rho)))
    }

    /// The computational basis projector |k><k|.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if k >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: k + 1,
            });
        }
        let mut psi = vec![ZERO; dim];
        psi[k] = Complex64::new(1.0, 0.0);
        Self::pure(&psi)
    }

    pub fn maximally_mixed(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64)))
    }

    /// Qubit state with Bloch vector `(x, y, z)`, |v| <= 1.
    pub fn bloch(x: f64, y: f64, z: f64) -> Result<Self> {
        let m = super::pauli::identity()
            .try_add(&super::pauli::sigma1().scale_real(x))?
            .try_add(&super::pauli::sigma2().scale_real(y))?
            .try_add(&super::pauli::sigma3().scale_real(z))?
            .scale_real(0.5);
        Self::new(m)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    let (deviation, row, col) = m.hermiticity_defect();
    if deviation > tol::HERMITICITY * m.max_abs() {
        return Err(Error::NotHermitian {
            row,
            col,
            deviation,
        });
    }
    Ok(())
}

/// [a, b] = ab - ba. Anti-Hermitian for Hermitian arguments.
pub fn commutator(a: &Observable, b: &Observable) -> Result<ComplexMatrix> {
    a.matrix().commutator(b.matrix())
}

/// Tr(s h).
pub fn expectation(h: &ComplexMatrix, s: &State) -> Result<Complex64> {
    s.matrix().trace_product(h)
}

/// <h^2> - <h>^2, clamped at zero when negative within rounding.
pub fn variance(h: &Observable, s: &State) -> Result<f64> {
    check_dim(s.dim(), h.dim())?;
    let mean = expectation(h.matrix(), s)?.re;
    let h2 = h.matrix().try_mul(h.matrix())?;
    let second = expectation(&h2, s)?.re;
    clamp_variance(second - mean * mean, second)
}

pub(crate) fn clamp_variance(v: f64, scale: f64) -> Result<f64> {
    if v >= 0.0 {
        Ok(v)
    } else if v >= -tol::PSD * (1.0 + scale.abs()) {
        Ok(0.0)
    } else {
        Err(Error::NegativeVariance(v))
    }
}

pub fn std_dev(h: &Observable, s: &State) -> Result<f64> {
    variance(h, s).map(f64::sqrt)
}

/// h - <h> I.
pub fn center(h: &Observable, s: &State) -> Result<Observable> {
    let mean = expectation(h.matrix(), s)?.re;
    let shifted = h
        .matrix()
        .try_sub(&ComplexMatrix::identity(h.dim()).scale_real(mean))?;
    Ok(Observable(shifted))
}

/// Kronecker product, `a` indexing the outer 2x2-style block level.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}
