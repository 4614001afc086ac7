//! Equality cases, reductions between the bounds, and a numerical search for
//! the smallest `lhs / rhs` ratio over states.

mod search;

pub use search::{search_min_ratio, SearchConfig, SearchResult};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundKind, BoundReport};
use crate::error::{check_dim, Error, Result};
use crate::matcore::{expectation, std_dev, ComplexMatrix, Observable, State, I, ONE};
use crate::roperator::{trace_functional, AncillaParams};
use crate::tol;

/// Observables and a state on which a bound holds with equality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightInstance {
    pub observables: Vec<Observable>,
    pub state: State,
    pub kind: BoundKind,
    pub expected_gap: f64,
}

impl TightInstance {
    pub fn evaluate(&self) -> Result<BoundReport> {
        bounds::evaluate(self.kind, &self.observables, &self.state, true)
    }
}

/// `[[1, e^{-i beta}], [e^{i beta}, 1]]`.
pub fn phase_observable(beta: f64) -> Observable {
    let e = Complex64::from_polar(1.0, beta);
    let m = ComplexMatrix::from_rows(&[vec![ONE, e.conj()], vec![e, ONE]]).expect("finite");
    Observable::new(m).expect("hermitian by construction")
}

/// `H1 = diag(lambda1, lambda2)` and three phase observables with phases
/// `beta2`, `beta2 + 2pi/3`, `beta2 + 4pi/3`, on `|0><0|`. Saturates the
/// four-observable bound with `lhs = rhs = 3`.
pub fn tight4_family(lambda1: f64, lambda2: f64, beta2: f64) -> TightInstance {
    let third = 2.0 * PI / 3.0;
    let observables = vec![
        Observable::from_real_diagonal(&[lambda1, lambda2]).expect("finite"),
        phase_observable(beta2),
        phase_observable(beta2 + third),
        phase_observable(beta2 + 2.0 * third),
    ];
    TightInstance {
        observables,
        state: State::basis(2, 0).expect("dim 2"),
        kind: BoundKind::QuadSum,
        expected_gap: 0.0,
    }
}

/// Default parameters `(1, -1, 0)`.
pub fn tight4_default() -> TightInstance {
    tight4_family(1.0, -1.0, 0.0)
}

/// The Pauli triple on the pure state with Bloch vector `(1, 1, 1)/sqrt3`.
pub fn tight3_pauli() -> TightInstance {
    let a = 1.0 / 3f64.sqrt();
    TightInstance {
        observables: vec![Observable::sigma1(), Observable::sigma2(), Observable::sigma3()],
        state: State::bloch(a, a, a).expect("unit Bloch vector"),
        kind: BoundKind::TripleSum,
        expected_gap: 0.0,
    }
}

/// `(quad_sum(h, I), triple_sum(h))`, both centered.
pub fn reduce_h4_identity(h: &[Observable; 3], s: &State) -> Result<(BoundReport, BoundReport)> {
    let quad = [h[0].clone(), h[1].clone(), h[2].clone(), Observable::identity(h[0].dim())];
    Ok((bounds::quad_sum(&quad, s, true)?, bounds::triple_sum(h, s, true)?))
}

/// Two-observable sum form `Tr nu (H1^2 + H2^2) >= |<i[H1,H2]>|` obtained
/// from the three-observable block operator with `H3 = 0`, evaluated at the
/// ancilla states `|0><0|` and `|1><1|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RobertsonViaR {
    pub report: BoundReport,
    /// `Tr nu (H1^2 + H2^2) - <i[H1,H2]>`.
    pub functional_ket0: f64,
    /// `Tr nu (H1^2 + H2^2) + <i[H1,H2]>`.
    pub functional_ket1: f64,
}

pub fn robertson_via_r(h1: &Observable, h2: &Observable, nu: &State) -> Result<RobertsonViaR> {
    check_dim(h1.dim(), h2.dim())?;
    check_dim(h1.dim(), nu.dim())?;
    let h = [h1.clone(), h2.clone(), Observable::zero(h1.dim())];
    let functional_ket0 = trace_functional(&h, &AncillaParams::ket0(), nu)?;
    let functional_ket1 = trace_functional(&h, &AncillaParams::ket1(), nu)?;
    let lhs = expectation(&(&(h1.matrix() * h1.matrix()) + &(h2.matrix() * h2.matrix())), nu)?.re;
    for f in [functional_ket0, functional_ket1] {
        if f < -tol::FUNCTIONAL * (1.0 + lhs.abs()) {
            return Err(Error::NegativeFunctional(f));
        }
    }
    let g = expectation(&h1.matrix().commutator(h2.matrix())?.scale(I), nu)?;
    let rhs = g.norm();
    Ok(RobertsonViaR {
        report: BoundReport {
            kind: BoundKind::Robertson,
            lhs,
            rhs,
            gap: lhs - rhs,
            terms: vec![rhs],
            centered: false,
            dim: h1.dim(),
        },
        functional_ket0,
        functional_ket1,
    })
}

/// Rescaled pair `(k1 H1, k2 H2)` with `k_j = sqrt(dH1 dH2) / dH_j`: equal
/// spreads, the same spread product, and `k1 k2 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledPair {
    pub h1: Observable,
    pub h2: Observable,
    pub kappa: (f64, f64),
}

pub fn scaling_trick(h1: &Observable, h2: &Observable, nu: &State) -> Result<ScaledPair> {
    let d1 = std_dev(h1, nu)?;
    let d2 = std_dev(h2, nu)?;
    for (j, d) in [(1, d1), (2, d2)] {
        if d <= tol::DEGENERATE_SPREAD {
            return Err(Error::Degenerate(format!(
                "observable {j} has zero spread in this state"
            )));
        }
    }
    let geo = (d1 * d2).sqrt();
    let kappa = (geo / d1, geo / d2);
    Ok(ScaledPair {
        h1: h1.scaled(kappa.0),
        h2: h2.scaled(kappa.1),
        kappa,
    })
}
