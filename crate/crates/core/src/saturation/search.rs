use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundKind, PreparedBound};
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, Observable, Seed, State};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub step_init: f64,
    pub step_min: f64,
    pub seed: Seed,
    pub pure_only: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_iters: 2000,
            step_init: 0.5,
            step_min: 1e-8,
            seed: Seed(0),
            pure_only: true,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::Config("restarts must be positive".into()));
        }
        if self.max_iters == 0 {
            return Err(Error::Config("max_iters must be positive".into()));
        }
        if !(self.step_min > 0.0 && self.step_min < self.step_init && self.step_init.is_finite()) {
            return Err(Error::Config(format!(
                "need 0 < step_min < step_init, got {} and {}",
                self.step_min, self.step_init
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_state: State,
    pub best_ratio: f64,
    pub evaluations: usize,
    pub converged: bool,
}

struct Restart {
    point: Vec<f64>,
    ratio: f64,
    evaluations: usize,
    converged: bool,
}

/// Maps a real parameter vector to a state: a unit vector of `dim` complex
/// amplitudes, or `G G^dagger / Tr` for a `dim x dim` complex factor `G`.
fn state_from_point(point: &[f64], dim: usize, pure: bool) -> Result<State> {
    let z = |k: usize| num_complex::Complex64::new(point[2 * k], point[2 * k + 1]);
    if pure {
        let psi: Vec<_> = (0..dim).map(z).collect();
        State::pure(&psi)
    } else {
        let g = ComplexMatrix::from_fn(dim, |i, j| z(i * dim + j))?;
        State::from_factor(&g)
    }
}

fn objective(bound: &PreparedBound, point: &[f64], pure: bool) -> f64 {
    state_from_point(point, bound.dim(), pure)
        .and_then(|s| bound.evaluate(&s))
        .map(|r| r.ratio())
        .unwrap_or(f64::INFINITY)
}

fn run_restart(bound: &PreparedBound, cfg: &SearchConfig, index: usize) -> Restart {
    let pure = cfg.pure_only;
    let d = bound.dim();
    let n = if pure { 2 * d } else { 2 * d * d };
    let mut rng = cfg.seed.offset(index as u64).rng();
    let gauss = |rng: &mut rand_chacha::ChaCha8Rng| -> f64 { StandardNormal.sample(rng) };

    let mut point: Vec<f64> = (0..n).map(|_| gauss(&mut rng)).collect();
    let mut ratio = objective(bound, &point, pure);
    let mut evaluations = 1;
    let mut step = cfg.step_init;
    let mut failures = 0;
    let mut converged = false;
    let mut trial = point.clone();

    for _ in 0..cfg.max_iters {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let (di, dj) = (step * gauss(&mut rng), step * gauss(&mut rng));
        let mut improved = false;
        for sign in [1.0, -1.0] {
            trial.copy_from_slice(&point);
            trial[i] += sign * di;
            trial[j] += sign * dj;
            let r = objective(bound, &trial, pure);
            evaluations += 1;
            if r < ratio {
                ratio = r;
                point.copy_from_slice(&trial);
                improved = true;
                break;
            }
        }
        if improved {
            failures = 0;
        } else {
            failures += 1;
            if failures >= n {
                step *= 0.5;
                failures = 0;
                if step < cfg.step_min {
                    converged = true;
                    break;
                }
            }
        }
    }
    Restart {
        point,
        ratio,
        evaluations,
        converged,
    }
}

/// Minimizes `lhs / rhs` of `kind` over states with a multi-start stochastic
/// pattern search. States where `rhs` vanishes count as infinite ratio.
/// Restarts run in parallel; the result depends only on `cfg`.
pub fn search_min_ratio(h: &[Observable], kind: BoundKind, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let bound = PreparedBound::new(kind, h, true)?;
    let runs: Vec<Restart> = (0..cfg.restarts)
        .into_par_iter()
        .map(|k| run_restart(&bound, cfg, k))
        .collect();
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    // First minimum wins ties, so the pick is independent of scheduling.
    let best = runs
        .iter()
        .fold(None::<&Restart>, |acc, r| match acc {
            Some(b) if b.ratio <= r.ratio => Some(b),
            _ => Some(r),
        })
        .expect("restarts > 0");
    if !best.ratio.is_finite() {
        return Err(Error::NoPositiveBound);
    }
    let best_state = state_from_point(&best.point, bound.dim(), cfg.pure_only)?;
    let best_ratio = bound.evaluate(&best_state)?.ratio();
    Ok(SearchResult {
        best_state,
        best_ratio,
        evaluations,
        converged: best.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::random_observable;
    use crate::saturation::{tight3_pauli, tight4_default};

    #[test]
    fn finds_pauli_saturator() {
        let h = tight3_pauli().observables;
        let res = search_min_ratio(&h, BoundKind::TripleSum, &SearchConfig::default()).unwrap();
        assert!(res.best_ratio >= 1.0 - 1e-6 && res.best_ratio <= 1.0 + 1e-3, "{}", res.best_ratio);
    }

    #[test]
    fn finds_tight4_saturator() {
        let h = tight4_default().observables;
        let res = search_min_ratio(&h, BoundKind::QuadSum, &SearchConfig::default()).unwrap();
        assert!(res.best_ratio >= 1.0 - 1e-6 && res.best_ratio <= 1.0 + 1e-3, "{}", res.best_ratio);
    }

    #[test]
    fn deterministic() {
        let h: Vec<_> = (0..3).map(|k| random_observable(3, Seed(k)).unwrap()).collect();
        let cfg = SearchConfig {
            restarts: 4,
            max_iters: 300,
            pure_only: false,
            ..SearchConfig::default()
        };
        let a = search_min_ratio(&h, BoundKind::TripleSum, &cfg).unwrap();
        let b = search_min_ratio(&h, BoundKind::TripleSum, &cfg).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.best_ratio >= 1.0 - 1e-6);
    }

    #[test]
    fn config_errors() {
        let h = tight3_pauli().observables;
        for cfg in [
            SearchConfig { restarts: 0, ..SearchConfig::default() },
            SearchConfig { max_iters: 0, ..SearchConfig::default() },
            SearchConfig { step_min: 1.0, ..SearchConfig::default() },
        ] {
            assert!(matches!(
                search_min_ratio(&h, BoundKind::TripleSum, &cfg),
                Err(Error::Config(_))
            ));
        }
    }

    #[test]
    fn commuting_family_has_no_positive_bound() {
        let h: Vec<_> = [[1.0, 2.0], [0.0, 3.0], [5.0, 1.0]]
            .iter()
            .map(|d| Observable::from_real_diagonal(d).unwrap())
            .collect();
        let cfg = SearchConfig { restarts: 2, max_iters: 50, ..SearchConfig::default() };
        assert!(matches!(
            search_min_ratio(&h, BoundKind::TripleSum, &cfg),
            Err(Error::NoPositiveBound)
        ));
    }
}
