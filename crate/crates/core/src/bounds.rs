//! Evaluation of each uncertainty inequality as an `lhs >= rhs` report.
//!
//! Commutator expectations `g_jk = Tr(s [H_j, H_k])` are purely imaginary for
//! Hermitian inputs; magnitudes are taken on the complex value directly, so
//! `|<[A,B]>|` and `|<i[A,B]>|` coincide.
//!
//! Per-term magnitudes are always listed in lexicographic pair order. For
//! three observables that is `(|g12|, |g13|, |g23|)`; for four it is the
//! three pair partitions `12|34`, `13|24`, `14|23`, each labelled by the pair
//! containing the first observable. With `H4 = I` the two orders coincide.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::matcore::{clamp_variance, expectation, ComplexMatrix, Observable, State};

pub const INV_SQRT3: f64 = 0.577_350_269_189_625_8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// dA dB >= |<[A,B]>| / 2.
    Robertson,
    /// sum_j dH_j^2 >= (1/sqrt3) sum_j |<[H_j, H_j+1]>|, indices cyclic.
    TripleSum,
    /// prod_j dH_j^2 >= (1/sqrt3)^3 prod_j |<[H_j, H_j+1]>|.
    TripleProduct,
    /// <sum_j H_j^2> >= sqrt(sum_j |<[H_j, H_j+1]>|^2), no centering.
    Rss3,
    /// sum_j dH_j^2 >= (1/sqrt3) sum over pair partitions of |g_ij -/+ g_kl|.
    QuadSum,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::Robertson,
        BoundKind::TripleSum,
        BoundKind::TripleProduct,
        BoundKind::Rss3,
        BoundKind::QuadSum,
    ];

    /// Number of observables the bound takes.
    pub fn arity(self) -> usize {
        match self {
            BoundKind::Robertson => 2,
            BoundKind::TripleSum | BoundKind::TripleProduct | BoundKind::Rss3 => 3,
            BoundKind::QuadSum => 4,
        }
    }

    /// Whether the left-hand side uses variances by default.
    pub fn default_centered(self) -> bool {
        !matches!(self, BoundKind::Rss3)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Robertson => "robertson",
            BoundKind::TripleSum => "triple_sum",
            BoundKind::TripleProduct => "triple_product",
            BoundKind::Rss3 => "rss3",
            BoundKind::QuadSum => "quad_sum",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown bound kind '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
    pub terms: Vec<f64>,
    pub centered: bool,
    pub dim: usize,
}

impl BoundReport {
    pub const CSV_HEADER: [&'static str; 7] =
        ["kind", "lhs", "rhs", "gap", "terms", "centered", "dim"];

    fn new(kind: BoundKind, lhs: f64, rhs: f64, terms: Vec<f64>, centered: bool, dim: usize) -> Self {
        Self {
            kind,
            lhs,
            rhs,
            gap: lhs - rhs,
            terms,
            centered,
            dim,
        }
    }

    /// lhs / rhs, infinite when the right-hand side vanishes.
    pub fn ratio(&self) -> f64 {
        if self.rhs < crate::tol::RHS_FLOOR {
            f64::INFINITY
        } else {
            self.lhs / self.rhs
        }
    }

    /// CSV fields in header order; `terms` are `;`-joined.
    pub fn csv_record(&self) -> [String; 7] {
        let terms = self
            .terms
            .iter()
            .map(|t| format!("{t:?}"))
            .collect::<Vec<_>>()
            .join(";");
        [
            self.kind.to_string(),
            format!("{:?}", self.lhs),
            format!("{:?}", self.rhs),
            format!("{:?}", self.gap),
            terms,
            self.centered.to_string(),
            self.dim.to_string(),
        ]
    }
}

/// Index of the pair `(j, k)`, `j < k < n`, in lexicographic order.
pub fn pair_index(n: usize, j: usize, k: usize) -> usize {
    debug_assert!(j < k && k < n);
    j * (2 * n - j - 1) / 2 + (k - j - 1)
}

/// The three ways to split {0, 1, 2, 3} into two pairs, as permutations
/// `(i, j, k, l)` with `i = 0`.
pub const PAIR_PARTITIONS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// Number of out-of-order pairs in `perm`.
pub fn inversion_count(perm: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..perm.len() {
        for b in (a + 1)..perm.len() {
            if perm[a] > perm[b] {
                count += 1;
            }
        }
    }
    count
}

/// A bound with its observable-side matrices precomputed, so repeated
/// evaluation over many states only costs traces.
#[derive(Debug, Clone)]
pub struct PreparedBound {
    kind: BoundKind,
    centered: bool,
    observables: Vec<Observable>,
    squares: Vec<ComplexMatrix>,
    commutators: Vec<ComplexMatrix>,
}

impl PreparedBound {
    pub fn new(kind: BoundKind, observables: &[Observable], centered: bool) -> Result<Self> {
        if observables.len() != kind.arity() {
            return Err(Error::ObservableCount {
                expected: match kind.arity() {
                    2 => "2",
                    3 => "3",
                    _ => "4",
                },
                found: observables.len(),
            });
        }
        let dim = observables[0].dim();
        for h in observables {
            check_dim(dim, h.dim())?;
        }
        let centered = match kind {
            BoundKind::TripleSum | BoundKind::QuadSum => centered,
            other => other.default_centered(),
        };
        let n = observables.len();
        let squares = observables
            .iter()
            .map(|h| h.matrix() * h.matrix())
            .collect();
        let mut commutators = Vec::with_capacity(n * (n - 1) / 2);
        for j in 0..n {
            for k in (j + 1)..n {
                commutators.push(observables[j].matrix().commutator(observables[k].matrix())?);
            }
        }
        Ok(Self {
            kind,
            centered,
            observables: observables.to_vec(),
            squares,
            commutators,
        })
    }

    pub fn kind(&self) -> BoundKind {
        self.kind
    }

    pub fn centered(&self) -> bool {
        self.centered
    }

    pub fn dim(&self) -> usize {
        self.observables[0].dim()
    }

    pub fn observables(&self) -> &[Observable] {
        &self.observables
    }

    /// `Tr(s [H_j, H_k])` for every pair, lexicographic.
    pub fn commutator_expectations(&self, s: &State) -> Result<Vec<Complex64>> {
        check_dim(self.dim(), s.dim())?;
        self.commutators.iter().map(|c| expectation(c, s)).collect()
    }

    pub fn evaluate(&self, s: &State) -> Result<BoundReport> {
        check_dim(self.dim(), s.dim())?;
        let n = self.observables.len();
        let mut second = Vec::with_capacity(n);
        let mut var = Vec::with_capacity(n);
        for (h, h2) in self.observables.iter().zip(&self.squares) {
            let mean = expectation(h.matrix(), s)?.re;
            let m2 = expectation(h2, s)?.re;
            second.push(m2);
            var.push(clamp_variance(m2 - mean * mean, m2)?);
        }
        let g = self.commutator_expectations(s)?;
        let lhs_sum = |centered: bool| -> f64 {
            if centered {
                var.iter().sum()
            } else {
                second.iter().sum()
            }
        };
        let dim = self.dim();
        let report = match self.kind {
            BoundKind::Robertson => {
                let t = g[0].norm();
                BoundReport::new(
                    self.kind,
                    var[0].sqrt() * var[1].sqrt(),
                    0.5 * t,
                    vec![t],
                    true,
                    dim,
                )
            }
            BoundKind::TripleSum | BoundKind::TripleProduct | BoundKind::Rss3 => {
                let terms: Vec<f64> = g.iter().map(|z| z.norm()).collect();
                let (lhs, rhs) = match self.kind {
                    BoundKind::TripleSum => {
                        (lhs_sum(self.centered), INV_SQRT3 * terms.iter().sum::<f64>())
                    }
                    BoundKind::TripleProduct => (
                        var.iter().product(),
                        INV_SQRT3.powi(3) * terms.iter().product::<f64>(),
                    ),
                    _ => (
                        lhs_sum(false),
                        terms.iter().map(|t| t * t).sum::<f64>().sqrt(),
                    ),
                };
                BoundReport::new(self.kind, lhs, rhs, terms, self.centered, dim)
            }
            BoundKind::QuadSum => {
                let at = |j: usize, k: usize| g[pair_index(4, j, k)];
                let terms = vec![
                    (at(0, 1) - at(2, 3)).norm(),
                    (at(0, 2) + at(1, 3)).norm(),
                    (at(0, 3) - at(1, 2)).norm(),
                ];
                let rhs = INV_SQRT3 * terms.iter().sum::<f64>();
                BoundReport::new(self.kind, lhs_sum(self.centered), rhs, terms, self.centered, dim)
            }
        };
        Ok(report)
    }
}

/// Evaluates `kind` on `observables`; `centered` only affects the sum bounds.
pub fn evaluate(kind: BoundKind, observables: &[Observable], s: &State, centered: bool) -> Result<BoundReport> {
    PreparedBound::new(kind, observables, centered)?.evaluate(s)
}

pub fn robertson(a: &Observable, b: &Observable, s: &State) -> Result<BoundReport> {
    evaluate(BoundKind::Robertson, &[a.clone(), b.clone()], s, true)
}

pub fn triple_sum(h: &[Observable; 3], s: &State, centered: bool) -> Result<BoundReport> {
    evaluate(BoundKind::TripleSum, h, s, centered)
}

pub fn triple_product(h: &[Observable; 3], s: &State) -> Result<BoundReport> {
    evaluate(BoundKind::TripleProduct, h, s, true)
}

pub fn rss3(h: &[Observable; 3], s: &State) -> Result<BoundReport> {
    evaluate(BoundKind::Rss3, h, s, false)
}

pub fn quad_sum(h: &[Observable; 4], s: &State, centered: bool) -> Result<BoundReport> {
    evaluate(BoundKind::QuadSum, h, s, centered)
}
