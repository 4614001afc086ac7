use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("hermiticity violated at ({row}, {col}): |M - M^dagger| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("positivity violated: minimum eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace must be 1, got {trace}")]
    Trace { trace: f64 },

    #[error("variance is negative beyond tolerance: {0:e}")]
    NegativeVariance(f64),

    #[error("ancilla parameters infeasible: |r|^2 = {r_sq} exceeds cos^2(a) sin^2(a) = {limit}")]
    InfeasibleAncilla { r_sq: f64, limit: f64 },

    #[error("ancilla angle {0} outside [0, pi/2]")]
    AncillaAngle(f64),

    #[error("expected {expected} observables, got {found}")]
    ObservableCount { expected: &'static str, found: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("trace functional is negative: {0:e}")]
    NegativeFunctional(f64),

    #[error("no state with a positive bound was found")]
    NoPositiveBound,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
