//! Shared matrix JSON format:
//! `{"kind": "observable" | "state", "dim": n, "entries": [[[re, im], ...], ...]}`,
//! rows in order. `kind` is omitted for plain matrices.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::ComplexMatrix;
use super::quantum::{Observable, State};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Observable,
    State,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<MatrixKind>,
    pub dim: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix, kind: Option<MatrixKind>) -> Self {
        let entries = m
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
            .collect();
        Self {
            kind,
            dim: m.dim(),
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.entries.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.entries.len(),
            });
        }
        let rows: Vec<Vec<Complex64>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        for row in &rows {
            if row.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: row.len(),
                });
            }
        }
        ComplexMatrix::from_rows(&rows)
    }

    fn expect_kind(&self, want: MatrixKind) -> Result<()> {
        match self.kind {
            Some(k) if k != want => Err(Error::Config(format!(
                "expected kind {want:?}, found {k:?}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_observable(&self) -> Result<Observable> {
        self.expect_kind(MatrixKind::Observable)?;
        Observable::new(self.to_matrix()?)
    }

    pub fn to_state(&self) -> Result<State> {
        self.expect_kind(MatrixKind::State)?;
        State::new(self.to_matrix()?)
    }
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixJson::from_matrix(m, None)
    }
}

impl From<&Observable> for MatrixJson {
    fn from(h: &Observable) -> Self {
        MatrixJson::from_matrix(h.matrix(), Some(MatrixKind::Observable))
    }
}

impl From<&State> for MatrixJson {
    fn from(s: &State) -> Self {
        MatrixJson::from_matrix(s.matrix(), Some(MatrixKind::State))
    }
}

macro_rules! json_via_matrix {
    ($ty:ty, $convert:ident) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                MatrixJson::from(self).serialize(serializer)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
                MatrixJson::deserialize(deserializer)?
                    .$convert()
                    .map_err(serde::de::Error::custom)
            }
        }
    };
}

json_via_matrix!(ComplexMatrix, to_matrix);
json_via_matrix!(Observable, to_observable);
json_via_matrix!(State, to_state);
