//! Instance files: a bound kind, its observables and (optionally) a state.
//!
//! ```json
//! {"kind": "triple_sum", "centered": true,
//!  "observables": [{"kind": "observable", "dim": 2, "entries": ...}, ...],
//!  "state": {"kind": "state", "dim": 2, "entries": ...}}
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundKind, BoundReport};
use crate::error::{Error, Result};
use crate::matcore::{MatrixJson, Observable, State};
use crate::saturation::TightInstance;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub kind: BoundKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centered: Option<bool>,
    pub observables: Vec<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state: Option<MatrixJson>,
}

/// A validated instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub kind: BoundKind,
    pub centered: bool,
    pub observables: Vec<Observable>,
    pub state: Option<State>,
}

impl Instance {
    pub fn new(kind: BoundKind, observables: Vec<Observable>, state: Option<State>) -> Self {
        Self {
            kind,
            centered: kind.default_centered(),
            observables,
            state,
        }
    }

    pub fn from_file_contents(file: &InstanceFile) -> Result<Self> {
        if file.observables.len() != file.kind.arity() {
            return Err(Error::Config(format!(
                "{} takes {} observables, file has {}",
                file.kind,
                file.kind.arity(),
                file.observables.len()
            )));
        }
        let observables = file
            .observables
            .iter()
            .enumerate()
            .map(|(j, m)| m.to_observable().map_err(|e| e.context(format!("observable {j}"))))
            .collect::<Result<Vec<_>>>()?;
        let state = file
            .state
            .as_ref()
            .map(|m| m.to_state().map_err(|e| e.context("state")))
            .transpose()?;
        Ok(Self {
            kind: file.kind,
            centered: file.centered.unwrap_or(file.kind.default_centered()),
            observables,
            state,
        })
    }

    pub fn to_file_contents(&self) -> InstanceFile {
        InstanceFile {
            kind: self.kind,
            centered: Some(self.centered),
            observables: self.observables.iter().map(MatrixJson::from).collect(),
            state: self.state.as_ref().map(MatrixJson::from),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let file: InstanceFile = serde_json::from_str(&text)?;
        Self::from_file_contents(&file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_file_contents())?;
        fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn evaluate(&self) -> Result<BoundReport> {
        let state = self
            .state
            .as_ref()
            .ok_or_else(|| Error::Config("instance has no state".into()))?;
        bounds::evaluate(self.kind, &self.observables, state, self.centered)
    }
}

impl From<TightInstance> for Instance {
    fn from(t: TightInstance) -> Self {
        Instance::new(t.kind, t.observables, Some(t.state))
    }
}
