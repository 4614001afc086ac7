//! The command implementations behind the `uncertainty` binary: random
//! verification campaigns, single-instance checks, saturation searches and
//! reproductions of the named constructions.
//!
//! Exit status contract: 0 on success, 1 when an inequality or structural
//! identity fails, 2 on input errors.

mod campaign;
mod instance;
mod reproduce;

pub use campaign::{
    campaign_instance, run_campaign, write_reports, CampaignConfig, CampaignOutcome, CampaignSummary,
    OutputFormat,
};
pub use instance::{Instance, InstanceFile};
pub use reproduce::{reproduce, Check, Section};

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::bounds::{self, BoundKind, BoundReport};
use crate::error::{Error, Result};
use crate::saturation::{search_min_ratio, tight3_pauli, tight4_default, SearchConfig, SearchResult};
use crate::tol;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

/// Loads, validates and evaluates an instance file.
pub fn check_file(path: &Path) -> Result<BoundReport> {
    Instance::load(path)?.evaluate()
}

pub fn report_passes(r: &BoundReport) -> bool {
    r.gap >= tol::GAP_FAILURE
}

#[derive(Debug, Clone, PartialEq)]
pub enum SaturateTarget {
    Builtin(String),
    File(PathBuf),
}

impl SaturateTarget {
    /// Builtin names win over paths.
    pub fn parse(s: &str) -> Self {
        match s {
            "pauli3" | "tight4" => SaturateTarget::Builtin(s.to_string()),
            path => SaturateTarget::File(PathBuf::from(path)),
        }
    }

    pub fn resolve(&self) -> Result<Instance> {
        match self {
            SaturateTarget::Builtin(name) => match name.as_str() {
                "pauli3" => Ok(tight3_pauli().into()),
                "tight4" => Ok(tight4_default().into()),
                other => Err(Error::Config(format!("unknown builtin '{other}'"))),
            },
            SaturateTarget::File(path) => Instance::load(path),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaturateOutcome {
    pub kind: BoundKind,
    pub result: SearchResult,
    /// The ratio re-evaluated from `result.best_state`.
    pub recomputed_ratio: f64,
}

pub fn saturate(target: &SaturateTarget, cfg: &SearchConfig, out: Option<&Path>) -> Result<SaturateOutcome> {
    let inst = target.resolve()?;
    let result = search_min_ratio(&inst.observables, inst.kind, cfg)?;
    let recomputed_ratio = bounds::evaluate(inst.kind, &inst.observables, &result.best_state, true)?.ratio();
    let outcome = SaturateOutcome {
        kind: inst.kind,
        result,
        recomputed_ratio,
    };
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&outcome)?;
        fs::write(path, text + "\n").map_err(|e| Error::io(path, e))?;
    }
    Ok(outcome)
}

/// Input problems map to exit 2; everything else that fails is exit 1.
pub fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Context { source, .. } => exit_code_for(source),
        Error::NegativeFunctional(_) | Error::NegativeVariance(_) => EXIT_FAILURE,
        _ => EXIT_INPUT,
    }
}
