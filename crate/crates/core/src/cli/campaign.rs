use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundKind, BoundReport};
use crate::error::{Error, Result};
use crate::matcore::{random_observable_with, random_state_with, Observable, Seed, State};
use crate::roperator::{pauli_decomposition_check, structural_check};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub kinds: Vec<BoundKind>,
    pub dims: Vec<usize>,
    pub instances: usize,
    pub seed: Seed,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            kinds: BoundKind::ALL.to_vec(),
            dims: vec![2, 3, 4],
            instances: 1000,
            seed: Seed(0),
            out: None,
            format: OutputFormat::Json,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.kinds.is_empty() {
            return Err(Error::Config("no bound kinds selected".into()));
        }
        if self.dims.is_empty() {
            return Err(Error::Config("no dimensions selected".into()));
        }
        if let Some(d) = self.dims.iter().find(|&&d| d < 2) {
            return Err(Error::Config(format!("dimension {d} is below 2")));
        }
        if self.instances == 0 {
            return Err(Error::Config("instances must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub counts: BTreeMap<BoundKind, usize>,
    pub min_gap: f64,
    pub max_structural_residual: f64,
    pub failures: usize,
    pub wall_time_secs: f64,
    pub seed: Seed,
}

impl CampaignSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct CampaignOutcome {
    pub summary: CampaignSummary,
    /// Sorted by (kind, dim, index).
    pub reports: Vec<BoundReport>,
}

/// Observables and state of campaign instance `index`, seeded by `seed + index`.
/// Even indices use pure states, odd indices mixed ones.
pub fn campaign_instance(arity: usize, dim: usize, index: usize, seed: Seed) -> Result<(Vec<Observable>, State)> {
    let mut rng = seed.offset(index as u64).rng();
    let observables = (0..arity)
        .map(|_| random_observable_with(dim, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let state = random_state_with(dim, index.is_multiple_of(2), &mut rng)?;
    Ok((observables, state))
}

fn structural_residual(h: &[Observable]) -> Result<f64> {
    let padded;
    let family: &[Observable] = if h.len() == 2 {
        padded = [h[0].clone(), h[1].clone(), Observable::zero(h[0].dim())];
        &padded
    } else {
        h
    };
    let blocks = structural_check(family)?;
    let pauli = pauli_decomposition_check(family)?;
    Ok(blocks.into_iter().fold(pauli, f64::max))
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignOutcome> {
    cfg.validate()?;
    let start = Instant::now();
    let mut kinds = cfg.kinds.clone();
    kinds.sort();
    kinds.dedup();
    let mut dims = cfg.dims.clone();
    dims.sort();
    dims.dedup();
    let tasks: Vec<(BoundKind, usize, usize)> = kinds
        .iter()
        .flat_map(|&k| dims.iter().flat_map(move |&d| (0..cfg.instances).map(move |i| (k, d, i))))
        .collect();

    let results: Vec<(BoundReport, f64)> = tasks
        .par_iter()
        .map(|&(kind, dim, index)| {
            let (h, s) = campaign_instance(kind.arity(), dim, index, cfg.seed)?;
            let report = bounds::evaluate(kind, &h, &s, kind.default_centered())?;
            Ok((report, structural_residual(&h)?))
        })
        .collect::<Result<_>>()?;

    let mut counts = BTreeMap::new();
    let mut min_gap = f64::INFINITY;
    let mut max_res: f64 = 0.0;
    let mut failures = 0;
    for (r, res) in &results {
        *counts.entry(r.kind).or_insert(0) += 1;
        min_gap = min_gap.min(r.gap);
        max_res = max_res.max(*res);
        if r.gap < tol::GAP_FAILURE || *res > tol::STRUCTURAL_FAILURE {
            failures += 1;
        }
    }
    let reports: Vec<BoundReport> = results.into_iter().map(|(r, _)| r).collect();
    if let Some(path) = &cfg.out {
        write_reports(&reports, path, cfg.format)?;
    }
    Ok(CampaignOutcome {
        summary: CampaignSummary {
            counts,
            min_gap,
            max_structural_residual: max_res,
            failures,
            wall_time_secs: start.elapsed().as_secs_f64(),
            seed: cfg.seed,
        },
        reports,
    })
}

pub fn write_reports(reports: &[BoundReport], path: &Path, format: OutputFormat) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut w, reports)?;
            writeln!(w).map_err(|e| Error::io(path, e))?;
        }
        OutputFormat::Csv => {
            let mut csv = csv::Writer::from_writer(&mut w);
            csv.write_record(BoundReport::CSV_HEADER)?;
            for r in reports {
                csv.write_record(r.csv_record())?;
            }
            csv.flush().map_err(|e| Error::io(path, e))?;
        }
    }
    w.flush().map_err(|e| Error::io(path, e))
}
