//! A seeded random campaign over every bound kind, written as CSV, plus an
//! instance file checked back from disk.

use uncertainty::cli::{check_file, run_campaign, CampaignConfig, Instance, OutputFormat};
use uncertainty::saturation::tight4_default;
use uncertainty::Seed;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("uncertainty-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;

    let cfg = CampaignConfig {
        dims: vec![2, 3],
        instances: 50,
        seed: Seed(7),
        out: Some(dir.join("reports.csv")),
        format: OutputFormat::Csv,
        ..CampaignConfig::default()
    };
    let outcome = run_campaign(&cfg)?;
    let s = &outcome.summary;
    for (kind, n) in &s.counts {
        println!("{kind:<15} {n} instances");
    }
    println!("min gap {:.3e}, max structural residual {:.3e}, failures {}", s.min_gap, s.max_structural_residual, s.failures);

    let csv = std::fs::read_to_string(dir.join("reports.csv"))?;
    for line in csv.lines().take(3) {
        println!("  {line}");
    }

    let path = dir.join("tight4.json");
    Instance::from(tight4_default()).save(&path)?;
    let report = check_file(&path)?;
    println!("{} from file: lhs {} rhs {}", report.kind, report.lhs, report.rhs);

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
