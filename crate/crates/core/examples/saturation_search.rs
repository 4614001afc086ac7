//! Searching state space for the smallest lhs/rhs ratio.

use uncertainty::cli::campaign_instance;
use uncertainty::saturation::{search_min_ratio, tight3_pauli, tight4_default, SearchConfig};
use uncertainty::{BoundKind, Seed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SearchConfig {
        restarts: 6,
        max_iters: 1500,
        ..SearchConfig::default()
    };
    for inst in [tight3_pauli(), tight4_default()] {
        let res = search_min_ratio(&inst.observables, inst.kind, &cfg)?;
        println!(
            "{:<10} best ratio {:.12} after {} evaluations (converged {})",
            inst.kind, res.best_ratio, res.evaluations, res.converged
        );
    }

    // Random observables are generally not saturable: the minimum sits above 1.
    let (h, _) = campaign_instance(3, 3, 0, Seed(123))?;
    let mixed = SearchConfig { pure_only: false, ..cfg };
    let res = search_min_ratio(&h, BoundKind::TripleSum, &mixed)?;
    println!("random triple, mixed search: {:.6}", res.best_ratio);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
