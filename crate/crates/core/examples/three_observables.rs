//! The sum, product and root-sum-square bounds for three observables.

use uncertainty::bounds;
use uncertainty::matcore::{random_observable, random_state};
use uncertainty::saturation::tight3_pauli;
use uncertainty::{Observable, Seed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tight = tight3_pauli();
    let h: [Observable; 3] = tight.observables.clone().try_into().expect("three");
    let s = &tight.state;

    let sum = bounds::triple_sum(&h, s, true)?;
    let prod = bounds::triple_product(&h, s)?;
    let rss = bounds::rss3(&h, s)?;
    println!("Pauli triple at bloch (1,1,1)/sqrt3");
    for r in [&sum, &prod, &rss] {
        println!("  {:<15} lhs {:.12} rhs {:.12} gap {:+.2e}", r.kind, r.lhs, r.rhs, r.gap);
    }

    // A random 4-dimensional instance: every bound holds with room to spare.
    let h = [1, 2, 3].map(|k| random_observable(4, Seed(k)).expect("dim 4"));
    let s = random_state(4, false, Seed(9))?;
    println!("random dim-4 instance");
    for r in [bounds::triple_sum(&h, &s, true)?, bounds::triple_product(&h, &s)?, bounds::rss3(&h, &s)?] {
        println!("  {:<15} ratio {:.4}  terms {:?}", r.kind, r.ratio(), r.terms);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
