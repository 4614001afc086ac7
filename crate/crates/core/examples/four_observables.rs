//! Four observables: the pair-partition bound, its equality family and the
//! collapse to three observables when the fourth is the identity.

use uncertainty::bounds::{self, inversion_count, PAIR_PARTITIONS};
use uncertainty::matcore::{random_observable, random_state};
use uncertainty::saturation::{reduce_h4_identity, tight4_family};
use uncertainty::Seed;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in PAIR_PARTITIONS {
        println!("partition {p:?}: {} inversions", inversion_count(&p));
    }

    for (l1, l2, beta) in [(1.0, -1.0, 0.0), (4.0, 0.5, 0.3), (-2.0, 7.0, 2.0)] {
        let inst = tight4_family(l1, l2, beta);
        let r = inst.evaluate()?;
        println!(
            "family ({l1}, {l2}, {beta}): lhs {:.12} rhs {:.12} terms {:?}",
            r.lhs, r.rhs, r.terms
        );
    }

    let h = [0, 1, 2, 3].map(|k| random_observable(3, Seed(40 + k)).expect("dim 3"));
    let s = random_state(3, true, Seed(5))?;
    let r = bounds::quad_sum(&h, &s, true)?;
    println!("random dim-3: lhs {:.6} rhs {:.6}", r.lhs, r.rhs);

    let (q, t) = reduce_h4_identity(&[h[0].clone(), h[1].clone(), h[2].clone()], &s)?;
    println!("H4 = I: quad rhs {:.15} triple rhs {:.15}", q.rhs, t.rhs);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
