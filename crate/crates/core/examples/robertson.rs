//! Two observables: the spread product against half the commutator, the
//! same inequality read off the block operator, and the rescaling that
//! equalizes the two spreads.

use uncertainty::bounds;
use uncertainty::saturation::{robertson_via_r, scaling_trick};
use uncertainty::{Observable, State};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (x, y) = (Observable::sigma1(), Observable::sigma2());

    for (label, s) in [
        ("|0><0|", State::basis(2, 0)?),
        ("I/2", State::maximally_mixed(2)?),
        ("bloch (0.6, 0, 0.8)", State::bloch(0.6, 0.0, 0.8)?),
    ] {
        let r = bounds::robertson(&x, &y, &s)?;
        println!("{label:>20}: dX dY = {:.6}  >=  |<[X,Y]>|/2 = {:.6}", r.lhs, r.rhs);
    }

    let ket0 = State::basis(2, 0)?;
    let via = robertson_via_r(&x, &y, &ket0)?;
    println!(
        "sum form from R: {:.6} >= {:.6} (functionals {:.3e}, {:.3e})",
        via.report.lhs, via.report.rhs, via.functional_ket0, via.functional_ket1
    );

    let pair = scaling_trick(&x.scaled(3.0), &y, &ket0)?;
    println!("rescaled by ({:.4}, {:.4})", pair.kappa.0, pair.kappa.1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
