//! The 2x2 block operator behind every bound, its Gram blocks, the Pauli
//! tensor form and the ancilla that minimizes Tr(rho R R^dagger).

use uncertainty::matcore::{random_observable, random_state};
use uncertainty::roperator::{
    build_r, gram, optimal_ancilla, pauli_decomposition_check, structural_check, trace_functional, AncillaParams,
    SchwarzTerms,
};
use uncertainty::{Observable, Seed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h: Vec<Observable> = (0..4).map(|k| random_observable(3, Seed(k))).collect::<Result<_, _>>()?;
    let nu = random_state(3, false, Seed(11))?;

    let r = build_r(&h)?;
    let g = gram(&r).to_matrix();
    println!("R is {0}x{0}; RR^dagger min eigenvalue {1:.4}", 2 * r.block_dim(), g.hermitian_eigenvalues()[0]);
    println!("Gram blocks vs commutator forms: {:?}", structural_check(&h)?);
    println!("Pauli tensor form residual: {:e}", pauli_decomposition_check(&h)?);

    let terms = SchwarzTerms::new(&h, &nu)?;
    let best = optimal_ancilla(&h, &nu)?;
    println!(
        "S = {:.6}, x = {:.6}, b = {:.6}; minimum S - |(x,b)| = {:.6}",
        terms.second_moment,
        terms.x,
        terms.b,
        terms.minimum()
    );
    println!(
        "optimal alpha {:.6}, r {:.6}: functional {:.6}",
        best.alpha(),
        best.r(),
        trace_functional(&h, &best, &nu)?
    );
    for p in [AncillaParams::ket0(), AncillaParams::ket1(), AncillaParams::new(0.5, 0.2.into())?] {
        println!("  alpha {:.3}: functional {:.6}", p.alpha(), trace_functional(&h, &p, &nu)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
