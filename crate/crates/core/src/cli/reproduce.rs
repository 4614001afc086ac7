//! End-to-end reproductions of the named constructions, each reported as a
//! list of pass/fail identity checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{self, INV_SQRT3};
use crate::error::{Error, Result};
use crate::matcore::{commutator, random_observable, random_state, std_dev, Observable, Seed, State};
use crate::roperator::{
    optimal_ancilla, pauli_decomposition_check, pauli_gram_check, structural_check, trace_functional,
    SchwarzTerms,
};
use crate::saturation::{reduce_h4_identity, robertson_via_r, scaling_trick, tight3_pauli, tight4_default};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Robertson,
    Triple,
    Quad,
    Reductions,
    PauliDecomp,
}

impl Section {
    pub const ALL: [Section; 5] = [
        Section::Robertson,
        Section::Triple,
        Section::Quad,
        Section::Reductions,
        Section::PauliDecomp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Robertson => "robertson",
            Section::Triple => "triple",
            Section::Quad => "quad",
            Section::Reductions => "reductions",
            Section::PauliDecomp => "pauli-decomp",
        }
    }
}

impl FromStr for Section {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown reproduction '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict}  {}: {}", self.name, self.detail)
    }
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        detail,
        pass,
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub fn reproduce(section: Section) -> Result<Vec<Check>> {
    match section {
        Section::Robertson => robertson(),
        Section::Triple => triple(),
        Section::Quad => quad(),
        Section::Reductions => reductions(),
        Section::PauliDecomp => pauli_decomp(),
    }
}

fn robertson() -> Result<Vec<Check>> {
    let ket0 = State::basis(2, 0)?;
    let (x, y) = (Observable::sigma1(), Observable::sigma2());
    let r = bounds::robertson(&x, &y, &ket0)?;
    let via = robertson_via_r(&x, &y, &ket0)?;
    let pair = scaling_trick(&x.scaled(2.0), &y, &ket0)?;
    let d1 = std_dev(&pair.h1, &ket0)?;
    let d2 = std_dev(&pair.h2, &ket0)?;
    Ok(vec![
        check(
            "equality on (sigma1, sigma2, |0>)",
            close(r.lhs, 1.0, 1e-10) && close(r.rhs, 1.0, 1e-10),
            format!("lhs {:?} rhs {:?}", r.lhs, r.rhs),
        ),
        check(
            "sum form from R with H3 = 0",
            close(via.report.lhs, 2.0, 1e-10)
                && close(via.report.rhs, 2.0, 1e-10)
                && via.functional_ket0 >= -1e-10
                && via.functional_ket1 >= -1e-10,
            format!(
                "lhs {:?} rhs {:?} functionals ({:?}, {:?})",
                via.report.lhs, via.report.rhs, via.functional_ket0, via.functional_ket1
            ),
        ),
        check(
            "rescaling equalizes spreads",
            close(d1, d2, 1e-10) && close(d1 * d2, 2.0, 1e-10),
            format!("kappa ({:?}, {:?}) spreads ({d1}, {d2})", pair.kappa.0, pair.kappa.1),
        ),
    ])
}

fn triple() -> Result<Vec<Check>> {
    let inst = tight3_pauli();
    let h: [Observable; 3] = inst.observables.clone().try_into().expect("three observables");
    let sum = bounds::triple_sum(&h, &inst.state, true)?;
    let prod = bounds::triple_product(&h, &inst.state)?;
    let ket0 = State::basis(2, 0)?;
    let rss = bounds::rss3(&h, &ket0)?;
    let p = optimal_ancilla(&h, &inst.state)?;
    let at_opt = trace_functional(&h, &p, &inst.state)?;
    let terms = SchwarzTerms::new(&h, &inst.state)?;
    let rss_opt = bounds::rss3(&h, &inst.state)?;
    Ok(vec![
        check(
            "sum bound tight at 1/sqrt3",
            close(sum.lhs, 2.0, 1e-9) && close(sum.rhs, 2.0, 1e-9),
            format!("lhs {:?} rhs {:?}", sum.lhs, sum.rhs),
        ),
        check(
            "product bound tight",
            close(prod.lhs, 8.0 / 27.0, 1e-9) && close(prod.rhs, 8.0 / 27.0, 1e-9),
            format!("lhs {:?} rhs {:?}", prod.lhs, prod.rhs),
        ),
        check(
            "root-sum-square on |0>",
            close(rss.lhs, 3.0, 1e-10) && close(rss.rhs, 2.0, 1e-10),
            format!("lhs {:?} rhs {:?}", rss.lhs, rss.rhs),
        ),
        check(
            "optimal ancilla saturates the Schwarz step",
            close(at_opt, terms.minimum(), 1e-10) && close(at_opt, rss_opt.gap, 1e-10),
            format!("Tr(rho RR^dagger) {at_opt} vs S - |(x,b)| {:?}", terms.minimum()),
        ),
    ])
}

fn quad() -> Result<Vec<Check>> {
    let inst = tight4_default();
    let r = inst.evaluate()?;
    let h = &inst.observables;
    let mut noncommuting = true;
    for j in 0..4 {
        for k in (j + 1)..4 {
            noncommuting &= commutator(&h[j], &h[k])?.max_abs() > 1e-6;
        }
    }
    let s3 = 3f64.sqrt();
    Ok(vec![
        check(
            "four-observable family saturates",
            close(r.lhs, 3.0, 1e-9) && close(r.rhs, 3.0, 1e-9),
            format!("lhs {:?} rhs {:?}", r.lhs, r.rhs),
        ),
        check(
            "each pair-partition term equals sqrt3",
            r.terms.iter().all(|t| close(*t, s3, 1e-9)),
            format!("terms {:?}", r.terms),
        ),
        check("observables pairwise noncommuting", noncommuting, "all six commutators nonzero".into()),
    ])
}

fn reductions() -> Result<Vec<Check>> {
    let h = [0, 1, 2].map(|k| random_observable(3, Seed(k)).expect("dim > 0"));
    let s = random_state(3, false, Seed(17))?;
    let (q, t) = reduce_h4_identity(&h, &s)?;
    let term_diff = q
        .terms
        .iter()
        .zip(&t.terms)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let identity_ok = close(q.lhs, t.lhs, 1e-12) && close(q.rhs, t.rhs, 1e-12) && term_diff <= 1e-12;

    let nu = random_state(3, true, Seed(18))?;
    let via = robertson_via_r(&h[0], &h[1], &nu)?;
    let x = SchwarzTerms::new(&[h[0].clone(), h[1].clone(), Observable::zero(3)], &nu)?;
    let zero_ok = close(via.functional_ket0, x.second_moment - x.x, 1e-10)
        && close(via.functional_ket1, x.second_moment + x.x, 1e-10)
        && via.report.gap >= -1e-9;

    let pauli = [Observable::sigma1(), Observable::sigma2(), Observable::sigma3()];
    let (q0, t0) = reduce_h4_identity(&pauli, &State::basis(2, 0)?)?;
    Ok(vec![
        check(
            "H4 = I collapses the four-observable bound",
            identity_ok,
            format!("lhs {:?} / {:?}, rhs {:?} / {:?}, max term diff {term_diff:e}", q.lhs, t.lhs, q.rhs, t.rhs),
        ),
        check(
            "H4 = I on Pauli triple at |0>",
            close(q0.rhs, 2.0 * INV_SQRT3, 1e-12) && close(t0.rhs, 2.0 * INV_SQRT3, 1e-12),
            format!("rhs {:?} / {:?}", q0.rhs, t0.rhs),
        ),
        check(
            "H3 = 0 with |0>, |1> ancillas gives the two-observable sum form",
            zero_ok,
            format!(
                "Tr nu(H1^2+H2^2) {:?} >= |<i[H1,H2]>| {:?}",
                via.report.lhs, via.report.rhs
            ),
        ),
    ])
}

fn pauli_decomp() -> Result<Vec<Check>> {
    let mut worst_r = 0.0f64;
    let mut worst_gram = 0.0f64;
    let mut worst_blocks = 0.0f64;
    for seed in 0..20u64 {
        for n in [3usize, 4] {
            let h: Vec<Observable> = (0..n as u64)
                .map(|k| random_observable(4, Seed(100 * seed + k)))
                .collect::<Result<_>>()?;
            worst_r = worst_r.max(pauli_decomposition_check(&h)?);
            worst_blocks = structural_check(&h)?.into_iter().fold(worst_blocks, f64::max);
            if n == 3 {
                let t: [Observable; 3] = h.try_into().expect("three");
                worst_gram = worst_gram.max(pauli_gram_check(&t)?);
            }
        }
    }
    Ok(vec![
        check(
            "R equals its Pauli-tensor form",
            worst_r <= 1e-14,
            format!("max residual {worst_r:e}"),
        ),
        check(
            "RR^dagger equals its Pauli-tensor form",
            worst_gram <= 1e-12,
            format!("max residual {worst_gram:e}"),
        ),
        check(
            "Gram blocks match commutator closed forms",
            worst_blocks <= 1e-12,
            format!("max residual {worst_blocks:e}"),
        ),
    ])
}
