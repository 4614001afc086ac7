mod common;

use std::f64::consts::FRAC_PI_2;
use std::io::Write;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::Rng;
use uncertainty::bounds::{self, BoundKind};
use uncertainty::cli::{campaign_instance, run_campaign, CampaignConfig};
use uncertainty::matcore::{random_observable_with, random_state_with};
use uncertainty::roperator::{
    build_r, gram, optimal_ancilla, pauli_decomposition_check, structural_check, trace_functional, AncillaParams,
    SchwarzTerms,
};
use uncertainty::saturation::{
    reduce_h4_identity, robertson_via_r, search_min_ratio, tight3_pauli, tight4_family, SearchConfig,
};
use uncertainty::{Observable, Seed, State};

fn verdict(n: u32, pass: bool, detail: String) {
    let tag = if pass { "PASS" } else { "FAIL" };
    // Written to stderr directly so the line survives libtest's output capture.
    let _ = writeln!(std::io::stderr(), "[{tag}] criterion {n}: {detail}");
    assert!(pass, "criterion {n} failed: {detail}");
}

fn family(n: usize, dim: usize, seed: u64) -> (Vec<Observable>, State) {
    let mut rng = Seed(seed).rng();
    let h = (0..n).map(|_| random_observable_with(dim, &mut rng).unwrap()).collect();
    let s = random_state_with(dim, seed.is_multiple_of(2), &mut rng).unwrap();
    (h, s)
}

fn oracle_family(h: &[Observable]) -> Vec<common::M> {
    h.iter().map(common::obs).collect()
}

#[test]
fn criterion_1_robertson_equality() {
    let ket0 = State::basis(2, 0).unwrap();
    let (x, y) = (Observable::sigma1(), Observable::sigma2());
    let mut times = Vec::new();
    let mut r = bounds::robertson(&x, &y, &ket0).unwrap();
    for _ in 0..11 {
        let t = Instant::now();
        r = bounds::robertson(&x, &y, &ket0).unwrap();
        times.push(t.elapsed());
    }
    times.sort();
    let median = times[times.len() / 2];

    let o = common::robertson(&[common::obs(&x), common::obs(&y)], &common::st(&ket0));
    assert!((o.lhs - 1.0).abs() < 1e-14 && (o.rhs - 1.0).abs() < 1e-14);

    let pass = (r.lhs - 1.0).abs() <= 1e-10 && (r.rhs - 1.0).abs() <= 1e-10 && median < Duration::from_millis(1);
    verdict(1, pass, format!("lhs {:?} rhs {:?}, median {median:?}", r.lhs, r.rhs));
}

#[test]
fn criterion_2_triple_tightness() {
    let inst = tight3_pauli();
    let h: [Observable; 3] = inst.observables.clone().try_into().unwrap();
    let sum = bounds::triple_sum(&h, &inst.state, true).unwrap();
    let prod = bounds::triple_product(&h, &inst.state).unwrap();

    // Frozen from the oracle: 2 and 8/27.
    let (oh, orho) = (oracle_family(&inst.observables), common::st(&inst.state));
    let os = common::triple_sum(&oh, &orho, true);
    let op = common::triple_product(&oh, &orho);
    assert!((os.lhs - 2.0).abs() < 1e-12 && (os.rhs - 2.0).abs() < 1e-12);
    assert!((op.lhs - 8.0 / 27.0).abs() < 1e-12 && (op.rhs - 8.0 / 27.0).abs() < 1e-12);

    let pass = [sum.lhs, sum.rhs].iter().all(|v| (v - 2.0).abs() <= 1e-9)
        && [prod.lhs, prod.rhs].iter().all(|v| (v - 8.0 / 27.0).abs() <= 1e-9);
    verdict(
        2,
        pass,
        format!(
            "sum lhs {:?} rhs {:?}, product lhs {:?} rhs {:?}",
            sum.lhs, sum.rhs, prod.lhs, prod.rhs
        ),
    );
}

#[test]
fn criterion_3_four_observable_tightness() {
    let inst = tight4_family(1.0, -1.0, 0.0);
    let r = inst.evaluate().unwrap();
    let o = common::quad_sum(&oracle_family(&inst.observables), &common::st(&inst.state), true);
    assert!((o.lhs - 3.0).abs() < 1e-12 && (o.rhs - 3.0).abs() < 1e-12);
    for t in &o.terms {
        assert!((t - 3f64.sqrt()).abs() < 1e-12);
    }
    let pass = (r.lhs - r.rhs).abs() <= 1e-9 && (r.lhs - 3.0).abs() <= 1e-9 && (o.lhs - r.lhs).abs() <= 1e-12;
    verdict(3, pass, format!("lhs {:?} rhs {:?}, oracle {:?}", r.lhs, r.rhs, o.lhs));
}

#[test]
fn criterion_4_fuzz() {
    let cfg = CampaignConfig {
        kinds: BoundKind::ALL.to_vec(),
        dims: vec![2, 4, 8],
        instances: 10_000,
        seed: Seed(2024),
        ..CampaignConfig::default()
    };
    let start = Instant::now();
    let out = run_campaign(&cfg).unwrap();
    let elapsed = start.elapsed();
    let total: usize = out.summary.counts.values().sum();
    let pass = total == 150_000
        && out.reports.iter().all(|r| r.gap >= -1e-9)
        && out.summary.failures == 0
        && elapsed < Duration::from_secs(60);
    verdict(
        4,
        pass,
        format!(
            "{total} instances, min gap {:e}, failures {}, {:.1?}",
            out.summary.min_gap, out.summary.failures, elapsed
        ),
    );
}

#[test]
fn criterion_5_structural_equivalence() {
    let mut worst_lib = 0.0f64;
    let mut worst_oracle = 0.0f64;
    for i in 0..1000u64 {
        let n = 3 + (i % 2) as usize;
        let dim = 2 + (i % 5) as usize;
        let (h, _) = family(n, dim, 50_000 + i);
        worst_lib = structural_check(&h).unwrap().into_iter().fold(worst_lib, f64::max);

        let lib_gram = common::of(&gram(&build_r(&h).unwrap()).to_matrix());
        let closed = common::gram_closed_form(&oracle_family(&h));
        for (a, b) in common::split(&lib_gram).iter().zip(&closed) {
            worst_oracle = worst_oracle.max(common::max_diff(a, b));
        }
    }
    let pass = worst_lib <= 1e-12 && worst_oracle <= 1e-12;
    verdict(
        5,
        pass,
        format!("max block residual {worst_lib:e}, against oracle {worst_oracle:e}"),
    );
}

#[test]
fn criterion_6_positivity() {
    let mut rng = Seed(606).rng();
    let mut min_functional = f64::INFINITY;
    let mut worst_oracle = 0.0f64;
    let mut worst_opt = 0.0f64;
    let mut worst_rss = 0.0f64;
    for n in [3usize, 4] {
        for i in 0..1000u64 {
            let dim = 2 + (i % 4) as usize;
            let (h, nu) = family(n, dim, 60_000 + 7 * i + n as u64);
            let alpha = rng.random_range(0.0..=FRAC_PI_2);
            let radius = alpha.cos() * alpha.sin() * rng.random::<f64>().sqrt();
            let r = Complex64::from_polar(radius, rng.random_range(0.0..std::f64::consts::TAU));
            let p = AncillaParams::new(alpha, r).unwrap();
            let f = trace_functional(&h, &p, &nu).unwrap();
            min_functional = min_functional.min(f);
            let o = common::trace_functional(&oracle_family(&h), alpha, r, &common::st(&nu));
            worst_oracle = worst_oracle.max((f - o).abs());

            let opt = optimal_ancilla(&h, &nu).unwrap();
            let at_opt = trace_functional(&h, &opt, &nu).unwrap();
            let terms = SchwarzTerms::new(&h, &nu).unwrap();
            worst_opt = worst_opt.max((at_opt - terms.minimum()).abs());
            if n == 3 {
                let t: [Observable; 3] = h.clone().try_into().unwrap();
                let rss = bounds::rss3(&t, &nu).unwrap();
                worst_rss = worst_rss.max((at_opt - rss.gap).abs());
            }
        }
    }
    let pass = min_functional >= -1e-10 && worst_oracle <= 1e-10 && worst_opt <= 1e-10 && worst_rss <= 1e-10;
    verdict(
        6,
        pass,
        format!(
            "min functional {min_functional:e}, optimum vs S - N {worst_opt:e}, vs rss3 {worst_rss:e}, oracle {worst_oracle:e}"
        ),
    );
}

#[test]
fn criterion_7_reductions() {
    let mut worst = 0.0f64;
    let mut worst_zero = 0.0f64;
    for i in 0..200u64 {
        let dim = 2 + (i % 4) as usize;
        let (h, s) = family(3, dim, 70_000 + i);
        let t: [Observable; 3] = h.clone().try_into().unwrap();
        let (q, tr) = reduce_h4_identity(&t, &s).unwrap();
        worst = worst
            .max((q.lhs - tr.lhs).abs())
            .max((q.rhs - tr.rhs).abs())
            .max((q.gap - tr.gap).abs());
        for (a, b) in q.terms.iter().zip(&tr.terms) {
            worst = worst.max((a - b).abs());
        }
        assert_eq!((q.dim, q.centered), (tr.dim, tr.centered));

        // H3 = 0, ancilla |0> and |1>: the two functionals are S -/+ <i[H1,H2]>.
        let via = robertson_via_r(&h[0], &h[1], &s).unwrap();
        let oh = vec![common::obs(&h[0]), common::obs(&h[1]), common::zeros(dim)];
        let orho = common::st(&s);
        let f0 = common::trace_functional(&oh, 0.0, common::c(0.0, 0.0), &orho);
        let f1 = common::trace_functional(&oh, FRAC_PI_2, common::c(0.0, 0.0), &orho);
        let s2 = common::triple_sum(&oh, &orho, false).lhs;
        let x = common::g(&oh, &orho, 0, 1) * common::c(0.0, 1.0);
        worst_zero = worst_zero
            .max((via.functional_ket0 - f0).abs())
            .max((via.functional_ket1 - f1).abs())
            .max((via.report.lhs - s2).abs())
            .max((via.report.rhs - x.norm()).abs())
            .max((f0 - (s2 - x.re)).abs());
        assert!(via.report.gap >= -1e-9 && !via.report.centered);
    }
    let pass = worst <= 1e-12 && worst_zero <= 1e-12;
    verdict(
        7,
        pass,
        format!("H4 = I field-wise max diff {worst:e}, H3 = 0 sum form max diff {worst_zero:e}"),
    );
}

#[test]
fn criterion_8_pauli_decomposition() {
    let mut worst = 0.0f64;
    let mut worst_oracle = 0.0f64;
    for n in [3usize, 4] {
        for i in 0..1000u64 {
            let dim = 2 + (i % 5) as usize;
            let (h, _) = family(n, dim, 80_000 + 3 * i + n as u64);
            worst = worst.max(pauli_decomposition_check(&h).unwrap());
            let lib = common::of(&build_r(&h).unwrap().to_matrix());
            worst_oracle = worst_oracle.max(common::max_diff(&lib, &common::r_operator(&oracle_family(&h))));
        }
    }
    let pass = worst <= 1e-14 && worst_oracle <= 1e-14;
    verdict(8, pass, format!("dual-path residual {worst:e}, against oracle {worst_oracle:e}"));
}

#[test]
fn criterion_9_search_soundness() {
    let start = Instant::now();
    let mut lowest = f64::INFINITY;
    for i in 0..100u64 {
        let kind = BoundKind::ALL[(i % 5) as usize];
        let dim = 2 + (i / 5 % 5) as usize;
        let (h, _) = campaign_instance(kind.arity(), dim, i as usize, Seed(90_000)).unwrap();
        let cfg = SearchConfig {
            seed: Seed(i),
            pure_only: i % 3 != 0,
            ..SearchConfig::default()
        };
        let res = search_min_ratio(&h, kind, &cfg).unwrap();
        let check = bounds::evaluate(kind, &h, &res.best_state, true).unwrap().ratio();
        assert!((check - res.best_ratio).abs() <= 1e-9 * check.max(1.0) || check == res.best_ratio);
        lowest = lowest.min(res.best_ratio);
    }
    let tight3 = tight3_pauli();
    let r3 = search_min_ratio(&tight3.observables, BoundKind::TripleSum, &SearchConfig::default()).unwrap();
    let tight4 = tight4_family(1.0, -1.0, 0.0);
    let r4 = search_min_ratio(&tight4.observables, BoundKind::QuadSum, &SearchConfig::default()).unwrap();
    let elapsed = start.elapsed();
    let pass = lowest >= 1.0 - 1e-6
        && r3.best_ratio <= 1.0 + 1e-3
        && r4.best_ratio <= 1.0 + 1e-3
        && elapsed < Duration::from_secs(30);
    verdict(
        9,
        pass,
        format!(
            "lowest random ratio {lowest:?}, pauli3 {:?}, tight4 {:?}, {:.1?}",
            r3.best_ratio, r4.best_ratio, elapsed
        ),
    );
}
