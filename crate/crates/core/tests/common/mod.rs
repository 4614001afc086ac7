//! Brute-force reference arithmetic on plain nested vectors.
//!
//! Nothing here goes through the library's matrix type; library values are
//! only converted in via `rows()` so every figure is recomputed from scratch.

#![allow(dead_code)]

use num_complex::Complex64 as C;
use uncertainty::{ComplexMatrix, Observable, State};

pub type M = Vec<Vec<C>>;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn zeros(n: usize) -> M {
    vec![vec![c(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> M {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

pub fn of(m: &ComplexMatrix) -> M {
    m.rows()
}

pub fn obs(h: &Observable) -> M {
    h.matrix().rows()
}

pub fn st(s: &State) -> M {
    s.matrix().rows()
}

pub fn mul(a: &M, b: &M) -> M {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = c(0.0, 0.0);
            for k in 0..n {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn add(a: &M, b: &M) -> M {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
        .collect()
}

pub fn sub(a: &M, b: &M) -> M {
    add(a, &scale(b, c(-1.0, 0.0)))
}

pub fn scale(a: &M, z: C) -> M {
    a.iter().map(|r| r.iter().map(|x| x * z).collect()).collect()
}

pub fn adj(a: &M) -> M {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn trace(a: &M) -> C {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn comm(a: &M, b: &M) -> M {
    sub(&mul(a, b), &mul(b, a))
}

pub fn kron(a: &M, b: &M) -> M {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// 2x2 arrangement of equal-size blocks.
pub fn blocks(tl: &M, tr: &M, bl: &M, br: &M) -> M {
    let d = tl.len();
    let mut out = zeros(2 * d);
    for i in 0..d {
        for j in 0..d {
            out[i][j] = tl[i][j];
            out[i][j + d] = tr[i][j];
            out[i + d][j] = bl[i][j];
            out[i + d][j + d] = br[i][j];
        }
    }
    out
}

pub fn max_diff(a: &M, b: &M) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn expect(h: &M, rho: &M) -> C {
    trace(&mul(rho, h))
}

pub fn variance(h: &M, rho: &M) -> f64 {
    let m = expect(h, rho).re;
    expect(&mul(h, h), rho).re - m * m
}

fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

/// (lhs, rhs, terms) for each bound, straight from the definitions.
pub struct Eval {
    pub lhs: f64,
    pub rhs: f64,
    pub terms: Vec<f64>,
}

pub fn g(h: &[M], rho: &M, j: usize, k: usize) -> C {
    expect(&comm(&h[j], &h[k]), rho)
}

pub fn robertson(h: &[M], rho: &M) -> Eval {
    let t = g(h, rho, 0, 1).norm();
    Eval {
        lhs: (variance(&h[0], rho) * variance(&h[1], rho)).sqrt(),
        rhs: t / 2.0,
        terms: vec![t],
    }
}

fn sum_lhs(h: &[M], rho: &M, centered: bool) -> f64 {
    h.iter()
        .map(|x| if centered { variance(x, rho) } else { expect(&mul(x, x), rho).re })
        .sum()
}

fn triple_terms(h: &[M], rho: &M) -> Vec<f64> {
    vec![g(h, rho, 0, 1).norm(), g(h, rho, 0, 2).norm(), g(h, rho, 1, 2).norm()]
}

pub fn triple_sum(h: &[M], rho: &M, centered: bool) -> Eval {
    let terms = triple_terms(h, rho);
    Eval {
        lhs: sum_lhs(h, rho, centered),
        rhs: terms.iter().sum::<f64>() / 3f64.sqrt(),
        terms,
    }
}

pub fn triple_product(h: &[M], rho: &M) -> Eval {
    let terms = triple_terms(h, rho);
    Eval {
        lhs: h.iter().map(|x| variance(x, rho)).product(),
        rhs: terms.iter().product::<f64>() / 27f64.sqrt(),
        terms,
    }
}

pub fn rss3(h: &[M], rho: &M) -> Eval {
    let terms = triple_terms(h, rho);
    Eval {
        lhs: sum_lhs(h, rho, false),
        rhs: terms.iter().map(|t| t * t).sum::<f64>().sqrt(),
        terms,
    }
}

pub fn quad_sum(h: &[M], rho: &M, centered: bool) -> Eval {
    let terms: Vec<f64> = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]]
        .iter()
        .map(|p| {
            let sign = if inversions(p).is_multiple_of(2) { 1.0 } else { -1.0 };
            (g(h, rho, p[0], p[1]) - g(h, rho, p[2], p[3]) * sign).norm()
        })
        .collect();
    Eval {
        lhs: sum_lhs(h, rho, centered),
        rhs: terms.iter().sum::<f64>() / 3f64.sqrt(),
        terms,
    }
}

/// R for three or four observables, assembled entry by entry.
pub fn r_operator(h: &[M]) -> M {
    let i = c(0.0, 1.0);
    let d = h[0].len();
    let h4 = if h.len() == 4 { h[3].clone() } else { zeros(d) };
    let tl = add(&h[0], &scale(&h[1], i));
    let br = sub(&h[0], &scale(&h[1], i));
    let tr = add(&scale(&h[2], i), &h4);
    let bl = sub(&scale(&h[2], i), &h4);
    blocks(&tl, &tr, &bl, &br)
}

/// Blocks of R R^dagger written out with commutators.
pub fn gram_closed_form(h: &[M]) -> [M; 4] {
    let i = c(0.0, 1.0);
    let mi = c(0.0, -1.0);
    let d = h[0].len();
    let h4 = if h.len() == 4 { h[3].clone() } else { zeros(d) };
    let hs = [h[0].clone(), h[1].clone(), h[2].clone(), h4];
    let cm = |j: usize, k: usize| comm(&hs[j], &hs[k]);
    let squares = hs.iter().fold(zeros(d), |acc, x| add(&acc, &mul(x, x)));
    let r1 = add(&add(&squares, &scale(&cm(0, 1), mi)), &scale(&cm(2, 3), i));
    let r2 = add(
        &add(&scale(&cm(0, 2), mi), &scale(&cm(1, 3), mi)),
        &sub(&cm(1, 2), &cm(0, 3)),
    );
    let r3 = add(
        &add(&scale(&cm(0, 2), mi), &scale(&cm(1, 3), mi)),
        &sub(&cm(0, 3), &cm(1, 2)),
    );
    let r4 = add(&add(&squares, &scale(&cm(0, 1), i)), &scale(&cm(2, 3), mi));
    [r1, r2, r3, r4]
}

pub fn split(m: &M) -> [M; 4] {
    let d = m.len() / 2;
    let take = |r0: usize, c0: usize| -> M {
        (0..d).map(|i| (0..d).map(|j| m[r0 + i][c0 + j]).collect()).collect()
    };
    [take(0, 0), take(0, d), take(d, 0), take(d, d)]
}

pub fn mu(alpha: f64, r: C) -> M {
    let (co, si) = (alpha.cos(), alpha.sin());
    vec![vec![c(co * co, 0.0), r], vec![r.conj(), c(si * si, 0.0)]]
}

/// Tr((mu (x) nu) R R^dagger).
pub fn trace_functional(h: &[M], alpha: f64, r: C, nu: &M) -> f64 {
    let big = r_operator(h);
    let rr = mul(&big, &adj(&big));
    expect(&rr, &kron(&mu(alpha, r), nu)).re
}

pub fn pauli() -> [M; 3] {
    let o = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        vec![vec![o, one], vec![one, o]],
        vec![vec![o, -i], vec![i, o]],
        vec![vec![one, o], vec![o, -one]],
    ]
}

/// |psi><psi| for a normalized vector.
pub fn projector(psi: &[C]) -> M {
    let n: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    psi.iter()
        .map(|a| psi.iter().map(|b| a * b.conj() / n).collect())
        .collect()
}
