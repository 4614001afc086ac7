//! The 2x2 block operators `R` for three and four observables, their Gram
//! operators `R R^dagger`, the ancilla state family `mu (x) nu`, and the
//! ancilla choice that minimizes `Tr(rho R R^dagger)`.
//!
//! For three observables
//!
//! ```text
//! R = [ H1 + iH2    iH3      ]
//!     [ iH3         H1 - iH2 ]
//! ```
//!
//! and for four the off-diagonal blocks become `iH3 + H4` and `iH3 - H4`.
//! Since `R R^dagger >= 0`, `Tr(rho R R^dagger) >= 0` for every state `rho`;
//! with `rho = mu (x) nu` this trace is
//! `S + t x + 2 Re(r b)`, `t = sin^2(a) - cos^2(a)`, where `S = Tr nu sum H_j^2`,
//! `x` is real and `b` complex, both linear in commutator expectations under
//! `nu`. The feasible set of `(t, 2r)` is the unit disk, so the minimum is
//! `S - sqrt(x^2 + |b|^2)`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::matcore::{expectation, pauli, tensor, ComplexMatrix, Observable, State, I, ZERO};
use crate::tol;

/// `[[tl, tr], [bl, br]]` with all blocks of equal dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawBlocks")]
pub struct BlockOperator {
    tl: ComplexMatrix,
    tr: ComplexMatrix,
    bl: ComplexMatrix,
    br: ComplexMatrix,
}

#[derive(Deserialize)]
struct RawBlocks {
    tl: ComplexMatrix,
    tr: ComplexMatrix,
    bl: ComplexMatrix,
    br: ComplexMatrix,
}

impl TryFrom<RawBlocks> for BlockOperator {
    type Error = Error;

    fn try_from(raw: RawBlocks) -> Result<Self> {
        BlockOperator::new(raw.tl, raw.tr, raw.bl, raw.br)
    }
}

impl BlockOperator {
    pub fn new(tl: ComplexMatrix, tr: ComplexMatrix, bl: ComplexMatrix, br: ComplexMatrix) -> Result<Self> {
        let d = tl.dim();
        for m in [&tr, &bl, &br] {
            check_dim(d, m.dim())?;
        }
        Ok(Self { tl, tr, bl, br })
    }

    /// Dimension of each block.
    pub fn block_dim(&self) -> usize {
        self.tl.dim()
    }

    pub fn blocks(&self) -> [&ComplexMatrix; 4] {
        [&self.tl, &self.tr, &self.bl, &self.br]
    }

    /// The assembled `2d x 2d` matrix.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let d = self.block_dim();
        let [tl, tr, bl, br] = self.blocks();
        ComplexMatrix::from_fn(2 * d, |i, j| {
            let m = match (i < d, j < d) {
                (true, true) => tl,
                (true, false) => tr,
                (false, true) => bl,
                (false, false) => br,
            };
            m.get(i % d, j % d)
        })
        .expect("blocks are finite")
    }

    pub fn adjoint(&self) -> Self {
        Self {
            tl: self.tl.adjoint(),
            tr: self.bl.adjoint(),
            bl: self.tr.adjoint(),
            br: self.br.adjoint(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.block_dim(), other.block_dim())?;
        Ok(Self {
            tl: &(&self.tl * &other.tl) + &(&self.tr * &other.bl),
            tr: &(&self.tl * &other.tr) + &(&self.tr * &other.br),
            bl: &(&self.bl * &other.tl) + &(&self.br * &other.bl),
            br: &(&self.bl * &other.tr) + &(&self.br * &other.br),
        })
    }

    /// Largest block-wise entry difference, one value per block.
    pub fn block_residuals(&self, other: &Self) -> Result<[f64; 4]> {
        let a = self.blocks();
        let b = other.blocks();
        Ok([
            a[0].max_abs_diff(b[0])?,
            a[1].max_abs_diff(b[1])?,
            a[2].max_abs_diff(b[2])?,
            a[3].max_abs_diff(b[3])?,
        ])
    }
}

/// R R^dagger by block multiplication.
pub fn gram(rop: &BlockOperator) -> BlockOperator {
    rop.mul(&rop.adjoint()).expect("square blocks")
}

fn same_dim(h: &[Observable]) -> Result<usize> {
    let d = h[0].dim();
    for x in h {
        check_dim(d, x.dim())?;
    }
    Ok(d)
}

fn plus_i(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a + &b.scale(I)
}

fn minus_i(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a - &b.scale(I)
}

pub fn build_r3(h: &[Observable; 3]) -> Result<BlockOperator> {
    same_dim(h)?;
    let [h1, h2, h3] = [h[0].matrix(), h[1].matrix(), h[2].matrix()];
    let ih3 = h3.scale(I);
    BlockOperator::new(plus_i(h1, h2), ih3.clone(), ih3, minus_i(h1, h2))
}

pub fn build_r4(h: &[Observable; 4]) -> Result<BlockOperator> {
    same_dim(h)?;
    let [h1, h2, h3, h4] = [h[0].matrix(), h[1].matrix(), h[2].matrix(), h[3].matrix()];
    BlockOperator::new(
        plus_i(h1, h2),
        plus_i(h4, h3),
        &h3.scale(I) - h4,
        minus_i(h1, h2),
    )
}

/// `build_r3` or `build_r4` by the number of observables.
pub fn build_r(h: &[Observable]) -> Result<BlockOperator> {
    match h {
        [a, b, c] => build_r3(&[a.clone(), b.clone(), c.clone()]),
        [a, b, c, d] => build_r4(&[a.clone(), b.clone(), c.clone(), d.clone()]),
        _ => Err(three_or_four(h.len())),
    }
}

fn three_or_four(found: usize) -> Error {
    Error::ObservableCount {
        expected: "3 or 4",
        found,
    }
}

/// The Gram blocks written through commutators:
///
/// ```text
/// R1 = sum H^2 - i[H1,H2] + i[H3,H4]
/// R2 = -i[H1,H3] - i[H2,H4] - [H1,H4] + [H2,H3]
/// R3 = -i[H1,H3] - i[H2,H4] + [H1,H4] - [H2,H3]
/// R4 = sum H^2 + i[H1,H2] - i[H3,H4]
/// ```
///
/// with the `H4` terms absent for three observables.
pub fn closed_form_gram(h: &[Observable]) -> Result<BlockOperator> {
    if !(h.len() == 3 || h.len() == 4) {
        return Err(three_or_four(h.len()));
    }
    let d = same_dim(h)?;
    let m: Vec<&ComplexMatrix> = h.iter().map(Observable::matrix).collect();
    let comm = |j: usize, k: usize| m[j].commutator(m[k]).expect("equal dims");
    let mut squares = ComplexMatrix::zeros(d);
    for x in &m {
        squares = &squares + &(*x * *x);
    }
    let mut diag = comm(0, 1);
    let mut off_i = comm(0, 2);
    let mut off_r = -&comm(1, 2);
    if h.len() == 4 {
        diag = &diag - &comm(2, 3);
        off_i = &off_i + &comm(1, 3);
        off_r = &off_r + &comm(0, 3);
    }
    let i_diag = diag.scale(I);
    let i_off = off_i.scale(-I);
    Ok(BlockOperator {
        tl: &squares - &i_diag,
        tr: &i_off - &off_r,
        bl: &i_off + &off_r,
        br: &squares + &i_diag,
    })
}

/// Entrywise deviation of `gram(build_r(h))` from `closed_form_gram(h)`, per block.
pub fn structural_check(h: &[Observable]) -> Result<[f64; 4]> {
    let direct = gram(&build_r(h)?);
    direct.block_residuals(&closed_form_gram(h)?)
}

/// `R = I (x) H1 + i s3 (x) H2 + i s1 (x) H3 [+ i s2 (x) H4]`.
pub fn pauli_form(h: &[Observable]) -> Result<ComplexMatrix> {
    if !(h.len() == 3 || h.len() == 4) {
        return Err(three_or_four(h.len()));
    }
    same_dim(h)?;
    let factors = [pauli::identity(), pauli::sigma3().scale(I), pauli::sigma1().scale(I), pauli::sigma2().scale(I)];
    let mut acc = tensor(&factors[0], h[0].matrix());
    for (f, x) in factors.iter().zip(h).skip(1) {
        acc = &acc + &tensor(f, x.matrix());
    }
    Ok(acc)
}

/// Max entry difference between the block assembly of `R` and its Pauli-tensor form.
pub fn pauli_decomposition_check(h: &[Observable]) -> Result<f64> {
    build_r(h)?.to_matrix().max_abs_diff(&pauli_form(h)?)
}

/// Max entry difference between `R R^dagger` for three observables and
/// `sum H^2 - i s3 (x) [H1,H2] - i s1 (x) [H1,H3] + i s2 (x) [H2,H3]`.
pub fn pauli_gram_check(h: &[Observable; 3]) -> Result<f64> {
    let d = same_dim(h)?;
    let m: Vec<&ComplexMatrix> = h.iter().map(Observable::matrix).collect();
    let mut squares = ComplexMatrix::zeros(d);
    for x in &m {
        squares = &squares + &(*x * *x);
    }
    let expected = &(&(&tensor(&pauli::identity(), &squares)
        - &tensor(&pauli::sigma3().scale(I), &m[0].commutator(m[1])?))
        - &tensor(&pauli::sigma1().scale(I), &m[0].commutator(m[2])?))
        + &tensor(&pauli::sigma2().scale(I), &m[1].commutator(m[2])?);
    gram(&build_r3(h)?).to_matrix().max_abs_diff(&expected)
}

/// The qubit state `mu = [[cos^2 a, r], [r*, sin^2 a]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AncillaParams {
    alpha: f64,
    r: Complex64,
}

impl AncillaParams {
    pub fn new(alpha: f64, r: Complex64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&alpha) {
            return Err(Error::AncillaAngle(alpha));
        }
        let limit = (alpha.cos() * alpha.sin()).powi(2);
        let r_sq = r.norm_sqr();
        if !r_sq.is_finite() || r_sq > limit + tol::FEASIBILITY {
            return Err(Error::InfeasibleAncilla { r_sq, limit });
        }
        Ok(Self { alpha, r })
    }

    /// `|0><0|`.
    pub fn ket0() -> Self {
        Self { alpha: 0.0, r: ZERO }
    }

    /// `|1><1|`.
    pub fn ket1() -> Self {
        Self {
            alpha: FRAC_PI_2,
            r: ZERO,
        }
    }

    /// From `t = sin^2 a - cos^2 a` and `r`, with `t^2 + 4|r|^2 <= 1`.
    pub fn from_disk(t: f64, r: Complex64) -> Result<Self> {
        let t = t.clamp(-1.0, 1.0);
        let alpha = 0.5 * (-t).acos();
        let limit = 0.5 * (1.0 - t * t).max(0.0).sqrt();
        // Pull back onto the boundary when rounding lands just outside it.
        let r = if r.norm() > limit && r.norm() <= limit + 1e-12 {
            r * (limit / r.norm())
        } else {
            r
        };
        Self::new(alpha, r)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn r(&self) -> Complex64 {
        self.r
    }

    /// `sin^2 a - cos^2 a`.
    pub fn t(&self) -> f64 {
        -(2.0 * self.alpha).cos()
    }

    pub fn mu(&self) -> ComplexMatrix {
        let c = self.alpha.cos();
        let s = self.alpha.sin();
        pauli::two_by_two([
            [Complex64::new(c * c, 0.0), self.r],
            [self.r.conj(), Complex64::new(s * s, 0.0)],
        ])
    }
}

/// `mu (x) nu`.
pub fn ancilla_state(p: &AncillaParams, nu: &State) -> Result<State> {
    let mu = State::new(p.mu()).map_err(|e| e.context("ancilla"))?;
    let rho = tensor(mu.matrix(), nu.matrix());
    State::new(rho)
}

/// `Tr(rho R R^dagger)` with `rho = mu (x) nu`, from the assembled matrices.
pub fn trace_functional(h: &[Observable], p: &AncillaParams, nu: &State) -> Result<f64> {
    let g = gram(&build_r(h)?).to_matrix();
    let rho = ancilla_state(p, nu)?;
    Ok(expectation(&g, &rho)?.re)
}

/// The scalars of the expansion `Tr(rho R R^dagger) = S + t x + 2 Re(r b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzTerms {
    /// `Tr nu sum_j H_j^2`.
    pub second_moment: f64,
    /// `Tr nu i[H1,H2]`, or `Tr nu i([H1,H2] - [H3,H4])` for four observables.
    pub x: f64,
    /// `Tr nu R3`: `-i g13 - g23`, or `-i g13 - i g24 + g14 - g23`.
    pub b: Complex64,
}

impl SchwarzTerms {
    pub fn new(h: &[Observable], nu: &State) -> Result<Self> {
        if !(h.len() == 3 || h.len() == 4) {
            return Err(three_or_four(h.len()));
        }
        check_dim(same_dim(h)?, nu.dim())?;
        let mut second_moment = 0.0;
        for x in h {
            second_moment += expectation(&(x.matrix() * x.matrix()), nu)?.re;
        }
        let g = |j: usize, k: usize| -> Result<Complex64> {
            expectation(&h[j].matrix().commutator(h[k].matrix())?, nu)
        };
        let mut x_c = I * g(0, 1)?;
        let mut b = -I * g(0, 2)? - g(1, 2)?;
        if h.len() == 4 {
            x_c -= I * g(2, 3)?;
            b += -I * g(1, 3)? + g(0, 3)?;
        }
        Ok(Self {
            second_moment,
            x: x_c.re,
            b,
        })
    }

    /// `sqrt(x^2 + |b|^2)`.
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.b.norm())
    }

    /// The closed-form value of the trace functional at `p`.
    pub fn expansion(&self, p: &AncillaParams) -> f64 {
        self.second_moment + p.t() * self.x + 2.0 * (p.r() * self.b).re
    }

    /// `S - sqrt(x^2 + |b|^2)`, the minimum over all ancilla parameters.
    pub fn minimum(&self) -> f64 {
        self.second_moment - self.norm()
    }
}

/// Ancilla parameters minimizing the trace functional: `(t, 2r) = -(x, b*) / |(x, b)|`.
/// Returns `(pi/4, 0)` when `x = b = 0`.
pub fn optimal_ancilla(h: &[Observable], nu: &State) -> Result<AncillaParams> {
    let terms = SchwarzTerms::new(h, nu)?;
    let n = terms.norm();
    if n == 0.0 {
        return AncillaParams::new(std::f64::consts::FRAC_PI_4, ZERO);
    }
    AncillaParams::from_disk(-terms.x / n, -terms.b.conj() / (2.0 * n))
}
