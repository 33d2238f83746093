//! Cyclic Jacobi eigensolver for Hermitian matrices, used as an independent
//! numeric oracle.
//!
//! Each step zeroes one off-diagonal pair `(p, q)` with a unitary
//! `W = D·G`: `D` rotates the phase of `a_pq` onto the real axis and `G` is
//! the real Jacobi rotation of the resulting symmetric 2×2 problem. Pairs
//! are visited row by row, so results are deterministic.

use std::ops::Range;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::operators::{build_operator, OperatorKind};
use crate::symmetrize::{build_t, conjugate_by_t, sym_dim};

pub const DEFAULT_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_SWEEPS: usize = 50;
/// Largest `‖M − M†‖_max` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Eigenvalues closer than this are treated as one cluster.
pub const CLUSTER_GAP: f64 = 1e-8;
/// Grouping gap for the parity-support test. Opposite-parity eigenvalues of
/// Ñ come within 1e-12..1e-5 of each other for n ≳ 32, and single
/// eigenvectors there mix at the level noise/gap, so support is judged on
/// the span of each such group instead.
pub const SUPPORT_GAP: f64 = 1e-4;

type C = Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct EigenDecomposition {
    /// Ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: DenseMatrix<C>,
    pub sweeps_used: usize,
    pub offdiag_final: f64,
}

impl EigenDecomposition {
    pub fn vector(&self, j: usize) -> Vec<C> {
        self.vectors.column(j)
    }

    /// Maximal runs of consecutive eigenvalues with gaps below `gap`.
    pub fn clusters(&self, gap: f64) -> Vec<Range<usize>> {
        clusters(&self.values, gap)
    }
}

fn clusters(values: &[f64], gap: f64) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i] - values[i - 1] >= gap {
            out.push(start..i);
            start = i;
        }
    }
    out
}

fn offdiag_norm(a: &[C], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Zero `a[p][q]` in place and accumulate the rotation into `v`.
fn rotate(a: &mut [C], v: &mut [C], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let r = apq.norm();
    let (app, aqq) = (a[p * n + p].re, a[q * n + q].re);
    // below the precision of both diagonal entries: drop it rather than
    // rotate, which would mix nearly degenerate but decoupled directions
    let negligible = app.abs() + 100.0 * r == app.abs() && aqq.abs() + 100.0 * r == aqq.abs();
    if r == 0.0 || negligible {
        a[p * n + q] = C::new(0.0, 0.0);
        a[q * n + p] = C::new(0.0, 0.0);
        return;
    }
    let phase = apq / r;
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let w_pp = C::new(c, 0.0);
    let w_pq = C::new(s, 0.0);
    let w_qp = -phase.conj() * s;
    let w_qq = phase.conj() * c;

    // A ← A W, V ← V W
    for k in 0..n {
        let (x, y) = (a[k * n + p], a[k * n + q]);
        a[k * n + p] = x * w_pp + y * w_qp;
        a[k * n + q] = x * w_pq + y * w_qq;
        let (x, y) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = x * w_pp + y * w_qp;
        v[k * n + q] = x * w_pq + y * w_qq;
    }
    // A ← W† A
    for k in 0..n {
        let (x, y) = (a[p * n + k], a[q * n + k]);
        a[p * n + k] = w_pp.conj() * x + w_qp.conj() * y;
        a[q * n + k] = w_pq.conj() * x + w_qq.conj() * y;
    }
    a[p * n + q] = C::new(0.0, 0.0);
    a[q * n + p] = C::new(0.0, 0.0);
    a[p * n + p] = C::new(a[p * n + p].re, 0.0);
    a[q * n + q] = C::new(a[q * n + q].re, 0.0);
}

/// Modified Gram-Schmidt on the columns `cols` of `v` (row-major, n×n).
fn orthonormalize(v: &mut [C], n: usize, cols: Range<usize>) {
    for j in cols.clone() {
        for i in cols.start..j {
            let dot: C = (0..n).map(|k| v[k * n + i].conj() * v[k * n + j]).sum();
            for k in 0..n {
                let vi = v[k * n + i];
                v[k * n + j] -= dot * vi;
            }
        }
        let norm = (0..n).map(|k| v[k * n + j].norm_sqr()).sum::<f64>().sqrt();
        if norm > 0.0 {
            for k in 0..n {
                v[k * n + j] /= norm;
            }
        }
    }
}

pub fn jacobi_eigh(m: &DenseMatrix<C>, tol: f64, max_sweeps: usize) -> Result<EigenDecomposition> {
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NonHermitian { deviation });
    }
    let n = m.dim();
    // start from the exactly Hermitian part
    let mut a: Vec<C> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push((m[(i, j)] + m[(j, i)].conj()) * 0.5);
        }
    }
    let mut v: Vec<C> = DenseMatrix::<C>::identity(n).entries().copied().collect();
    let threshold = tol * m.frobenius_norm();

    let mut sweeps_used = 0;
    let mut off = offdiag_norm(&a, n);
    while off > threshold {
        if sweeps_used == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps: max_sweeps,
                offdiag: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        sweeps_used += 1;
        off = offdiag_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re).then(i.cmp(&j)));
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut sorted = vec![C::new(0.0, 0.0); n * n];
    for (new, &old) in order.iter().enumerate() {
        for k in 0..n {
            sorted[k * n + new] = v[k * n + old];
        }
    }
    for cluster in clusters(&values, CLUSTER_GAP) {
        if cluster.len() > 1 {
            orthonormalize(&mut sorted, n, cluster);
        }
    }
    let vectors = DenseMatrix::from_fn(n, |i, j| sorted[i * n + j]);
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps_used,
        offdiag_final: off,
    })
}

/// Jacobi with the default tolerance and sweep limit.
pub fn eigh(m: &DenseMatrix<C>) -> Result<EigenDecomposition> {
    jacobi_eigh(m, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)
}

/// `‖Mv − λv‖∞ / max(1, ‖v‖∞)`.
pub fn residual(m: &DenseMatrix<C>, value: f64, vector: &[C]) -> Result<f64> {
    if vector.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: vector.len(),
        });
    }
    let mv = m.mul_vec(vector);
    let num = mv
        .iter()
        .zip(vector)
        .map(|(x, y)| (x - y * value).norm())
        .fold(0.0, f64::max);
    let vmax = vector.iter().map(|x| x.norm()).fold(0.0, f64::max);
    Ok(num / vmax.max(1.0))
}

/// `‖MV − VΛ‖_max / max(1, ‖M‖_max)` and `‖V†V − I‖_max`.
pub fn decomposition_errors(m: &DenseMatrix<C>, d: &EigenDecomposition) -> (f64, f64) {
    let mv = m * &d.vectors;
    let vl = DenseMatrix::from_fn(m.dim(), |i, j| d.vectors[(i, j)] * d.values[j]);
    let fit = (&mv - &vl).max_abs() / m.max_abs().max(1.0);
    let gram = &d.vectors.adjoint() * &d.vectors;
    let ortho = (&gram - &DenseMatrix::identity(m.dim())).max_abs();
    (fit, ortho)
}

/// Outcome of comparing the number operator with its symmetrized form.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub n: usize,
    pub spectrum: Vec<f64>,
    /// `max |λ_i(𝒩) − λ_i(Ñ)|`.
    pub spectrum_max_diff: f64,
    pub min_eigenvalue: f64,
    pub trace: f64,
    /// `|Σλ − tr 𝒩| / max(1, |tr 𝒩|)`.
    pub trace_rel_err: f64,
    /// Number of eigenvectors of Ñ supported on the even and odd blocks.
    pub block_supports: (usize, usize),
    /// Largest component of any eigenvector of Ñ on its other block.
    pub support_leak: f64,
}

impl ValidationReport {
    pub const SPECTRUM_TOL: f64 = 1e-10;
    pub const NONNEG_TOL: f64 = 1e-12;
    pub const TRACE_TOL: f64 = 1e-9;
    pub const LEAK_TOL: f64 = 1e-9;

    /// Spectra agree within `SPECTRUM_TOL · max(1, λ_max)`.
    pub fn spectra_agree(&self) -> bool {
        let scale = self.spectrum.last().copied().unwrap_or(0.0).abs().max(1.0);
        self.spectrum_max_diff <= Self::SPECTRUM_TOL * scale
    }

    pub fn nonnegative(&self) -> bool {
        let scale = self.spectrum.last().copied().unwrap_or(0.0).abs().max(1.0);
        self.min_eigenvalue >= -Self::NONNEG_TOL * scale
    }

    pub fn trace_matches(&self) -> bool {
        self.trace_rel_err <= Self::TRACE_TOL
    }

    pub fn supports_ok(&self) -> bool {
        self.block_supports == (sym_dim(self.n), self.n - sym_dim(self.n))
            && self.support_leak < Self::LEAK_TOL
    }

    pub fn passed(&self) -> bool {
        self.spectra_agree() && self.nonnegative() && self.trace_matches() && self.supports_ok()
    }
}

/// Sort the eigenvectors of Ñ into parity blocks. Within each group the
/// compressed even-block projector `V_c† P V_c` is diagonalized, which
/// picks a basis of the cluster made of pure-parity vectors.
fn block_supports(d: &EigenDecomposition, n: usize) -> Result<((usize, usize), f64)> {
    let m = sym_dim(n);
    let (mut even, mut odd) = (0, 0);
    let mut leak: f64 = 0.0;
    for cluster in d.clusters(SUPPORT_GAP) {
        let cols: Vec<Vec<C>> = cluster.clone().map(|j| d.vector(j)).collect();
        let size = cols.len();
        let proj = DenseMatrix::from_fn(size, |a, b| {
            (0..m).map(|k| cols[a][k].conj() * cols[b][k]).sum::<C>()
        });
        let inner = eigh(&proj)?;
        for j in 0..size {
            let u = inner.vector(j);
            let w: Vec<C> = (0..n)
                .map(|k| (0..size).map(|a| cols[a][k] * u[a]).sum())
                .collect();
            let is_even = inner.values[j] > 0.5;
            let off = if is_even { &w[m..] } else { &w[..m] };
            leak = leak.max(off.iter().map(|x| x.norm()).fold(0.0, f64::max));
            if is_even {
                even += 1;
            } else {
                odd += 1;
            }
        }
    }
    Ok(((even, odd), leak))
}

pub fn cross_validate(n: usize) -> Result<ValidationReport> {
    if !(2..=256).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "cross validation needs 2 <= n <= 256, got {n}"
        )));
    }
    let num = build_operator::<C>(OperatorKind::Number, n)?;
    let t = build_t::<C>(n)?;
    let nt = conjugate_by_t(&num, &t)?;
    let nt = DenseMatrix::from_fn(n, |i, j| (nt[(i, j)] + nt[(j, i)].conj()) * 0.5);

    let plain = eigh(&num)?;
    let sym = eigh(&nt)?;
    let spectrum_max_diff = plain
        .values
        .iter()
        .zip(&sym.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let trace = num.trace().re;
    let sum: f64 = plain.values.iter().sum();
    let (block_supports, support_leak) = block_supports(&sym, n)?;
    Ok(ValidationReport {
        n,
        min_eigenvalue: plain.values.first().copied().unwrap_or(0.0),
        spectrum: plain.values,
        spectrum_max_diff,
        trace,
        trace_rel_err: (sum - trace).abs() / trace.abs().max(1.0),
        block_supports,
        support_leak,
    })
}
