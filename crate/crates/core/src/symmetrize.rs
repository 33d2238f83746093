//! Reflection-symmetrized coordinates.
//!
//! The orthogonal matrix T mixes each pair `(e_k, e_{N-k})` into an even and
//! an odd combination:
//!
//! ```text
//! row 0      = e_0
//! row k      = (e_k + e_{N-k}) / √2      1 ≤ k ≤ ⌊(N-1)/2⌋
//! row N-k    = (e_{N-k} − e_k) / √2
//! row N/2    = e_{N/2}                    (N even)
//! ```
//!
//! so the first `⌊N/2⌋ + 1` coordinates of `T f` carry the P_d-even part of
//! `f` and the rest the odd part. Coordinates transform as `f̃ = T f` and
//! operators as `Z̃ = T Z Tᵀ`; any operator commuting with P_d becomes block
//! diagonal.

use crate::error::{Error, Result};
use crate::field::{ExactScalar, QuinticConstants, RealQuintic};
use crate::matrix::DenseMatrix;
use crate::operators::{basis_vector, build_operator, BasisKind, OperatorKind};
use crate::scalar::Scalar;

/// Size of the P_d-even block, `⌊n/2⌋ + 1`.
pub fn sym_dim(n: usize) -> usize {
    n / 2 + 1
}

/// Size of the P_d-odd block.
pub fn anti_dim(n: usize) -> usize {
    n - sym_dim(n)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizerT<S> {
    pub n: usize,
    pub matrix: DenseMatrix<S>,
}

pub fn build_t<S: Scalar>(n: usize) -> Result<SymmetrizerT<S>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let r = S::inv_sqrt(2).ok_or_else(|| Error::UnsupportedBackend {
        kind: "t".into(),
        n,
    })?;
    let mut t = DenseMatrix::<S>::zeros(n);
    t[(0, 0)] = S::one();
    for k in 1..=(n - 1) / 2 {
        t[(k, k)] = r.clone();
        t[(k, n - k)] = r.clone();
        t[(n - k, n - k)] = r.clone();
        t[(n - k, k)] = -r.clone();
    }
    if n.is_multiple_of(2) {
        t[(n / 2, n / 2)] = S::one();
    }
    Ok(SymmetrizerT { n, matrix: t })
}

/// Rotation by π/4 in the `(p, q)` coordinate plane:
/// `G_pp = G_qq = cos`, `G_pq = sin`, `G_qp = −sin`.
pub fn givens_quarter<S: Scalar>(n: usize, p: usize, q: usize) -> Result<DenseMatrix<S>> {
    if p >= n || q >= n {
        return Err(Error::IndexOutOfRange { index: p.max(q), n });
    }
    let r = S::inv_sqrt(2).ok_or_else(|| Error::UnsupportedBackend {
        kind: "givens".into(),
        n,
    })?;
    let mut g = DenseMatrix::<S>::identity(n);
    g[(p, p)] = r.clone();
    g[(q, q)] = r.clone();
    g[(p, q)] = r.clone();
    g[(q, p)] = -r;
    Ok(g)
}

/// The two plane rotations `(R₁₄, R₂₃)` whose product is the five-point T.
pub fn rotation_factorization_5<S: Scalar>() -> Result<(DenseMatrix<S>, DenseMatrix<S>)> {
    Ok((givens_quarter(5, 1, 4)?, givens_quarter(5, 2, 3)?))
}

/// `Z̃ = T Z Tᵀ`.
pub fn conjugate_by_t<S: Scalar>(
    z: &DenseMatrix<S>,
    t: &SymmetrizerT<S>,
) -> Result<DenseMatrix<S>> {
    let tz = t.matrix.try_mul(z)?;
    tz.try_mul(&t.matrix.transpose())
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockPair<S> {
    pub sym_block: DenseMatrix<S>,
    pub anti_block: DenseMatrix<S>,
    /// Largest magnitude outside the two diagonal blocks.
    pub offblock_max: f64,
    /// Number of entries outside the blocks that are not exactly zero.
    pub offblock_nonzeros: usize,
}

impl<S: Scalar> BlockPair<S> {
    pub fn is_block_diagonal(&self) -> bool {
        self.offblock_nonzeros == 0
    }
}

pub fn block_split<S: Scalar>(zt: &DenseMatrix<S>) -> BlockPair<S> {
    let n = zt.dim();
    let m = sym_dim(n);
    let mut offblock_max: f64 = 0.0;
    let mut offblock_nonzeros = 0;
    for i in 0..n {
        for j in 0..n {
            if (i < m) != (j < m) {
                let x = &zt[(i, j)];
                if !x.is_zero() {
                    offblock_nonzeros += 1;
                    offblock_max = offblock_max.max(x.abs_f64());
                }
            }
        }
    }
    BlockPair {
        sym_block: zt.block(0, m),
        anti_block: zt.block(m, n - m),
        offblock_max,
        offblock_nonzeros,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroCensus {
    pub zeros: usize,
    pub nonzeros: usize,
}

/// Float entries below this magnitude count as zero.
pub const FLOAT_ZERO_THRESHOLD: f64 = 1e-12;

pub fn zero_count<S: Scalar>(m: &DenseMatrix<S>) -> ZeroCensus {
    let zeros = m
        .entries()
        .filter(|x| x.negligible(FLOAT_ZERO_THRESHOLD))
        .count();
    ZeroCensus {
        zeros,
        nonzeros: m.dim() * m.dim() - zeros,
    }
}

/// Split of symmetrized coordinates into the even (`eta`) and odd (`xi`)
/// parts.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizedVector<S> {
    pub eta: Vec<S>,
    pub xi: Vec<S>,
}

impl<S: Scalar> SymmetrizedVector<S> {
    pub fn concat(&self) -> Vec<S> {
        self.eta.iter().chain(&self.xi).cloned().collect()
    }
}

pub fn symmetrize_vector<S: Scalar>(t: &SymmetrizerT<S>, f: &[S]) -> Result<SymmetrizedVector<S>> {
    if f.len() != t.n {
        return Err(Error::DimensionMismatch {
            left: t.n,
            right: f.len(),
        });
    }
    let mut full = t.matrix.mul_vec(f);
    let xi = full.split_off(sym_dim(t.n));
    Ok(SymmetrizedVector { eta: full, xi })
}

/// `ẽ_k = T e_k` for `kind = E`, and `ε̃_k = Φ ẽ_k` for `kind = Eps`
/// (e.g. `ε̃₁ = (ε₁ − ε₄)/√2` at N = 5).
pub fn symmetrized_basis_vector<S: Scalar>(kind: BasisKind, k: usize, n: usize) -> Result<Vec<S>> {
    let e = basis_vector::<S>(BasisKind::E, k, n)?;
    let t = build_t::<S>(n)?;
    let et = t.matrix.mul_vec(&e.components);
    match kind {
        BasisKind::E => Ok(et),
        BasisKind::Eps => Ok(build_operator::<S>(OperatorKind::Dft, n)?.mul_vec(&et)),
    }
}

/// `T P_d Tᵀ`.
pub fn symmetrized_reflection<S: Scalar>(n: usize) -> Result<DenseMatrix<S>> {
    let t = build_t::<S>(n)?;
    conjugate_by_t(&build_operator::<S>(OperatorKind::Pd, n)?, &t)
}

/// Whether `m` is `diag(+1, …, +1, −1, …, −1)` with `⌊n/2⌋ + 1` plus signs.
pub fn is_reflection_signature<S: Scalar>(m: &DenseMatrix<S>) -> bool {
    let n = m.dim();
    let want = DenseMatrix::from_fn(n, |i, j| match (i == j, i < sym_dim(n)) {
        (false, _) => S::zero(),
        (true, true) => S::one(),
        (true, false) => -S::one(),
    });
    (&want - m)
        .entries()
        .all(|x| x.negligible(FLOAT_ZERO_THRESHOLD))
}

/// 5×5 matrix `[[0₃₃, upper], [lower, 0₂₂]]`.
fn off_block_5(
    upper: [[ExactScalar; 2]; 3],
    lower: [[ExactScalar; 3]; 2],
) -> DenseMatrix<ExactScalar> {
    let mut m = DenseMatrix::zeros(5);
    for (i, row) in upper.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m[(i, 3 + j)] = v;
        }
    }
    for (i, row) in lower.into_iter().enumerate() {
        for (j, v) in row.into_iter().enumerate() {
            m[(3 + i, j)] = v;
        }
    }
    m
}

fn transpose_32(a: &[[ExactScalar; 2]; 3]) -> [[ExactScalar; 3]; 2] {
    [0, 1].map(|j| [0, 1, 2].map(|i| a[i][j].clone()))
}

fn neg_32(a: &[[ExactScalar; 2]; 3]) -> [[ExactScalar; 2]; 3] {
    a.clone().map(|row| row.map(|x| -x))
}

fn ex(x: &RealQuintic) -> ExactScalar {
    x.clone().into()
}

fn int(v: i64) -> ExactScalar {
    ExactScalar::from_int(v)
}

/// Closed-form five-point matrices in the symmetrized basis, written in
/// terms of a constant table.
pub mod closed_form {
    use super::*;

    /// `x₃₂ = [[0, 0], [0, s₁], [s₂, 0]]`.
    fn x32(k: &QuinticConstants) -> [[ExactScalar; 2]; 3] {
        [
            [int(0), int(0)],
            [int(0), ex(&k.s[1])],
            [ex(&k.s[2]), int(0)],
        ]
    }

    /// `d₃₂ = [[0, −√2], [−1, 0], [1, 1]]`.
    fn d32() -> [[ExactScalar; 2]; 3] {
        [
            [int(0), -ExactScalar::sqrt2()],
            [int(-1), int(0)],
            [int(1), int(1)],
        ]
    }

    /// `a₃₂(±s) = [[0, √2], [1, ±s₁], [±s₂ − 1, −1]]`.
    fn a32(k: &QuinticConstants, sign: i64) -> [[ExactScalar; 2]; 3] {
        let sg = int(sign);
        [
            [int(0), ExactScalar::sqrt2()],
            [int(1), sg.clone() * ex(&k.s[1])],
            [sg * ex(&k.s[2]) - int(1), int(-1)],
        ]
    }

    /// `X̃ = −[[0, x₃₂], [x₃₂ᵀ, 0]]`.
    pub fn x_tilde(k: &QuinticConstants) -> DenseMatrix<ExactScalar> {
        let x = x32(k);
        off_block_5(neg_32(&x), transpose_32(&neg_32(&x)))
    }

    /// `D̃ = [[0, d₃₂], [−d₃₂ᵀ, 0]]`.
    pub fn d_tilde() -> DenseMatrix<ExactScalar> {
        let d = d32();
        off_block_5(d.clone(), transpose_32(&neg_32(&d)))
    }

    /// `Ã = [[0, −a₃₂(s)], [a₃₂ᵀ(−s), 0]]`.
    pub fn a_tilde(k: &QuinticConstants) -> DenseMatrix<ExactScalar> {
        off_block_5(neg_32(&a32(k, 1)), transpose_32(&a32(k, -1)))
    }

    /// `Ãᵀ = [[0, a₃₂(−s)], [−a₃₂ᵀ(s), 0]]`.
    pub fn at_tilde(k: &QuinticConstants) -> DenseMatrix<ExactScalar> {
        off_block_5(a32(k, -1), transpose_32(&neg_32(&a32(k, 1))))
    }

    /// The 3×3 even block of the symmetrized number operator.
    pub fn n3(k: &QuinticConstants) -> DenseMatrix<ExactScalar> {
        let r2 = ExactScalar::sqrt2();
        let (s1, s2, c1, c2) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
        let off12 = c1.clone() * s2.clone() - int(1);
        let row0 = vec![int(2), -(r2.clone() * s1.clone()), -r2.clone()];
        let row1 = vec![-(r2.clone() * s1), int(3) - c2, off12.clone()];
        let row2 = vec![-r2, off12, int(2) * (s2 + int(2)) - c1];
        DenseMatrix::from_rows(vec![row0, row1, row2]).expect("3x3")
    }

    /// The 2×2 odd block of the symmetrized number operator.
    pub fn n2(k: &QuinticConstants) -> DenseMatrix<ExactScalar> {
        let (s2, c1, c2) = (ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
        let b = c1.clone() * s2.clone() + int(1);
        DenseMatrix::from_rows(vec![
            vec![int(2) * (int(2) - s2) - c1, b.clone()],
            vec![b, int(5) - c2],
        ])
        .expect("2x2")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    type E = ExactScalar;

    fn t5_literal() -> DenseMatrix<E> {
        let r = E::frac_1_sqrt2();
        let z = E::zero();
        DenseMatrix::from_rows(vec![
            vec![E::one(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), r.clone(), z.clone(), z.clone(), r.clone()],
            vec![z.clone(), z.clone(), r.clone(), r.clone(), z.clone()],
            vec![z.clone(), z.clone(), -r.clone(), r.clone(), z.clone()],
            vec![z.clone(), -r.clone(), z.clone(), z.clone(), r],
        ])
        .unwrap()
    }

    #[test]
    fn t5_matches_literal() {
        assert_eq!(build_t::<E>(5).unwrap().matrix, t5_literal());
    }

    #[test]
    fn t2_is_identity() {
        assert_eq!(build_t::<E>(2).unwrap().matrix, DenseMatrix::identity(2));
    }

    #[test]
    fn t4_rows() {
        let t = build_t::<Complex64>(4).unwrap().matrix;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let want = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, r, 0.0, r],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, -r, 0.0, r],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert!((t[(i, j)].re - want[i][j]).abs() < 1e-15);
            }
        }
        // orthogonality oracle: rows have unit length and are pairwise orthogonal
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = (0..4).map(|k| want[i][k] * want[j][k]).sum();
                assert!((dot - if i == j { 1.0 } else { 0.0 }).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn rotations() {
        let (r14, r23) = rotation_factorization_5::<E>().unwrap();
        assert_eq!(&r14 * &r23, t5_literal());
        assert_eq!(&r14 * &r14.transpose(), DenseMatrix::identity(5));
        // R₂₃ e₂ is its second column: (e₂ − e₃)/√2
        let e2 = basis_vector::<E>(BasisKind::E, 2, 5).unwrap().components;
        let r = E::frac_1_sqrt2();
        assert_eq!(
            r23.mul_vec(&e2),
            vec![E::zero(), E::zero(), r.clone(), -r, E::zero()]
        );
    }

    #[test]
    fn conjugation_examples() {
        let k = QuinticConstants::exact();
        let t = build_t::<E>(5).unwrap();
        let x = build_operator::<E>(OperatorKind::X, 5).unwrap();
        assert_eq!(conjugate_by_t(&x, &t).unwrap(), closed_form::x_tilde(&k));
        let d = build_operator::<E>(OperatorKind::D, 5).unwrap();
        assert_eq!(conjugate_by_t(&d, &t).unwrap(), closed_form::d_tilde());
        let a = build_operator::<E>(OperatorKind::A, 5).unwrap();
        assert_eq!(conjugate_by_t(&a, &t).unwrap(), closed_form::a_tilde(&k));
        let at = build_operator::<E>(OperatorKind::At, 5).unwrap();
        assert_eq!(conjugate_by_t(&at, &t).unwrap(), closed_form::at_tilde(&k));
        let id = DenseMatrix::<E>::identity(5);
        assert_eq!(conjugate_by_t(&id, &t).unwrap(), id);
    }

    #[test]
    fn number_operator_blocks() {
        let k = QuinticConstants::exact();
        let t = build_t::<E>(5).unwrap();
        let n5 = build_operator::<E>(OperatorKind::Number, 5).unwrap();
        let split = block_split(&conjugate_by_t(&n5, &t).unwrap());
        assert_eq!(split.sym_block, closed_form::n3(&k));
        assert_eq!(split.anti_block, closed_form::n2(&k));
        assert!(split.is_block_diagonal());
        assert_eq!(split.offblock_max, 0.0);
    }

    #[test]
    fn identity_split() {
        let split = block_split(&DenseMatrix::<E>::identity(5));
        assert_eq!(split.sym_block, DenseMatrix::identity(3));
        assert_eq!(split.anti_block, DenseMatrix::identity(2));
        assert!(split.is_block_diagonal());
    }

    #[test]
    fn zero_census() {
        let t = build_t::<E>(5).unwrap();
        let n5 = build_operator::<E>(OperatorKind::Number, 5).unwrap();
        assert_eq!(
            zero_count(&n5),
            ZeroCensus {
                zeros: 0,
                nonzeros: 25
            }
        );
        let nt = conjugate_by_t(&n5, &t).unwrap();
        assert_eq!(
            zero_count(&nt),
            ZeroCensus {
                zeros: 12,
                nonzeros: 13
            }
        );
        assert_eq!(zero_count(&DenseMatrix::<E>::zeros(5)).zeros, 25);
    }

    #[test]
    fn symmetrized_basis() {
        let r = E::frac_1_sqrt2();
        let e1 = symmetrized_basis_vector::<E>(BasisKind::E, 1, 5).unwrap();
        assert_eq!(e1, vec![E::zero(), r.clone(), E::zero(), E::zero(), -r]);

        let k = QuinticConstants::exact();
        // i/√10 = i·√2·√5/10
        let i_over_sqrt10 = E::i() * E::inv_sqrt(10).unwrap();
        let eps1 = symmetrized_basis_vector::<E>(BasisKind::Eps, 1, 5).unwrap();
        let want: Vec<E> = [&k.s[0], &k.s[1], &k.s[2], &k.s[3], &k.s[4]]
            .into_iter()
            .map(|s| i_over_sqrt10.clone() * ex(s))
            .collect();
        assert_eq!(eps1, want);

        let eps0 = symmetrized_basis_vector::<E>(BasisKind::Eps, 0, 5).unwrap();
        assert!(eps0.iter().all(|c| *c == E::inv_sqrt(5).unwrap()));
    }

    #[test]
    fn reflection_signature() {
        for n in 2..=12 {
            assert!(
                is_reflection_signature(&symmetrized_reflection::<E>(n).unwrap()),
                "n = {n}"
            );
        }
    }

    #[test]
    fn updown_shapes() {
        let t = build_t::<E>(5).unwrap();
        let (a, b, c) = (
            E::from_int(3),
            E::from(RealQuintic::s1()),
            E::from_ratio(-2, 7),
        );
        let sym = vec![a.clone(), b.clone(), c.clone(), c.clone(), b.clone()];
        let s = symmetrize_vector(&t, &sym).unwrap();
        let r2 = E::sqrt2();
        assert_eq!(
            s.eta,
            vec![a, r2.clone() * b.clone(), r2.clone() * c.clone()]
        );
        assert!(s.xi.iter().all(|x| x.is_zero()));

        let anti = vec![E::zero(), b.clone(), c.clone(), -c.clone(), -b.clone()];
        let s = symmetrize_vector(&t, &anti).unwrap();
        assert!(s.eta.iter().all(|x| x.is_zero()));
        assert_eq!(s.xi, vec![-(r2.clone() * c), -(r2 * b)]);
        assert_eq!(s.concat().len(), 5);
    }
}
