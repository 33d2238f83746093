//! Exact eigenvalues and eigenvectors of the five-point number operator.
//!
//! In symmetrized coordinates the operator splits into a 3×3 even block
//! `𝒩₃` and a 2×2 odd block `𝒩₂`. Both are solved in closed form over
//! `K(i)(√2)`; the five eigenvectors are then pulled back with `f = Tᵀ f̃`
//! and tagged with their transform phase `Φf = iᵏ f`.
//!
//! Every closed form is written against a [`QuinticConstants`] table while
//! the blocks themselves always come from the true operator, so a corrupted
//! table shows up as a failed eigen-relation.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{ExactScalar, QuinticConstants, RealQuintic};
use crate::matrix::{inner, scale_vec, DenseMatrix};
use crate::operators::{build_operator, OperatorKind};
use crate::scalar::Scalar;
use crate::symmetrize::{block_split, build_t, conjugate_by_t, sym_dim};

type E = ExactScalar;
type ExactMatrix = DenseMatrix<E>;

fn ex(x: &RealQuintic) -> E {
    x.clone().into()
}

fn int(v: i64) -> E {
    E::from_int(v)
}

/// `M = u·I + M′` with `M′ = [[v, b], [b, −v]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoByTwoSplit<S> {
    pub u: S,
    pub v: S,
    pub b: S,
    pub mprime: DenseMatrix<S>,
}

pub fn split_2x2<S: Scalar>(m: &DenseMatrix<S>) -> Result<TwoByTwoSplit<S>> {
    if m.dim() != 2 {
        return Err(Error::UnsupportedSize(m.dim()));
    }
    let (a, b, b2, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    if !(b.clone() - b2.clone()).negligible(1e-12) {
        return Err(Error::NotSymmetric);
    }
    let half = S::from_ratio(1, 2);
    let u = (a.clone() + d.clone()) * half.clone();
    let v = (a.clone() - d.clone()) * half;
    let mprime = DenseMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 0) => v.clone(),
        (1, 1) => -v.clone(),
        _ => b.clone(),
    });
    Ok(TwoByTwoSplit {
        u,
        v,
        b: b.clone(),
        mprime,
    })
}

/// `(u + r, u − r)` with `r = √(v² + b²)` taken inside the field.
pub fn eig_2x2_closed(m: &ExactMatrix) -> Result<(E, E)> {
    let sp = split_2x2(m)?;
    let disc = sp.v.clone() * sp.v.clone() + sp.b.clone() * sp.b.clone();
    let r = disc.sqrt_real()?;
    Ok((sp.u.clone() + r.clone(), sp.u - r))
}

/// Float fallback for [`eig_2x2_closed`], larger root first.
pub fn eig_2x2_float<S: Scalar>(m: &DenseMatrix<S>) -> Result<(f64, f64)> {
    let sp = split_2x2(m)?;
    let (u, v, b) = (sp.u.to_c64().re, sp.v.to_c64().re, sp.b.to_c64().re);
    let r = v.hypot(b);
    Ok((u + r, u - r))
}

/// `p(λ) = λᵏ + c₁λᵏ⁻¹ + … + c_k`; `coeffs[0]` is `c₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPolyCoeffs<S> {
    pub coeffs: Vec<S>,
}

pub fn char_poly_coeffs<S: Scalar>(m: &DenseMatrix<S>) -> Result<CharPolyCoeffs<S>> {
    let minor = |i: usize, j: usize| {
        m[(i, i)].clone() * m[(j, j)].clone() - m[(i, j)].clone() * m[(j, i)].clone()
    };
    let coeffs = match m.dim() {
        2 => vec![-m.trace(), m.determinant()],
        3 => vec![
            -m.trace(),
            minor(0, 1) + minor(0, 2) + minor(1, 2),
            -m.determinant(),
        ],
        k => return Err(Error::UnsupportedSize(k)),
    };
    Ok(CharPolyCoeffs { coeffs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EigenLabel {
    Mu1,
    Mu2,
    Lambda0,
    Lambda1,
    Lambda2,
}

impl EigenLabel {
    pub fn symbol(self) -> &'static str {
        match self {
            EigenLabel::Mu1 => "μ₁",
            EigenLabel::Mu2 => "μ₂",
            EigenLabel::Lambda0 => "λ₀",
            EigenLabel::Lambda1 => "λ₁",
            EigenLabel::Lambda2 => "λ₂",
        }
    }
}

impl fmt::Display for EigenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EigenLabel::Mu1 => "mu1",
            EigenLabel::Mu2 => "mu2",
            EigenLabel::Lambda0 => "lambda0",
            EigenLabel::Lambda1 => "lambda1",
            EigenLabel::Lambda2 => "lambda2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// The even block `𝒩₃`.
    Sym,
    /// The odd block `𝒩₂`.
    Anti,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::Sym => "sym",
            Block::Anti => "anti",
        })
    }
}

/// Eigenvalue with an unnormalized eigenvector. Block-level pairs carry a
/// 3- or 2-vector and no phase; assembled pairs carry a 5-vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledEigenpair {
    pub label: EigenLabel,
    pub value: E,
    pub vector: Vec<E>,
    pub block: Block,
    /// `k` with `Φf = iᵏ f`, if one exists.
    pub dft_phase: Option<u8>,
}

impl LabeledEigenpair {
    fn new(label: EigenLabel, block: Block, value: E, vector: Vec<E>) -> Self {
        Self {
            label,
            value,
            vector,
            block,
            dft_phase: None,
        }
    }
}

/// The two diagonal blocks of `T 𝒩₅ Tᵀ`, computed from the operator.
pub fn number_blocks() -> (ExactMatrix, ExactMatrix) {
    let t = build_t::<E>(5).expect("T at n = 5");
    let n5 = build_operator::<E>(OperatorKind::Number, 5).expect("exact number operator at n = 5");
    let split = block_split(&conjugate_by_t(&n5, &t).expect("5x5"));
    (split.sym_block, split.anti_block)
}

/// `[[c₂, 1], [1, −c₂]]`, the traceless part of `𝒩₂` up to the factor
/// `1 + c₁s₂`; its eigenvalues are `±s₁`.
pub fn reduced_n2(k: &QuinticConstants) -> ExactMatrix {
    let c2 = ex(&k.c[2]);
    DenseMatrix::from_rows(vec![vec![c2.clone(), int(1)], vec![int(1), -c2]]).expect("2x2")
}

/// `(5 − s₂)I₂ + (1 + c₁s₂)·[[c₂, 1], [1, −c₂]]`.
pub fn n2_rewrite(k: &QuinticConstants) -> ExactMatrix {
    let base = DenseMatrix::<E>::identity(2).scale(&(int(5) - ex(&k.s[2])));
    let factor = int(1) + ex(&k.c[1]) * ex(&k.s[2]);
    &base + &reduced_n2(k).scale(&factor)
}

pub fn n2_closed_spectrum(k: &QuinticConstants) -> [LabeledEigenpair; 2] {
    let (s1, s2, c1, c2) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
    let mu1 = int(5) + s2.clone() * (s2.clone() + c1.clone());
    let mu2 = s1.clone() * (s1 + c2);
    let phi1 = vec![c1.clone(), int(1) + s2.clone()];
    let phi2 = vec![int(1) + s2, -c1];
    [
        LabeledEigenpair::new(EigenLabel::Mu1, Block::Anti, mu1, phi1),
        LabeledEigenpair::new(EigenLabel::Mu2, Block::Anti, mu2, phi2),
    ]
}

pub fn n3_closed_spectrum(k: &QuinticConstants) -> [LabeledEigenpair; 3] {
    let (s1, s2, c1, c2) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
    let r2 = E::sqrt2();
    let phi0 = vec![
        s1.clone() - int(2) * c2.clone(),
        r2.clone() * (int(1) + s2.clone()),
        r2.clone(),
    ];
    let lambda1 = int(5) + s2.clone() * (s2.clone() - c1.clone());
    let phi1 = vec![
        r2.clone() * c1.clone(),
        -(int(2) * s2.clone()) - int(1),
        int(2) * (s2 - c1.clone()) + int(3),
    ];
    let lambda2 = s1.clone() * (s1 - c2);
    let phi2 = vec![-(r2 * c1), int(1), int(1)];
    [
        LabeledEigenpair::new(EigenLabel::Lambda0, Block::Sym, E::zero(), phi0),
        LabeledEigenpair::new(EigenLabel::Lambda1, Block::Sym, lambda1, phi1),
        LabeledEigenpair::new(EigenLabel::Lambda2, Block::Sym, lambda2, phi2),
    ]
}

/// `5 + s₂ ± (c₁s₂ − 1)s₁`, the other written form of `λ₁` and `λ₂`.
pub fn lambda_pm(k: &QuinticConstants) -> (E, E) {
    let (s1, s2, c1) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]));
    let centre = int(5) + s2.clone();
    let half_gap = (c1 * s2 - int(1)) * s1;
    (centre.clone() + half_gap.clone(), centre - half_gap)
}

/// `10 + (4s₂ + 3)s₁²`, the closed form of the second coefficient of the
/// characteristic polynomial of `𝒩₃`.
pub fn n3_second_coeff(k: &QuinticConstants) -> E {
    let (s1, s2) = (ex(&k.s[1]), ex(&k.s[2]));
    int(10) + (int(4) * s2 + int(3)) * s1.clone() * s1
}

/// Coefficients `(a, b)` of the relation `a x₁ + b x₂ = 0` obtained while
/// solving for the `λ₁` eigenvector, and their common factor `ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommonFactor {
    pub a: E,
    pub b: E,
    pub epsilon: E,
    pub a_reduced: E,
    pub b_reduced: E,
}

pub fn common_factor(k: &QuinticConstants) -> CommonFactor {
    let (s1, s2, c1, c2) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
    let sqrt5 = ex(&k.sqrt5);
    let a = sqrt5 * s2.clone() + int(3) * c1.clone() - int(5);
    let b = (int(4) - c1.clone()) * s1.clone() + int(3) * c2.clone() - int(2);
    let epsilon = -(c2.clone() * (c2 * s1 + int(3)));
    let a_reduced = int(2) * s2.clone() - int(2) * c1 + int(3);
    let b_reduced = int(2) * s2 + int(1);
    CommonFactor {
        a,
        b,
        epsilon,
        a_reduced,
        b_reduced,
    }
}

/// Second row minus `s₁` times the third row of `𝒩₃ − λ₁I`.
pub fn lambda1_elimination_row(k: &QuinticConstants) -> Vec<E> {
    let (n3, _) = number_blocks();
    let lambda1 = &n3_closed_spectrum(k)[1].value;
    let shifted = &n3 - &DenseMatrix::identity(3).scale(lambda1);
    let s1 = ex(&k.s[1]);
    (0..3)
        .map(|j| shifted[(1, j)].clone() - s1.clone() * shifted[(2, j)].clone())
        .collect()
}

/// Unique `k` with `Φ₅ f = iᵏ f`, decided exactly.
pub fn dft_phase(f: &[E]) -> Result<u8> {
    if f.len() != 5 {
        return Err(Error::DimensionMismatch {
            left: 5,
            right: f.len(),
        });
    }
    if f.iter().all(|x| x.is_zero()) {
        return Err(Error::NoPhaseFound);
    }
    let phi = build_operator::<E>(OperatorKind::Dft, 5)?;
    let image = phi.mul_vec(f);
    let mut unit = E::one();
    for k in 0..4u8 {
        if image == scale_vec(f, &unit) {
            return Ok(k);
        }
        unit = unit * E::i();
    }
    Err(Error::NoPhaseFound)
}

/// `iᵏ` as an exact scalar.
pub fn phase_value(k: u8) -> E {
    (0..k % 4).fold(E::one(), |acc, _| acc * E::i())
}

/// The five transform eigenvectors `f₀ … f₄` in that order:
/// `f₀, f₂, f₄` from the even block (`λ₀, λ₂, λ₁`), `f₁, f₃` from the odd
/// block (`μ₁, μ₂`). Phases are filled in by exact comparison.
pub fn assemble_dft_eigenvectors(k: &QuinticConstants) -> Result<Vec<LabeledEigenpair>> {
    let [l0, l1, l2] = n3_closed_spectrum(k);
    let [m1, m2] = n2_closed_spectrum(k);
    let t = build_t::<E>(5)?;
    let tt = t.matrix.transpose();
    let m = sym_dim(5);
    [l0, m1, l2, m2, l1]
        .into_iter()
        .map(|pair| {
            let mut ft = vec![E::zero(); 5];
            let offset = match pair.block {
                Block::Sym => 0,
                Block::Anti => m,
            };
            for (i, x) in pair.vector.iter().enumerate() {
                ft[offset + i] = x.clone();
            }
            let vector = tt.mul_vec(&ft);
            let dft_phase = dft_phase(&vector).ok();
            Ok(LabeledEigenpair {
                vector,
                dft_phase,
                ..pair
            })
        })
        .collect()
}

/// `‖M v − λ v‖ = 0` exactly.
pub fn is_exact_eigenpair(m: &ExactMatrix, value: &E, vector: &[E]) -> bool {
    vector.iter().any(|x| !x.is_zero()) && m.mul_vec(vector) == scale_vec(vector, value)
}

/// All pairwise Euclidean inner products vanish exactly.
pub fn pairwise_orthogonal(vectors: &[Vec<E>]) -> bool {
    vectors.iter().enumerate().all(|(i, a)| {
        vectors[i + 1..]
            .iter()
            .all(|b| a.len() == b.len() && inner(a, b).is_zero())
    })
}

/// Sorted-ascending float values of the five closed-form eigenvalues with
/// their labels.
pub fn closed_form_values_ascending(k: &QuinticConstants) -> Vec<(EigenLabel, f64)> {
    let mut v: Vec<(EigenLabel, f64)> = n3_closed_spectrum(k)
        .into_iter()
        .chain(n2_closed_spectrum(k))
        .map(|p| (p.label, p.value.to_c64().re))
        .collect();
    v.sort_by(|a, b| a.1.total_cmp(&b.1));
    v
}
