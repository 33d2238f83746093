//! The operator family of the N-point DFT: the transform Φ, the cyclic
//! shift C, the backward identity J, the reflection P_d, the position and
//! momentum operators X and Y, the difference operator D, the intertwining
//! operators A and Aᵀ, and the number operator 𝒩 = AᵀA.
//!
//! All index arithmetic is mod N. C is the cyclic shift with
//! `C_{k,k+1} = 1` (so `C_{N-1,0} = 1`); D = C − Cᵀ, Y = i(Cᵀ − C) = −iD,
//! A = X + D and Aᵀ = X − D.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{max_abs_vec, sub_vec, DenseMatrix};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Dft,
    C,
    J,
    Pd,
    X,
    Y,
    D,
    A,
    At,
    Number,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 10] = [
        Self::Dft,
        Self::C,
        Self::J,
        Self::Pd,
        Self::X,
        Self::Y,
        Self::D,
        Self::A,
        Self::At,
        Self::Number,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dft => "dft",
            Self::C => "c",
            Self::J => "j",
            Self::Pd => "pd",
            Self::X => "x",
            Self::Y => "y",
            Self::D => "d",
            Self::A => "a",
            Self::At => "at",
            Self::Number => "number",
        }
    }

    /// Entries lie in Z[i] for every N, so the exact backend always applies.
    pub fn is_integer_valued(self) -> bool {
        matches!(self, Self::C | Self::J | Self::Pd | Self::D | Self::Y)
    }

    /// Whether the exact backend can build this operator at dimension `n`.
    pub fn exact_supported(self, n: usize) -> bool {
        self.is_integer_valued() || n == 5
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown operator `{s}`")))
    }
}

fn unsupported(kind: OperatorKind, n: usize) -> Error {
    Error::UnsupportedBackend {
        kind: kind.name().to_string(),
        n,
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok(())
}

fn indicator<S: Scalar>(b: bool) -> S {
    if b {
        S::one()
    } else {
        S::zero()
    }
}

pub fn build_operator<S: Scalar>(kind: OperatorKind, n: usize) -> Result<DenseMatrix<S>> {
    check_dim(n)?;
    if S::EXACT && !kind.exact_supported(n) {
        return Err(unsupported(kind, n));
    }
    let shift = || DenseMatrix::<S>::from_fn(n, |k, l| indicator(l == (k + 1) % n));
    let diff = || {
        let c = shift();
        &c - &c.transpose()
    };
    let position = || -> Result<DenseMatrix<S>> {
        let diag = (0..n as i64)
            .map(|k| S::two_sine(k, n).ok_or_else(|| unsupported(kind, n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DenseMatrix::diagonal(diag))
    };
    Ok(match kind {
        OperatorKind::Dft => {
            let norm = S::inv_sqrt(n).ok_or_else(|| unsupported(kind, n))?;
            let roots = (0..n as i64)
                .map(|k| S::unit_root(k, n).ok_or_else(|| unsupported(kind, n)))
                .collect::<Result<Vec<_>>>()?;
            DenseMatrix::from_fn(n, |k, l| roots[(k * l) % n].clone() * norm.clone())
        }
        OperatorKind::C => shift(),
        OperatorKind::J => DenseMatrix::from_fn(n, |k, l| indicator(k + l == n - 1)),
        OperatorKind::Pd => {
            let j = build_operator::<S>(OperatorKind::J, n)?;
            &shift().transpose() * &j
        }
        OperatorKind::X => position()?,
        OperatorKind::D => diff(),
        OperatorKind::Y => diff().scale(&-S::imag_unit()),
        OperatorKind::A => &position()? + &diff(),
        OperatorKind::At => &position()? - &diff(),
        OperatorKind::Number => {
            let x = position()?;
            let d = diff();
            &(&x - &d) * &(&x + &d)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Coordinate vectors e_k, the eigenbasis of X.
    E,
    /// ε_k = Φ e_k, the eigenbasis of Y.
    Eps,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector<S> {
    pub kind: BasisKind,
    pub index: usize,
    pub components: Vec<S>,
}

pub fn basis_vector<S: Scalar>(kind: BasisKind, k: usize, n: usize) -> Result<BasisVector<S>> {
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let components = match kind {
        BasisKind::E => (0..n).map(|j| indicator(j == k)).collect(),
        BasisKind::Eps => {
            let norm = S::inv_sqrt(n).ok_or_else(|| unsupported(OperatorKind::Dft, n))?;
            (0..n)
                .map(|j| {
                    S::unit_root((j * k) as i64, n)
                        .map(|q| q * norm.clone())
                        .ok_or_else(|| unsupported(OperatorKind::Dft, n))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(BasisVector {
        kind,
        index: k,
        components,
    })
}

/// `[A, B] = AB − BA`.
pub fn commutator<S: Scalar>(a: &DenseMatrix<S>, b: &DenseMatrix<S>) -> Result<DenseMatrix<S>> {
    let ab = a.try_mul(b)?;
    let ba = b.try_mul(a)?;
    Ok(&ab - &ba)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationResidual {
    pub name: String,
    pub max_residual: f64,
    pub exact_zero: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub n: usize,
    pub exact: bool,
    pub tol: f64,
    pub entries: Vec<RelationResidual>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn get(&self, name: &str) -> Option<&RelationResidual> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Names of the relations checked by [`verify_relations`], in report order.
pub const RELATION_NAMES: [&str; 12] = [
    "phi_unitary",
    "phi_symmetric",
    "phi_pd_commute",
    "number_phi_commute",
    "a_intertwines",
    "at_intertwines",
    "y_equals_phi_x_phi_adjoint",
    "x_two_diagonal_on_eps",
    "y_two_diagonal_on_e",
    "pd_reflects_e",
    "pd_reflects_eps",
    "x_spectrum_askey_wilson",
];

/// Checks the algebraic relations of the operator family at dimension `n`.
/// Exact backends pass only on exact zeros and require `tol == 0`.
pub fn verify_relations<S: Scalar>(n: usize, tol: f64) -> Result<RelationReport> {
    if S::EXACT && tol != 0.0 {
        return Err(Error::NonZeroTolerance(tol));
    }
    check_dim(n)?;
    let phi = build_operator::<S>(OperatorKind::Dft, n)?;
    let pd = build_operator::<S>(OperatorKind::Pd, n)?;
    let x = build_operator::<S>(OperatorKind::X, n)?;
    let y = build_operator::<S>(OperatorKind::Y, n)?;
    let a = build_operator::<S>(OperatorKind::A, n)?;
    let at = build_operator::<S>(OperatorKind::At, n)?;
    let number = build_operator::<S>(OperatorKind::Number, n)?;
    let i = S::imag_unit();
    let phi_adj = phi.adjoint();

    let mut entries = Vec::new();
    let mut push_matrix = |name: &str, m: DenseMatrix<S>| {
        let exact_zero = m.is_zero();
        let max_residual = m.max_abs();
        entries.push(RelationResidual {
            name: name.to_string(),
            max_residual,
            exact_zero,
            passed: exact_zero || (!S::EXACT && max_residual < tol),
        });
    };

    push_matrix(
        "phi_unitary",
        &(&phi * &phi_adj) - &DenseMatrix::identity(n),
    );
    push_matrix("phi_symmetric", &phi - &phi.transpose());
    push_matrix("phi_pd_commute", commutator(&phi, &pd)?);
    push_matrix("number_phi_commute", commutator(&number, &phi)?);
    push_matrix("a_intertwines", &(&a * &phi) - &(&phi * &a).scale(&i));
    push_matrix("at_intertwines", &(&at * &phi) + &(&phi * &at).scale(&i));
    push_matrix(
        "y_equals_phi_x_phi_adjoint",
        &y - &(&(&phi * &x) * &phi_adj),
    );

    let es = (0..n)
        .map(|k| basis_vector::<S>(BasisKind::E, k, n).map(|b| b.components))
        .collect::<Result<Vec<_>>>()?;
    let eps = (0..n)
        .map(|k| basis_vector::<S>(BasisKind::Eps, k, n).map(|b| b.components))
        .collect::<Result<Vec<_>>>()?;
    let prev = |k: usize| (k + n - 1) % n;
    let next = |k: usize| (k + 1) % n;
    let refl = |k: usize| (n - k) % n;
    let two_diag = |k: usize, basis: &[Vec<S>], forward: bool| -> Vec<S> {
        let (p, q) = if forward {
            (next(k), prev(k))
        } else {
            (prev(k), next(k))
        };
        sub_vec(&basis[p], &basis[q])
            .into_iter()
            .map(|v| v * i.clone())
            .collect()
    };

    let mut push_vectors = |name: &str, diffs: Vec<Vec<S>>| {
        let exact_zero = diffs.iter().all(|d| d.iter().all(S::is_zero));
        let max_residual = diffs.iter().map(|d| max_abs_vec(d)).fold(0.0, f64::max);
        entries.push(RelationResidual {
            name: name.to_string(),
            max_residual,
            exact_zero,
            passed: exact_zero || (!S::EXACT && max_residual < tol),
        });
    };

    push_vectors(
        "x_two_diagonal_on_eps",
        (0..n)
            .map(|k| sub_vec(&x.mul_vec(&eps[k]), &two_diag(k, &eps, false)))
            .collect(),
    );
    push_vectors(
        "y_two_diagonal_on_e",
        (0..n)
            .map(|k| sub_vec(&y.mul_vec(&es[k]), &two_diag(k, &es, true)))
            .collect(),
    );
    push_vectors(
        "pd_reflects_e",
        (0..n)
            .map(|k| sub_vec(&pd.mul_vec(&es[k]), &es[refl(k)]))
            .collect(),
    );
    push_vectors(
        "pd_reflects_eps",
        (0..n)
            .map(|k| sub_vec(&pd.mul_vec(&eps[k]), &eps[refl(k)]))
            .collect(),
    );
    // spectrum of X: s_k = C₁q^k + C₂q^{-k} + C₀ with C₁ = −i, C₂ = i, C₀ = 0
    let aw = (0..n as i64)
        .map(|k| -> Result<Vec<S>> {
            let s = S::two_sine(k, n).ok_or_else(|| unsupported(OperatorKind::X, n))?;
            let qp = S::unit_root(k, n).ok_or_else(|| unsupported(OperatorKind::X, n))?;
            let qm = S::unit_root(-k, n).ok_or_else(|| unsupported(OperatorKind::X, n))?;
            let form = -i.clone() * qp + i.clone() * qm;
            Ok(vec![s - form])
        })
        .collect::<Result<Vec<_>>>()?;
    push_vectors("x_spectrum_askey_wilson", aw);

    Ok(RelationReport {
        n,
        exact: S::EXACT,
        tol,
        entries,
    })
}

/// Index pairs `(j, k)`, `j < k`, on which the diagonal of X repeats.
/// Exact comparison for exact scalars, `1e-12` otherwise.
pub fn x_spectrum_repeats<S: Scalar>(n: usize) -> Result<Vec<(usize, usize)>> {
    let x = build_operator::<S>(OperatorKind::X, n)?;
    let mut pairs = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            if (x[(j, j)].clone() - x[(k, k)].clone()).negligible(1e-12) {
                pairs.push((j, k));
            }
        }
    }
    Ok(pairs)
}
