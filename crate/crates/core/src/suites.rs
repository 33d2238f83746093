//! Named verification suites run by `dftn verify`.
//!
//! Exact checks compare structurally; float checks use the caller's
//! tolerance. Closed forms are evaluated against a [`QuinticConstants`]
//! table so that a corrupted table is caught.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::eigensolver::{cross_validate, eigh};
use crate::error::{Error, Result};
use crate::field::{field_identities, ExactScalar, QuinticConstants};
use crate::matrix::{inner, DenseMatrix};
use crate::operators::{build_operator, verify_relations, BasisKind, OperatorKind};
use crate::report::Check;
use crate::scalar::{Backend, Scalar};
use crate::spectrum5::{
    assemble_dft_eigenvectors, char_poly_coeffs, common_factor, eig_2x2_closed, is_exact_eigenpair,
    lambda1_elimination_row, lambda_pm, n2_closed_spectrum, n2_rewrite, n3_closed_spectrum,
    n3_second_coeff, number_blocks, pairwise_orthogonal, phase_value, reduced_n2, split_2x2, Block,
};
use crate::symmetrize::{
    block_split, build_t, closed_form, conjugate_by_t, is_reflection_signature,
    rotation_factorization_5, symmetrize_vector, symmetrized_basis_vector, symmetrized_reflection,
    zero_count,
};

type E = ExactScalar;
type C = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Symmetrization,
    Spectrum5,
    Identities,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Symmetrization => "symmetrization",
            Suite::Spectrum5 => "spectrum5",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Relations,
            Suite::Symmetrization,
            Suite::Spectrum5,
            Suite::Identities,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

pub fn run_suite(
    suite: Suite,
    n: usize,
    backend: Backend,
    tol: f64,
    constants: &QuinticConstants,
) -> Result<Vec<Check>> {
    let five_only = |what: Suite| {
        if n != 5 {
            return Err(Error::InvalidArgument(format!(
                "suite `{what}` requires n = 5"
            )));
        }
        Ok(())
    };
    match suite {
        Suite::Relations => relations_suite(n, backend, tol),
        Suite::Symmetrization => symmetrization_suite(n, backend, tol, constants),
        Suite::Spectrum5 => {
            five_only(suite)?;
            Ok(spectrum5_suite(constants))
        }
        Suite::Identities => {
            five_only(suite)?;
            Ok(identities_suite(constants))
        }
        Suite::All => {
            let mut checks = relations_suite(n, backend, tol)?;
            checks.extend(symmetrization_suite(n, backend, tol, constants)?);
            if n == 5 {
                checks.extend(spectrum5_suite(constants));
                checks.extend(identities_suite(constants));
            }
            Ok(checks)
        }
    }
}

fn require_exact(backend: Backend, n: usize) -> Result<()> {
    if backend == Backend::Exact && n != 5 {
        return Err(Error::UnsupportedBackend {
            kind: "number".into(),
            n,
        });
    }
    Ok(())
}

pub fn relations_suite(n: usize, backend: Backend, tol: f64) -> Result<Vec<Check>> {
    require_exact(backend, n)?;
    let report = match backend {
        Backend::Exact => verify_relations::<E>(n, 0.0)?,
        Backend::Float => verify_relations::<C>(n, tol)?,
    };
    let mut checks: Vec<Check> = report
        .entries
        .into_iter()
        .map(|e| {
            let detail = if report.exact {
                "exact zero".to_string()
            } else {
                format!("max residual < {tol:e}")
            };
            let mut c = Check::within(format!("relations/{}", e.name), e.max_residual, tol, detail);
            if report.exact {
                c = Check::exact(c.name, e.exact_zero, c.detail);
            }
            c
        })
        .collect();
    let want = 4 * n as i64 * (n >= 3) as i64;
    checks.push(match backend {
        Backend::Exact => {
            let tr = build_operator::<E>(OperatorKind::Number, n)?.trace();
            Check::exact(
                "relations/number_trace",
                tr == E::from_int(want),
                format!("trace = {tr}"),
            )
        }
        Backend::Float => {
            let tr = build_operator::<C>(OperatorKind::Number, n)?.trace();
            Check::within(
                "relations/number_trace",
                (tr - C::new(want as f64, 0.0)).norm(),
                tol * want.max(1) as f64,
                format!("trace = {want}"),
            )
        }
    });
    Ok(checks)
}

fn float_symmetrization(n: usize, tol: f64) -> Result<Vec<Check>> {
    let t = build_t::<C>(n)?;
    let ttt = &t.matrix * &t.matrix.transpose();
    let mut checks = vec![
        Check::within(
            "symmetrization/t_orthogonal",
            (&ttt - &DenseMatrix::identity(n)).max_abs(),
            tol,
            "T Tᵀ = I",
        ),
        Check::within(
            "symmetrization/t_det_one",
            (t.matrix.determinant() - C::new(1.0, 0.0)).norm(),
            tol,
            "det T = 1",
        ),
        Check::exact(
            "symmetrization/pd_signature",
            is_reflection_signature(&symmetrized_reflection::<C>(n)?),
            "T P_d Tᵀ = diag(+1, …, −1, …)",
        ),
    ];
    let num = build_operator::<C>(OperatorKind::Number, n)?;
    let nt = conjugate_by_t(&num, &t)?;
    let split = block_split(&nt);
    let scale = num.max_abs().max(1.0);
    checks.push(Check::within(
        "symmetrization/number_block_diagonal",
        split.offblock_max,
        tol * scale,
        "off-block entries of T 𝒩 Tᵀ",
    ));
    checks.push(Check::within(
        "symmetrization/trace_preserved",
        (nt.trace() - num.trace()).norm(),
        tol * scale * n as f64,
        "tr T𝒩Tᵀ = tr 𝒩",
    ));
    checks.push(Check::within(
        "symmetrization/frobenius_preserved",
        (nt.frobenius_norm() - num.frobenius_norm()).abs(),
        tol * scale * n as f64,
        "‖T𝒩Tᵀ‖_F = ‖𝒩‖_F",
    ));
    // η/ξ split of pure-parity vectors
    let mut leak: f64 = 0.0;
    for k in 1..n {
        let mut sym = vec![C::new(0.0, 0.0); n];
        let mut anti = sym.clone();
        sym[k] += 1.0;
        sym[n - k] += 1.0;
        anti[k] += 1.0;
        anti[n - k] -= 1.0;
        let s = symmetrize_vector(&t, &sym)?;
        let a = symmetrize_vector(&t, &anti)?;
        leak =
            s.xi.iter()
                .chain(&a.eta)
                .map(|x| x.norm())
                .fold(leak, f64::max);
    }
    checks.push(Check::within(
        "symmetrization/parity_split",
        leak,
        tol,
        "even vectors have ξ = 0, odd vectors η = 0",
    ));
    match cross_validate(n) {
        Ok(r) => {
            checks.push(Check::within(
                "symmetrization/spectrum_invariant",
                r.spectrum_max_diff,
                1e-10 * r.spectrum.last().copied().unwrap_or(0.0).max(1.0),
                "Jacobi spectra of 𝒩 and T𝒩Tᵀ",
            ));
            checks.push(Check::exact(
                "symmetrization/block_supports",
                r.supports_ok(),
                format!(
                    "even/odd supports {:?}, leak {:e}",
                    r.block_supports, r.support_leak
                ),
            ));
        }
        Err(e) => checks.push(Check::error("symmetrization/cross_validate", e)),
    }
    Ok(checks)
}

fn exact_symmetrization(k: &QuinticConstants) -> Result<Vec<Check>> {
    let t = build_t::<E>(5)?;
    let op = |kind| build_operator::<E>(kind, 5);
    let conj = |kind| -> Result<DenseMatrix<E>> { conjugate_by_t(&op(kind)?, &t) };
    let (r14, r23) = rotation_factorization_5::<E>()?;
    let nt = conj(OperatorKind::Number)?;
    let split = block_split(&nt);
    let at = conj(OperatorKind::At)?;
    let a = conj(OperatorKind::A)?;

    let mut checks = vec![
        Check::exact(
            "symmetrization/t_orthogonal",
            &t.matrix * &t.matrix.transpose() == DenseMatrix::identity(5),
            "T Tᵀ = I",
        ),
        Check::exact(
            "symmetrization/t_det_one",
            t.matrix.determinant() == E::one(),
            "det T = 1",
        ),
        Check::exact(
            "symmetrization/rotation_factorization",
            &r14 * &r23 == t.matrix,
            "T = R₁₄(π/4) R₂₃(π/4)",
        ),
        Check::exact(
            "symmetrization/pd_signature",
            is_reflection_signature(&symmetrized_reflection::<E>(5)?),
            "T P_d Tᵀ = diag(1, 1, 1, −1, −1)",
        ),
        Check::exact(
            "symmetrization/x_tilde",
            conj(OperatorKind::X)? == closed_form::x_tilde(k),
            "X̃ closed form",
        ),
        Check::exact(
            "symmetrization/d_tilde",
            conj(OperatorKind::D)? == closed_form::d_tilde(),
            "D̃ closed form",
        ),
        Check::exact(
            "symmetrization/a_tilde",
            a == closed_form::a_tilde(k),
            "Ã closed form",
        ),
        Check::exact(
            "symmetrization/at_tilde",
            at == closed_form::at_tilde(k),
            "Ãᵀ closed form",
        ),
        Check::exact(
            "symmetrization/number_block_diagonal",
            split.is_block_diagonal(),
            format!("{} nonzero off-block entries", split.offblock_nonzeros),
        ),
        Check::exact(
            "symmetrization/n3_block",
            split.sym_block == closed_form::n3(k),
            "even block closed form",
        ),
        Check::exact(
            "symmetrization/n2_block",
            split.anti_block == closed_form::n2(k),
            "odd block closed form",
        ),
        Check::exact(
            "symmetrization/n2_rewrite",
            split.anti_block == n2_rewrite(k),
            "𝒩₂ = (5 − s₂)I + (1 + c₁s₂)[[c₂, 1], [1, −c₂]]",
        ),
        Check::exact(
            "symmetrization/number_two_ways",
            nt == &at * &a,
            "T𝒩Tᵀ = Ãᵀ Ã",
        ),
    ];
    let zt = zero_count(&nt);
    let z = zero_count(&op(OperatorKind::Number)?);
    checks.push(Check::exact(
        "symmetrization/zero_census",
        zt.zeros == 12 && z.nonzeros == 25,
        format!("{} zeros after, {} nonzeros before", zt.zeros, z.nonzeros),
    ));

    let r = E::frac_1_sqrt2();
    let e1 = symmetrized_basis_vector::<E>(BasisKind::E, 1, 5)?;
    checks.push(Check::exact(
        "symmetrization/e_tilde_1",
        e1 == vec![E::zero(), r.clone(), E::zero(), E::zero(), -r],
        "ẽ₁ = (e₁ − e₄)/√2",
    ));
    let i_over_sqrt10 = E::i() * E::inv_sqrt(10).expect("1/√10");
    let eps1 = symmetrized_basis_vector::<E>(BasisKind::Eps, 1, 5)?;
    let want: Vec<E> =
        k.s.iter()
            .map(|s| i_over_sqrt10.clone() * s.clone().into())
            .collect();
    checks.push(Check::exact(
        "symmetrization/eps_tilde_1",
        eps1 == want,
        "ε̃₁ = (i/√10)(0, s₁, s₂, −s₂, −s₁)",
    ));
    let eps0 = symmetrized_basis_vector::<E>(BasisKind::Eps, 0, 5)?;
    checks.push(Check::exact(
        "symmetrization/eps_tilde_0",
        eps0.iter().all(|x| Some(x.clone()) == E::inv_sqrt(5)),
        "ε̃₀ = 5^{-1/2}(1, 1, 1, 1, 1)",
    ));
    let real = |j| -> Result<bool> {
        Ok(symmetrized_basis_vector::<E>(BasisKind::Eps, j, 5)?
            .iter()
            .all(E::is_real))
    };
    checks.push(Check::exact(
        "symmetrization/eps_tilde_3_4_real",
        real(3)? && real(4)?,
        "ε̃₃ and ε̃₄ have real components",
    ));

    let (a_, b_, c_) = (
        E::from_int(3),
        E::from(k.s[1].clone()),
        E::from_ratio(-2, 7),
    );
    let s = symmetrize_vector(
        &t,
        &[a_.clone(), b_.clone(), c_.clone(), c_.clone(), b_.clone()],
    )?;
    let r2 = E::sqrt2();
    let up = s.eta == vec![a_, r2.clone() * b_.clone(), r2.clone() * c_.clone()]
        && s.xi.iter().all(|x| x.is_zero());
    let s = symmetrize_vector(
        &t,
        &[E::zero(), b_.clone(), c_.clone(), -c_.clone(), -b_.clone()],
    )?;
    let down = s.eta.iter().all(|x| x.is_zero()) && s.xi == vec![-(r2.clone() * c_), -(r2 * b_)];
    checks.push(Check::exact(
        "symmetrization/updown",
        up && down,
        "T(a, b, c, c, b) = (a, √2b, √2c, 0, 0); T(0, b, c, −c, −b) = −√2(0, 0, 0, c, b)",
    ));
    Ok(checks)
}

pub fn symmetrization_suite(
    n: usize,
    backend: Backend,
    tol: f64,
    constants: &QuinticConstants,
) -> Result<Vec<Check>> {
    require_exact(backend, n)?;
    match backend {
        Backend::Exact => {
            let mut checks = exact_symmetrization(constants)?;
            // the float oracle still applies
            if let Ok(r) = cross_validate(n) {
                checks.push(Check::exact(
                    "symmetrization/block_supports",
                    r.supports_ok(),
                    format!("even/odd supports {:?}", r.block_supports),
                ));
            }
            Ok(checks)
        }
        Backend::Float => float_symmetrization(n, tol),
    }
}

/// Exact checks of the closed-form five-point spectrum, plus agreement with
/// the Jacobi oracle at `1e-10`.
pub fn spectrum5_suite(k: &QuinticConstants) -> Vec<Check> {
    let (n3, n2) = number_blocks();
    let ex = |x: &crate::field::RealQuintic| E::from(x.clone());
    let (s1, s2, c1, c2) = (ex(&k.s[1]), ex(&k.s[2]), ex(&k.c[1]), ex(&k.c[2]));
    let mut checks = Vec::new();

    match split_2x2(&n2) {
        Ok(sp) => {
            checks.push(Check::exact(
                "spectrum5/split_u_v",
                sp.u == E::from_int(5) - s2.clone() && sp.v == c2.clone() - s2.clone(),
                "u = 5 − s₂, v = c₂ − s₂",
            ));
            let b = c1.clone() * s2.clone() + E::one();
            let vb = sp.v.clone() * sp.v.clone() + sp.b.clone() * sp.b.clone();
            checks.push(Check::exact(
                "spectrum5/v_b_chain",
                sp.b == b
                    && sp.v == c2.clone() * b.clone()
                    && vb == s1.clone() * s1.clone() * b.clone() * b,
                "v = c₂b, v² + b² = s₁²b²",
            ));
        }
        Err(e) => checks.push(Check::error("spectrum5/split_u_v", e)),
    }

    let n2_pairs = n2_closed_spectrum(k);
    let n3_pairs = n3_closed_spectrum(k);
    checks.push(match eig_2x2_closed(&n2) {
        Ok((hi, lo)) => Check::exact(
            "spectrum5/mu_closed_form",
            hi == n2_pairs[0].value && lo == n2_pairs[1].value,
            "u ± √(v² + b²) = 5 + s₂(s₂ + c₁), s₁(s₁ + c₂)",
        ),
        Err(e) => Check::error("spectrum5/mu_closed_form", e),
    });
    let red = reduced_n2(k);
    checks.push(Check::exact(
        "spectrum5/reduced_matrix",
        is_exact_eigenpair(&red, &s1, &n2_pairs[0].vector)
            && is_exact_eigenpair(&red, &-s1.clone(), &n2_pairs[1].vector),
        "[[c₂, 1], [1, −c₂]] has eigenvalues ±s₁",
    ));
    for p in &n2_pairs {
        checks.push(Check::exact(
            format!("spectrum5/n2_eigenpair_{}", p.label),
            is_exact_eigenpair(&n2, &p.value, &p.vector),
            format!("𝒩₂φ = {}φ", p.label.symbol()),
        ));
    }
    for p in &n3_pairs {
        checks.push(Check::exact(
            format!("spectrum5/n3_eigenpair_{}", p.label),
            is_exact_eigenpair(&n3, &p.value, &p.vector),
            format!("𝒩₃φ = {}φ", p.label.symbol()),
        ));
    }

    match char_poly_coeffs(&n3) {
        Ok(cp) => {
            let c = cp.coeffs;
            checks.push(Check::exact(
                "spectrum5/charpoly_trace",
                c[0] == E::from_int(-2) * (E::from_int(5) + s2.clone()),
                "first coefficient = −2(5 + s₂)",
            ));
            checks.push(Check::exact(
                "spectrum5/charpoly_minors",
                c[1] == n3_second_coeff(k),
                "second coefficient = 10 + (4s₂ + 3)s₁²",
            ));
            checks.push(Check::exact(
                "spectrum5/charpoly_det_zero",
                c[2].is_zero(),
                "det 𝒩₃ = 0",
            ));
        }
        Err(e) => checks.push(Check::error("spectrum5/charpoly", e)),
    }
    let (plus, minus) = lambda_pm(k);
    checks.push(Check::exact(
        "spectrum5/lambda_forms_agree",
        plus == n3_pairs[1].value && minus == n3_pairs[2].value,
        "5 + s₂ ± (c₁s₂ − 1)s₁ = 5 + s₂(s₂ − c₁), s₁(s₁ − c₂)",
    ));
    let cf = common_factor(k);
    checks.push(Check::exact(
        "spectrum5/common_factor",
        cf.a == cf.epsilon.clone() * cf.a_reduced.clone()
            && cf.b == cf.epsilon.clone() * cf.b_reduced.clone()
            && lambda1_elimination_row(k) == vec![E::zero(), cf.a.clone(), cf.b.clone()],
        "a = ε(2s₂ − 2c₁ + 3), b = ε(2s₂ + 1), ε = −c₂(c₂s₁ + 3)",
    ));

    let values: Vec<E> = n3_pairs
        .iter()
        .chain(&n2_pairs)
        .map(|p| p.value.clone())
        .collect();
    let total = values.iter().fold(E::zero(), |acc, v| acc + v.clone());
    checks.push(Check::exact(
        "spectrum5/completeness",
        total == E::from_int(20),
        format!("sum of eigenvalues = {total}"),
    ));
    let simple =
        (0..5).all(|i| (i + 1..5).all(|j| !(values[i].clone() - values[j].clone()).is_zero()));
    checks.push(Check::exact(
        "spectrum5/simple_spectrum",
        simple,
        "five distinct eigenvalues",
    ));

    match assemble_dft_eigenvectors(k) {
        Ok(pairs) => {
            let n5 = build_operator::<E>(OperatorKind::Number, 5).expect("n = 5");
            let pd = build_operator::<E>(OperatorKind::Pd, 5).expect("n = 5");
            for (idx, p) in pairs.iter().enumerate() {
                let sign = match p.block {
                    Block::Sym => E::one(),
                    Block::Anti => -E::one(),
                };
                let parity = pd.mul_vec(&p.vector)
                    == p.vector
                        .iter()
                        .map(|x| x.clone() * sign.clone())
                        .collect::<Vec<_>>();
                checks.push(Check::exact(
                    format!("spectrum5/f{idx}_eigenpair"),
                    is_exact_eigenpair(&n5, &p.value, &p.vector) && parity,
                    format!(
                        "𝒩₅f{idx} = {}f{idx}, P_d f{idx} = {}f{idx}",
                        p.label.symbol(),
                        match p.block {
                            Block::Sym => "+",
                            Block::Anti => "−",
                        }
                    ),
                ));
            }
            let vectors: Vec<_> = pairs.iter().map(|p| p.vector.clone()).collect();
            checks.push(Check::exact(
                "spectrum5/orthogonality",
                pairwise_orthogonal(&vectors),
                "assembled eigenvectors pairwise orthogonal",
            ));
            let mut phases: Vec<Option<u8>> = pairs.iter().map(|p| p.dft_phase).collect();
            phases.sort();
            let parity_ok = pairs.iter().all(|p| match (p.block, p.dft_phase) {
                (Block::Sym, Some(k)) => k % 2 == 0,
                (Block::Anti, Some(k)) => k % 2 == 1,
                _ => false,
            });
            let shown: Vec<String> = phases
                .iter()
                .map(|k| k.map_or("none".into(), |k| phase_value(k).to_string()))
                .collect();
            checks.push(Check::exact(
                "spectrum5/phase_multiset",
                phases == vec![Some(0), Some(0), Some(1), Some(2), Some(3)] && parity_ok,
                format!("phases {}", shown.join(", ")),
            ));
            checks.push(Check::exact(
                "spectrum5/parity_split",
                pairs.iter().filter(|p| p.block == Block::Sym).count() == 3
                    && pairs.iter().filter(|p| p.block == Block::Anti).count() == 2,
                "3 even / 2 odd",
            ));
        }
        Err(e) => checks.push(Check::error("spectrum5/assemble", e)),
    }

    // Jacobi oracle on the symmetrized operator
    let oracle = build_t::<C>(5)
        .and_then(|t| conjugate_by_t(&build_operator::<C>(OperatorKind::Number, 5)?, &t))
        .and_then(|nt| eigh(&nt));
    match oracle {
        Ok(d) => {
            let mut closed: Vec<f64> = values.iter().map(|v| v.to_c64().re).collect();
            closed.sort_by(f64::total_cmp);
            let diff = closed
                .iter()
                .zip(&d.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            checks.push(Check::within(
                "spectrum5/jacobi_agreement",
                diff,
                1e-10,
                "closed forms vs Jacobi on T𝒩₅Tᵀ",
            ));
        }
        Err(e) => checks.push(Check::error("spectrum5/jacobi_agreement", e)),
    }

    if let Ok(eps) = (0..5)
        .map(|j| symmetrized_basis_vector::<E>(BasisKind::Eps, j, 5))
        .collect::<Result<Vec<_>>>()
    {
        let ok = (0..5).all(|i| {
            (0..5).all(|j| inner(&eps[i], &eps[j]) == if i == j { E::one() } else { E::zero() })
        });
        checks.push(Check::exact(
            "spectrum5/eps_tilde_orthonormal",
            ok,
            "ε̃ basis orthonormal",
        ));
    }
    checks
}

pub fn identities_suite(k: &QuinticConstants) -> Vec<Check> {
    field_identities(k)
        .into_iter()
        .map(|c| Check::exact(format!("identities/{}", c.name), c.holds, "exact zero test"))
        .collect()
}
