use dftn::eigensolver::{cross_validate, decomposition_errors, eigh};
use dftn::operators::{build_operator, verify_relations, OperatorKind, RELATION_NAMES};
use dftn::symmetrize::{
    anti_dim, block_split, build_t, conjugate_by_t, is_reflection_signature, sym_dim,
    symmetrize_vector, symmetrized_reflection,
};
use dftn::{DenseMatrix, FloatMatrix};
use num_complex::Complex64;
use proptest::prelude::*;

const HERMITIAN: [OperatorKind; 4] = [
    OperatorKind::Number,
    OperatorKind::X,
    OperatorKind::Y,
    OperatorKind::Pd,
];

fn hermitian_matrix(max_n: usize) -> impl Strategy<Value = FloatMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), n * n).prop_map(move |raw| {
            let m =
                DenseMatrix::from_fn(n, |i, j| Complex64::new(raw[i * n + j].0, raw[i * n + j].1));
            let mh = m.adjoint();
            DenseMatrix::from_fn(n, |i, j| (m.row(i)[j] + mh.row(i)[j]) * 0.5)
        })
    })
}

fn sorted_spectrum(m: &FloatMatrix) -> Vec<f64> {
    eigh(m).unwrap().values
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn float_relations_hold(n in 2usize..=64) {
        let report = verify_relations::<Complex64>(n, 1e-11).unwrap();
        prop_assert_eq!(report.entries.len(), RELATION_NAMES.len());
        for e in &report.entries {
            prop_assert!(e.passed, "n={} {} residual {:e}", n, e.name, e.max_residual);
        }
        prop_assert_eq!(report.get("phi_symmetric").unwrap().max_residual, 0.0);
    }

    #[test]
    fn number_operator_is_psd_with_full_trace(n in 2usize..=40) {
        let r = cross_validate(n).unwrap();
        prop_assert!(r.nonnegative(), "n={} min {:e}", n, r.min_eigenvalue);
        prop_assert!(r.trace_matches());
        prop_assert!(r.spectra_agree());
        prop_assert!(r.supports_ok());
    }

    #[test]
    fn conjugation_preserves_trace_and_norm(n in 2usize..=48, k in 0usize..10) {
        let kind = OperatorKind::ALL[k];
        let z = build_operator::<Complex64>(kind, n).unwrap();
        let t = build_t::<Complex64>(n).unwrap();
        let zt = conjugate_by_t(&z, &t).unwrap();
        let scale = z.frobenius_norm().max(1.0);
        prop_assert!((zt.trace() - z.trace()).norm() < 1e-11 * scale);
        prop_assert!((zt.frobenius_norm() - z.frobenius_norm()).abs() < 1e-11 * scale);
    }

    #[test]
    fn reflection_commuting_operators_split(n in 2usize..=48) {
        let t = build_t::<Complex64>(n).unwrap();
        for kind in [OperatorKind::Number, OperatorKind::Dft, OperatorKind::Pd] {
            let zt = conjugate_by_t(&build_operator::<Complex64>(kind, n).unwrap(), &t).unwrap();
            let split = block_split(&zt);
            prop_assert!(split.offblock_max < 1e-12, "{} n={}", kind.name(), n);
            prop_assert_eq!(split.sym_block.dim(), sym_dim(n));
            prop_assert_eq!(split.anti_block.dim(), anti_dim(n));
        }
    }

    #[test]
    fn hermitian_spectra_survive_conjugation(n in 2usize..=64, k in 0usize..4) {
        let z = build_operator::<Complex64>(HERMITIAN[k], n).unwrap();
        let t = build_t::<Complex64>(n).unwrap();
        let zt = conjugate_by_t(&z, &t).unwrap();
        let (a, b) = (sorted_spectrum(&z), sorted_spectrum(&zt));
        let scale = a.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-10 * scale, "n={} {} vs {}", n, x, y);
        }
    }

    #[test]
    fn t_round_trips_vectors(n in 2usize..=32, seed in prop::collection::vec(-3.0f64..3.0, 64)) {
        let t = build_t::<Complex64>(n).unwrap();
        let f: Vec<Complex64> = (0..n).map(|j| Complex64::new(seed[j], seed[32 + j])).collect();
        let s = symmetrize_vector(&t, &f).unwrap();
        let back = t.matrix.transpose().mul_vec(&s.concat());
        for (x, y) in f.iter().zip(&back) {
            prop_assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn jacobi_diagonalizes_random_hermitian(m in hermitian_matrix(12)) {
        let d = eigh(&m).unwrap();
        let (fit, ortho) = decomposition_errors(&m, &d);
        prop_assert!(fit < 1e-10 * m.frobenius_norm().max(1.0), "fit {:e}", fit);
        prop_assert!(ortho < 1e-12, "ortho {:e}", ortho);
        prop_assert!(d.values.windows(2).all(|w| w[0] <= w[1]));
        let sum: f64 = d.values.iter().sum();
        prop_assert!((sum - m.trace().re).abs() < 1e-10 * m.frobenius_norm().max(1.0));
    }
}

#[test]
fn reflection_signature_for_small_sizes() {
    for n in 2..=32 {
        let pt = symmetrized_reflection::<Complex64>(n).unwrap();
        assert!(is_reflection_signature(&pt), "n={n}");
    }
}

#[test]
fn x_spectrum_is_simple_for_odd_sizes() {
    for n in (3..=63).step_by(2) {
        let x = build_operator::<Complex64>(OperatorKind::X, n).unwrap();
        let mut d: Vec<f64> = (0..n).map(|i| x.row(i)[i].re).collect();
        d.sort_by(f64::total_cmp);
        assert!(d.windows(2).all(|w| w[1] - w[0] > 1e-9), "n={n}");
    }
}
