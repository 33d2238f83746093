use dftn::field::{
    field_identities, rat, ComplexQuintic, NamedConstant, QuinticConstants, Rational, RealQuintic,
};
use dftn::ExactScalar;
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=7).prop_map(|(p, q)| rat(p, q))
}

fn real_q() -> impl Strategy<Value = RealQuintic> {
    prop::array::uniform4(small_rat()).prop_map(RealQuintic::from_coords)
}

fn complex_q() -> impl Strategy<Value = ComplexQuintic> {
    (real_q(), real_q()).prop_map(|(re, im)| ComplexQuintic::new(re, im))
}

fn exact_scalar() -> impl Strategy<Value = ExactScalar> {
    (complex_q(), complex_q()).prop_map(|(b, r)| ExactScalar::new(b, r))
}

fn basis() -> [RealQuintic; 4] {
    let z = || Rational::zero();
    let o = || Rational::one();
    [
        RealQuintic::from_coords([o(), z(), z(), z()]),
        RealQuintic::from_coords([z(), o(), z(), z()]),
        RealQuintic::from_coords([z(), z(), o(), z()]),
        RealQuintic::from_coords([z(), z(), z(), o()]),
    ]
}

/// Solves `x · y = 1` as a 4×4 rational system (columns are `x · basis_j`)
/// by Gauss-Jordan elimination. `None` when singular.
fn solve_inverse(x: &RealQuintic) -> Option<RealQuintic> {
    let cols: Vec<[Rational; 4]> = basis().iter().map(|b| (x * b).coords()).collect();
    let mut m: Vec<Vec<Rational>> = (0..4)
        .map(|i| {
            let mut row: Vec<Rational> = (0..4).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 {
                Rational::one()
            } else {
                Rational::zero()
            });
            row
        })
        .collect();
    for c in 0..4 {
        let p = (c..4).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for v in m[c].iter_mut() {
            *v = &*v / &piv;
        }
        for r in 0..4 {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot_row = m[c].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(p * &f);
                }
            }
        }
    }
    Some(RealQuintic::from_coords([
        m[0][4].clone(),
        m[1][4].clone(),
        m[2][4].clone(),
        m[3][4].clone(),
    ]))
}

fn close(a: Complex64, b: Complex64, scale: f64) -> bool {
    (a - b).norm() <= 1e-12 * scale.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn real_ring_axioms(a in real_q(), b in real_q(), c in real_q()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn complex_ring_axioms(a in complex_q(), b in complex_q(), c in complex_q()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn surd_ring_axioms(a in exact_scalar(), b in exact_scalar(), c in exact_scalar()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a * c);
    }

    #[test]
    fn real_inverse_matches_linear_solve(x in real_q()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert!((&(&x * &inv) - &RealQuintic::one()).is_zero());
        prop_assert_eq!(Some(inv), solve_inverse(&x));
    }

    #[test]
    fn complex_and_surd_inverse(x in complex_q(), y in exact_scalar()) {
        if !x.is_zero() {
            let inv = x.inv().unwrap();
            prop_assert!((&(&x * &inv) - &ComplexQuintic::one()).is_zero());
        }
        if !y.is_zero() {
            let inv = y.inv().unwrap();
            prop_assert!((y * inv - ExactScalar::one()).is_zero());
        }
    }

    #[test]
    fn float_embedding_is_homomorphism(a in complex_q(), b in complex_q()) {
        let (fa, fb) = (a.to_c64(), b.to_c64());
        let scale = fa.norm() * fb.norm() + fa.norm() + fb.norm();
        prop_assert!(close((&a + &b).to_c64(), fa + fb, scale));
        prop_assert!(close((&a - &b).to_c64(), fa - fb, scale));
        prop_assert!(close((&a * &b).to_c64(), fa * fb, scale));
        prop_assert!(close(a.conj().to_c64(), fa.conj(), scale));
    }

    #[test]
    fn surd_embedding_is_homomorphism(a in exact_scalar(), b in exact_scalar()) {
        let (fa, fb) = (a.to_c64(), b.to_c64());
        let scale = fa.norm() * fb.norm() + fa.norm() + fb.norm();
        prop_assert!(close((a.clone() * b.clone()).to_c64(), fa * fb, scale));
        prop_assert!(close((a + b).to_c64(), fa + fb, scale));
    }

    #[test]
    fn square_roots_of_squares(x in real_q()) {
        let r = x.square().sqrt().expect("a square has a root in the field");
        prop_assert!(r == x || r == -&x);
    }
}

#[test]
fn zero_is_not_invertible() {
    assert!(RealQuintic::zero().inv().is_err());
    assert!(ComplexQuintic::zero().inv().is_err());
    assert!(ExactScalar::zero().inv().is_err());
}

#[test]
fn identities_hold_and_every_flip_breaks_one() {
    let ok = field_identities(&QuinticConstants::exact());
    assert_eq!(ok.len(), 9);
    assert!(ok.iter().all(|c| c.holds));
    for which in NamedConstant::identity_constants() {
        let flipped = field_identities(&QuinticConstants::exact().with_sign_flip(which));
        assert!(
            flipped.iter().any(|c| !c.holds),
            "flip of {which} went unnoticed"
        );
    }
}
