//! The trigonometric constants `s_n = 2 sin(2πn/5)`, `c_n = 2 cos(2πn/5)`
//! and the fifth roots of unity `q^n`, together with the identities they
//! satisfy.

use std::fmt;
use std::str::FromStr;

use super::quintic::{ComplexQuintic, RealQuintic};
use super::rational::rat;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantKind {
    S,
    C,
    Q,
}

/// `s_n`, exact. Indices are taken mod 5.
pub fn sine(n: i64) -> RealQuintic {
    match n.rem_euclid(5) {
        0 => RealQuintic::zero(),
        1 => RealQuintic::s1(),
        // s₂ = c₁·s₁
        2 => RealQuintic::from_ratios([(0, 1), (0, 1), (-1, 2), (1, 2)]),
        3 => -sine(2),
        _ => -sine(1),
    }
}

/// `c_n`, exact. Indices are taken mod 5.
pub fn cosine(n: i64) -> RealQuintic {
    match n.rem_euclid(5) {
        0 => RealQuintic::from_int(2),
        1 => RealQuintic::from_ratios([(-1, 2), (1, 2), (0, 1), (0, 1)]),
        2 => RealQuintic::from_ratios([(-1, 2), (-1, 2), (0, 1), (0, 1)]),
        3 => cosine(2),
        _ => cosine(1),
    }
}

/// `q^n = (c_n + i s_n)/2` with `q = exp(2πi/5)`.
pub fn root_of_unity(n: i64) -> ComplexQuintic {
    ComplexQuintic::new(cosine(n), sine(n)).scale(&rat(1, 2))
}

pub fn constant(kind: ConstantKind, n: i64) -> ComplexQuintic {
    match kind {
        ConstantKind::S => ComplexQuintic::from_real(sine(n)),
        ConstantKind::C => ComplexQuintic::from_real(cosine(n)),
        ConstantKind::Q => root_of_unity(n),
    }
}

/// A constant that can be sign-flipped in a [`QuinticConstants`] table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedConstant {
    Sqrt5,
    S(u8),
    C(u8),
    Q(u8),
}

impl NamedConstant {
    /// The constants the field identity suite depends on.
    pub fn identity_constants() -> Vec<NamedConstant> {
        let mut v = vec![Self::Sqrt5, Self::S(1), Self::S(2), Self::C(1), Self::C(2)];
        v.extend((0..5).map(Self::Q));
        v
    }
}

impl fmt::Display for NamedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sqrt5 => write!(f, "sqrt5"),
            Self::S(n) => write!(f, "s{n}"),
            Self::C(n) => write!(f, "c{n}"),
            Self::Q(n) => write!(f, "q{n}"),
        }
    }
}

impl FromStr for NamedConstant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("unknown constant `{s}`"));
        if s == "sqrt5" {
            return Ok(Self::Sqrt5);
        }
        let (head, idx) = s.split_at(1.min(s.len()));
        let idx: u8 = idx.parse().map_err(|_| bad())?;
        if idx > 4 {
            return Err(bad());
        }
        match head {
            "s" => Ok(Self::S(idx)),
            "c" => Ok(Self::C(idx)),
            "q" => Ok(Self::Q(idx)),
            _ => Err(bad()),
        }
    }
}

/// Table of the constants used by closed-form formulas. The exact table is
/// the default; a copy with one constant negated lets callers check that a
/// verification suite actually depends on that constant.
#[derive(Clone, Debug, PartialEq)]
pub struct QuinticConstants {
    pub sqrt5: RealQuintic,
    pub s: [RealQuintic; 5],
    pub c: [RealQuintic; 5],
    pub q: [ComplexQuintic; 5],
}

impl Default for QuinticConstants {
    fn default() -> Self {
        Self::exact()
    }
}

impl QuinticConstants {
    pub fn exact() -> Self {
        Self {
            sqrt5: RealQuintic::sqrt5(),
            s: [0, 1, 2, 3, 4].map(sine),
            c: [0, 1, 2, 3, 4].map(cosine),
            q: [0, 1, 2, 3, 4].map(root_of_unity),
        }
    }

    pub fn with_sign_flip(mut self, which: NamedConstant) -> Self {
        match which {
            NamedConstant::Sqrt5 => self.sqrt5 = -&self.sqrt5,
            NamedConstant::S(n) => self.s[n as usize] = -&self.s[n as usize],
            NamedConstant::C(n) => self.c[n as usize] = -&self.c[n as usize],
            NamedConstant::Q(n) => self.q[n as usize] = -&self.q[n as usize],
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// The nine exact identities among the constants, each decided by an exact
/// zero test on `lhs − rhs`.
pub fn field_identities(k: &QuinticConstants) -> Vec<IdentityCheck> {
    let one = RealQuintic::one();
    let two = RealQuintic::from_int(2);
    let (s1, s2, c1, c2) = (&k.s[1], &k.s[2], &k.c[1], &k.c[2]);
    let real = |name, lhs: RealQuintic, rhs: RealQuintic| IdentityCheck {
        name,
        holds: (&lhs - &rhs).is_zero(),
    };
    let q_sum = k.q.iter().fold(ComplexQuintic::zero(), |acc, x| &acc + x);
    let s2c2 = s2 + c2;
    vec![
        real("s1*s2 = sqrt5", s1 * s2, k.sqrt5.clone()),
        real("s2 = c1*s1", s2.clone(), c1 * s1),
        real("c1*c2 = -1", c1 * c2, -&one),
        real("c1 + c2 = -1", c1 + c2, -&one),
        real("s1^2 = 2 - c2", s1 * s1, &two - c2),
        real("s2^2 = 2 - c1", s2 * s2, &two - c1),
        IdentityCheck {
            name: "sum of q^n = 0",
            holds: q_sum.is_zero(),
        },
        IdentityCheck {
            name: "q^5 = 1",
            holds: k.q[1].pow(5) == ComplexQuintic::one(),
        },
        real(
            "2(2 - s1) = (s2 + c2)^2",
            &two * &(&two - s1),
            &s2c2 * &s2c2,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn constants_match_float_oracle() {
        for n in 0..5 {
            let angle = 2.0 * PI * n as f64 / 5.0;
            assert!((sine(n).to_f64() - 2.0 * angle.sin()).abs() < 1e-14);
            assert!((cosine(n).to_f64() - 2.0 * angle.cos()).abs() < 1e-14);
            let q = root_of_unity(n).to_c64();
            assert!((q.re - angle.cos()).abs() < 1e-14);
            assert!((q.im - angle.sin()).abs() < 1e-14);
        }
    }

    #[test]
    fn documented_coordinates() {
        assert!(constant(ConstantKind::S, 0).is_zero());
        assert_eq!(
            cosine(1),
            RealQuintic::from_ratios([(-1, 2), (1, 2), (0, 1), (0, 1)])
        );
        assert_eq!(
            sine(2),
            RealQuintic::from_ratios([(0, 1), (0, 1), (-1, 2), (1, 2)])
        );
        assert_eq!(constant(ConstantKind::Q, 0), ComplexQuintic::one());
        assert!((root_of_unity(1).to_c64().re - 0.309_016_994_4).abs() < 1e-10);
        assert!((root_of_unity(1).to_c64().im - 0.951_056_516_3).abs() < 1e-10);
    }

    #[test]
    fn symmetry_by_construction() {
        assert_eq!(sine(3), -sine(2));
        assert_eq!(sine(4), -sine(1));
        assert_eq!(cosine(3), cosine(2));
        assert_eq!(cosine(4), cosine(1));
        assert_eq!(sine(-1), sine(4));
    }

    #[test]
    fn roots_of_unity_have_unit_modulus() {
        for n in 0..5 {
            assert_eq!(root_of_unity(n).norm_sqr(), RealQuintic::one());
        }
    }

    #[test]
    fn zero_tests_from_identities() {
        let d = &sine(2) - &(&cosine(1) * &sine(1));
        assert!(d.is_zero());
        let e = &(&cosine(1) + &cosine(2)) + &RealQuintic::one();
        assert!(e.is_zero());
        assert_eq!(&sine(1) * &sine(2), RealQuintic::sqrt5());
    }

    #[test]
    fn all_identities_hold() {
        let checks = field_identities(&QuinticConstants::exact());
        assert_eq!(checks.len(), 9);
        for c in checks {
            assert!(c.holds, "{}", c.name);
        }
    }

    #[test]
    fn every_sign_flip_breaks_an_identity() {
        for which in NamedConstant::identity_constants() {
            let k = QuinticConstants::exact().with_sign_flip(which);
            assert!(
                field_identities(&k).iter().any(|c| !c.holds),
                "flipping {which} went unnoticed"
            );
        }
    }

    #[test]
    fn parse_named_constant() {
        assert_eq!("c1".parse::<NamedConstant>().unwrap(), NamedConstant::C(1));
        assert_eq!(
            "sqrt5".parse::<NamedConstant>().unwrap(),
            NamedConstant::Sqrt5
        );
        assert!("c9".parse::<NamedConstant>().is_err());
        assert!("x1".parse::<NamedConstant>().is_err());
        assert!("".parse::<NamedConstant>().is_err());
    }
}
