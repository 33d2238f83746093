//! The quadratic extension `K(i)(√2)`.
//!
//! `√2 ∉ K(i)` (the latter is the 20th cyclotomic field), yet the
//! symmetrizing matrix has entries `±1/√2` and conjugated operators pick up
//! a single factor of `√2` whenever exactly one index is a reflection fixed
//! point. Every exact matrix in this crate therefore lives over this field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::quintic::{forward_owned_ops, ComplexQuintic, RealQuintic};
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// `base + root2·√2` with `base, root2 ∈ K(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    pub base: ComplexQuintic,
    pub root2: ComplexQuintic,
}

impl ExactScalar {
    pub fn new(base: ComplexQuintic, root2: ComplexQuintic) -> Self {
        Self { base, root2 }
    }

    pub fn zero() -> Self {
        ComplexQuintic::zero().into()
    }

    pub fn one() -> Self {
        ComplexQuintic::one().into()
    }

    pub fn from_int(v: i64) -> Self {
        ComplexQuintic::from_int(v).into()
    }

    pub fn from_rational(r: Rational) -> Self {
        ComplexQuintic::from_rational(r).into()
    }

    pub fn i() -> Self {
        ComplexQuintic::i().into()
    }

    pub fn sqrt2() -> Self {
        Self::new(ComplexQuintic::zero(), ComplexQuintic::one())
    }

    pub fn frac_1_sqrt2() -> Self {
        Self::new(
            ComplexQuintic::zero(),
            ComplexQuintic::from_rational(rat(1, 2)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.root2.is_zero()
    }

    /// True when the value lies in `K(i)`.
    pub fn in_base_field(&self) -> bool {
        self.root2.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.base.is_real() && self.root2.is_real()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.base.conj(), self.root2.conj())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.base.scale(r), self.root2.scale(r))
    }

    /// `(a + b√2)⁻¹ = (a − b√2)/(a² − 2b²)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = &self.base;
        let b = &self.root2;
        let two = ComplexQuintic::from_int(2);
        let norm = &(a * a) - &(&two * &(b * b));
        let ninv = norm.inv()?;
        Ok(Self::new(a * &ninv, -&(b * &ninv)))
    }

    pub fn to_c64(&self) -> Complex64 {
        self.base.to_c64() + self.root2.to_c64() * std::f64::consts::SQRT_2
    }

    /// Square root of a real value, searched in `K` and in `√2·K`.
    pub fn sqrt_real(&self) -> Result<Self> {
        if !self.is_real() || !self.in_base_field() {
            return Err(Error::NotASquare);
        }
        let t = &self.base.re;
        if let Some(r) = t.sqrt() {
            return Ok(ComplexQuintic::from_real(r).into());
        }
        if let Some(w) = t.scale(&rat(1, 2)).sqrt() {
            return Ok(Self::new(
                ComplexQuintic::zero(),
                ComplexQuintic::from_real(w),
            ));
        }
        Err(Error::NotASquare)
    }

    /// Serialized coordinates: 8 strings for values in `K(i)`, otherwise 16
    /// (the `K(i)` part followed by the coefficient of `√2`).
    pub fn coord_strings(&self) -> Vec<String> {
        let mut out = self.base.coord_strings();
        if !self.in_base_field() {
            out.extend(self.root2.coord_strings());
        }
        out
    }

    pub fn real_part(&self) -> RealQuintic {
        self.base.re.clone()
    }
}

impl From<ComplexQuintic> for ExactScalar {
    fn from(base: ComplexQuintic) -> Self {
        Self::new(base, ComplexQuintic::zero())
    }
}

impl From<RealQuintic> for ExactScalar {
    fn from(re: RealQuintic) -> Self {
        ComplexQuintic::from_real(re).into()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.base.is_zero(), self.root2.is_zero()) {
            (_, true) => write!(f, "{}", self.base),
            (true, false) => write!(f, "sqrt2*({})", self.root2),
            (false, false) => write!(f, "{} + sqrt2*({})", self.base, self.root2),
        }
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.base + &o.base, &self.root2 + &o.root2)
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.base - &o.base, &self.root2 - &o.root2)
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.root2.is_zero() && o.root2.is_zero() {
            return (&self.base * &o.base).into();
        }
        let two = ComplexQuintic::from_int(2);
        ExactScalar::new(
            &(&self.base * &o.base) + &(&two * &(&self.root2 * &o.root2)),
            &(&self.base * &o.root2) + &(&self.root2 * &o.base),
        )
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.base, -&self.root2)
    }
}

forward_owned_ops!(ExactScalar);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squared() {
        let r = ExactScalar::sqrt2();
        assert_eq!(&r * &r, ExactScalar::from_int(2));
        assert_eq!(&r * &ExactScalar::frac_1_sqrt2(), ExactScalar::one());
    }

    #[test]
    fn inverse_of_mixed_value() {
        let x = ExactScalar::new(
            ComplexQuintic::new(RealQuintic::s1(), RealQuintic::from_int(3)),
            ComplexQuintic::from_real(RealQuintic::sqrt5()),
        );
        assert_eq!(&x * &x.inv().unwrap(), ExactScalar::one());
        assert_eq!(ExactScalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_real_in_both_cosets() {
        assert_eq!(
            ExactScalar::from_int(2).sqrt_real().unwrap(),
            ExactScalar::sqrt2()
        );
        assert_eq!(
            ExactScalar::from_int(4).sqrt_real().unwrap(),
            ExactScalar::from_int(2)
        );
        assert_eq!(ExactScalar::from_int(3).sqrt_real(), Err(Error::NotASquare));
        assert_eq!(ExactScalar::i().sqrt_real(), Err(Error::NotASquare));
    }

    #[test]
    fn serialization_width() {
        assert_eq!(ExactScalar::from_int(20).coord_strings().len(), 8);
        assert_eq!(ExactScalar::from_int(20).coord_strings()[0], "20/1");
        assert_eq!(ExactScalar::sqrt2().coord_strings().len(), 16);
    }
}
