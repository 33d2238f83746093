use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::Error;
use crate::field::{rat, root_of_unity, sine, ComplexQuintic, ExactScalar, RealQuintic};

/// Ring of matrix entries, with the handful of constants the operator
/// constructors need. Indices passed to the constant providers are taken
/// mod `n`.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Exact backends compare structurally; float backends by magnitude.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_ratio(numer: i64, denom: i64) -> Self;
    fn imag_unit() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn to_c64(&self) -> Complex64;

    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Exact zero for exact backends; `|x| < tol` otherwise.
    fn negligible(&self, tol: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.is_zero() || self.abs_f64() < tol
        }
    }

    /// `q^k` with `q = exp(2πi/n)`, if representable.
    fn unit_root(k: i64, n: usize) -> Option<Self>;

    /// `2 sin(2πk/n)`, if representable.
    fn two_sine(k: i64, n: usize) -> Option<Self>;

    /// `n^{-1/2}`, if representable.
    fn inv_sqrt(n: usize) -> Option<Self>;
}

impl Scalar for ExactScalar {
    const EXACT: bool = true;

    fn zero() -> Self {
        ExactScalar::zero()
    }

    fn one() -> Self {
        ExactScalar::one()
    }

    fn from_i64(v: i64) -> Self {
        ExactScalar::from_int(v)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        ExactScalar::from_rational(rat(numer, denom))
    }

    fn imag_unit() -> Self {
        ExactScalar::i()
    }

    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }

    fn conj(&self) -> Self {
        ExactScalar::conj(self)
    }

    fn inv(&self) -> Option<Self> {
        ExactScalar::inv(self).ok()
    }

    fn to_c64(&self) -> Complex64 {
        ExactScalar::to_c64(self)
    }

    fn unit_root(k: i64, n: usize) -> Option<Self> {
        (n == 5).then(|| root_of_unity(k).into())
    }

    fn two_sine(k: i64, n: usize) -> Option<Self> {
        (n == 5).then(|| ComplexQuintic::from_real(sine(k)).into())
    }

    fn inv_sqrt(n: usize) -> Option<Self> {
        if n == 0 {
            return None;
        }
        // n = m²·r with r squarefree; only r | 10 is representable.
        let mut m = 1u64;
        let mut r = n as u64;
        let mut p = 2u64;
        while p * p <= r {
            while r.is_multiple_of(p * p) {
                r /= p * p;
                m *= p;
            }
            p += 1;
        }
        let scale = rat(1, (m * r) as i64);
        let sqrt5 = ComplexQuintic::from_real(RealQuintic::sqrt5());
        let root = match r {
            1 => ExactScalar::one(),
            2 => ExactScalar::sqrt2(),
            5 => sqrt5.into(),
            10 => ExactScalar::new(ComplexQuintic::zero(), sqrt5),
            _ => return None,
        };
        Some(root.scale(&scale))
    }
}

/// `q^k` in double precision, exact at the quarter turns so that e.g.
/// `2 sin(π)` is a true zero.
fn unit_root_f64(k: i64, n: usize) -> Complex64 {
    let n = n as i64;
    let m = k.rem_euclid(n);
    if m == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * m == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * m == n {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * m == 3 * n {
        return Complex64::new(0.0, -1.0);
    }
    let angle = 2.0 * std::f64::consts::PI * m as f64 / n as f64;
    Complex64::new(angle.cos(), angle.sin())
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Complex64::new(numer as f64 / denom as f64, 0.0)
    }

    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex64::inv(self))
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn unit_root(k: i64, n: usize) -> Option<Self> {
        (n > 0).then(|| unit_root_f64(k, n))
    }

    fn two_sine(k: i64, n: usize) -> Option<Self> {
        (n > 0).then(|| Complex64::new(2.0 * unit_root_f64(k, n).im, 0.0))
    }

    fn inv_sqrt(n: usize) -> Option<Self> {
        (n > 0).then(|| Complex64::new((1.0 / n as f64).sqrt(), 0.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    /// Exact for the five-point transform, float otherwise.
    pub fn default_for(n: usize) -> Self {
        if n == 5 {
            Backend::Exact
        } else {
            Backend::Float
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            _ => Err(Error::InvalidArgument(format!("unknown backend `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_inverse_square_roots() {
        for n in [1usize, 2, 4, 5, 8, 10, 20, 45, 250] {
            let x = ExactScalar::inv_sqrt(n).unwrap();
            assert_eq!(
                &(&x * &x) * &ExactScalar::from_int(n as i64),
                ExactScalar::one(),
                "n = {n}"
            );
            assert!((x.to_c64().re - 1.0 / (n as f64).sqrt()).abs() < 1e-15);
        }
        assert!(ExactScalar::inv_sqrt(3).is_none());
        assert!(ExactScalar::inv_sqrt(7).is_none());
        assert!(ExactScalar::inv_sqrt(0).is_none());
    }

    #[test]
    fn float_roots_exact_at_quarter_turns() {
        assert_eq!(Complex64::two_sine(1, 2).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(
            Complex64::unit_root(1, 4).unwrap(),
            Complex64::new(0.0, 1.0)
        );
        assert_eq!(
            Complex64::unit_root(-1, 4).unwrap(),
            Complex64::new(0.0, -1.0)
        );
        let q = Complex64::unit_root(1, 5).unwrap();
        let e = ExactScalar::unit_root(1, 5).unwrap().to_c64();
        assert!((q - e).norm() < 1e-15);
    }

    #[test]
    fn exact_constants_only_for_five() {
        assert!(ExactScalar::unit_root(1, 4).is_none());
        assert!(ExactScalar::two_sine(1, 7).is_none());
    }

    #[test]
    fn negligible_semantics() {
        assert!(Complex64::new(1e-13, 0.0).negligible(1e-12));
        assert!(!Complex64::new(1e-11, 0.0).negligible(1e-12));
        assert!(!ExactScalar::from_ratio(1, 1_000_000_000).negligible(1.0));
        assert!(ExactScalar::zero().negligible(0.0));
    }
}
