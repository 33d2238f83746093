//! Exact arithmetic in the real quartic field `K = Q(√5, s₁)`, where
//! `s₁ = 2 sin(2π/5)` satisfies `s₁² = (5 + √5)/2`, and in its complex
//! extension `K(i)`.
//!
//! Elements of `K` are stored in the basis `{1, √5, s₁, √5·s₁}`. Internally
//! the field is handled as the tower `Q(√5)(s₁)`: an element is
//! `lo + hi·s₁` with `lo, hi ∈ Q(√5)`, which keeps multiplication and
//! inversion down to a few lines.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::rational::{format_rational, int, rat, Rational};
use crate::error::{Error, Result};

pub(crate) const SQRT5_F64: f64 = 2.236_067_977_499_79;
/// 2 sin(2π/5)
pub(crate) const S1_F64: f64 = 1.902_113_032_590_307;
/// 2 sin(4π/5), the image of s₁ under √5 ↦ −√5.
pub(crate) const S2_F64: f64 = 1.175_570_504_584_946_3;

/// Element `a + b√5` of `Q(√5)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct Quad5 {
    a: Rational,
    b: Rational,
}

impl Quad5 {
    fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Self::new(&self.a + &o.a, &self.b + &o.b)
    }

    fn sub(&self, o: &Self) -> Self {
        Self::new(&self.a - &o.a, &self.b - &o.b)
    }

    fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default_zero();
        }
        let five = int(5);
        Self::new(
            &self.a * &o.a + five * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }

    fn default_zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    /// Multiplication by `s₁² = 5/2 + √5/2`.
    fn mul_s1_squared(&self) -> Self {
        let half = rat(1, 2);
        Self::new(
            (int(5) * &self.a + int(5) * &self.b) * &half,
            (&self.a + int(5) * &self.b) * &half,
        )
    }

    fn inv(&self) -> Option<Self> {
        let norm = &self.a * &self.a - int(5) * &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(Self::new(&self.a / &norm, -&self.b / &norm))
    }
}

/// Element `a + b√5 + c·s₁ + d·√5·s₁` of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealQuintic {
    lo: Quad5,
    hi: Quad5,
}

impl RealQuintic {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self {
            lo: Quad5::new(a, b),
            hi: Quad5::new(c, d),
        }
    }

    pub fn from_coords(coords: [Rational; 4]) -> Self {
        let [a, b, c, d] = coords;
        Self::new(a, b, c, d)
    }

    /// Shorthand for small rational coordinates `(num, den)`.
    pub fn from_ratios(coords: [(i64, i64); 4]) -> Self {
        let [a, b, c, d] = coords.map(|(p, q)| rat(p, q));
        Self::new(a, b, c, d)
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(int(v))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt5() -> Self {
        Self::from_ratios([(0, 1), (1, 1), (0, 1), (0, 1)])
    }

    pub fn s1() -> Self {
        Self::from_ratios([(0, 1), (0, 1), (1, 1), (0, 1)])
    }

    pub fn coords(&self) -> [Rational; 4] {
        [
            self.lo.a.clone(),
            self.lo.b.clone(),
            self.hi.a.clone(),
            self.hi.b.clone(),
        ]
    }

    pub fn coord_strings(&self) -> [String; 4] {
        self.coords().map(|c| format_rational(&c))
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// True when only the rational coordinate is nonzero.
    pub fn is_rational(&self) -> bool {
        self.lo.b.is_zero() && self.hi.is_zero()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            lo: Quad5::new(&self.lo.a * r, &self.lo.b * r),
            hi: Quad5::new(&self.hi.a * r, &self.hi.b * r),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn inv(&self) -> Result<Self> {
        // (lo + hi·s)⁻¹ = (lo − hi·s) / (lo² − hi²·s²)
        let denom = self
            .lo
            .mul(&self.lo)
            .sub(&self.hi.mul(&self.hi).mul_s1_squared());
        let dinv = denom.inv().ok_or(Error::DivisionByZero)?;
        Ok(Self {
            lo: self.lo.mul(&dinv),
            hi: self.hi.neg().mul(&dinv),
        })
    }

    pub fn to_f64(&self) -> f64 {
        let [a, b, c, d] = self.coords().map(|x| x.to_f64().unwrap_or(f64::NAN));
        a + b * SQRT5_F64 + (c + d * SQRT5_F64) * S1_F64
    }

    /// Values under the four real embeddings of `K`, the first being the
    /// standard one (`√5 > 0`, `s₁ = 2 sin 72°`).
    pub fn embeddings(&self) -> [f64; 4] {
        let [a, b, c, d] = self.coords().map(|x| x.to_f64().unwrap_or(f64::NAN));
        let p = a + b * SQRT5_F64;
        let q = c + d * SQRT5_F64;
        let pc = a - b * SQRT5_F64;
        let qc = c - d * SQRT5_F64;
        [
            p + q * S1_F64,
            p - q * S1_F64,
            pc + qc * S2_F64,
            pc - qc * S2_F64,
        ]
    }

    fn from_embeddings(v: [f64; 4]) -> [f64; 4] {
        let p = (v[0] + v[1]) / 2.0;
        let q = (v[0] - v[1]) / (2.0 * S1_F64);
        let pc = (v[2] + v[3]) / 2.0;
        let qc = (v[2] - v[3]) / (2.0 * S2_F64);
        [
            (p + pc) / 2.0,
            (p - pc) / (2.0 * SQRT5_F64),
            (q + qc) / 2.0,
            (q - qc) / (2.0 * SQRT5_F64),
        ]
    }

    fn common_denominator(&self) -> BigInt {
        self.coords()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Square root inside `K`, if one exists. Candidates are read off the
    /// four embeddings (every sign choice on the conjugates), rounded onto
    /// the lattice `(1/(2·den))·Z⁴` and accepted only if they square to
    /// `self` exactly. Returns the root that is positive in the standard
    /// embedding.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let emb = self.embeddings();
        let scale = emb.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        if emb.iter().any(|&x| x < -1e-9 * scale) {
            return None;
        }
        let roots = emb.map(|x| x.max(0.0).sqrt());
        let lattice = BigInt::from(2) * self.common_denominator();
        let lattice_f = lattice.to_f64()?;
        for signs in 0u8..8 {
            let mut cand = roots;
            for (bit, r) in cand.iter_mut().skip(1).enumerate() {
                if signs & (1 << bit) != 0 {
                    *r = -*r;
                }
            }
            let coords = Self::from_embeddings(cand);
            let mut exact = Vec::with_capacity(4);
            for x in coords {
                let scaled = x * lattice_f;
                let rounded = scaled.round();
                if !rounded.is_finite() || (scaled - rounded).abs() > 1e-4 {
                    break;
                }
                let Some(numer) = BigInt::from_f64(rounded) else {
                    break;
                };
                exact.push(Rational::new(numer, lattice.clone()));
            }
            if exact.len() != 4 {
                continue;
            }
            let cand = Self::from_coords([
                exact[0].clone(),
                exact[1].clone(),
                exact[2].clone(),
                exact[3].clone(),
            ]);
            if &cand * &cand == *self {
                return Some(if cand.to_f64() < 0.0 { -cand } else { cand });
            }
        }
        None
    }
}

impl fmt::Display for RealQuintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["", "*sqrt5", "*s1", "*sqrt5*s1"];
        let mut terms = Vec::new();
        for (c, name) in self.coords().iter().zip(NAMES) {
            if !c.is_zero() {
                terms.push((
                    c.is_negative(),
                    format!("{}{}", format_rational(&c.abs()), name),
                ));
            }
        }
        if terms.is_empty() {
            return write!(f, "0/1");
        }
        for (i, (neg, body)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a RealQuintic> for &'a RealQuintic {
    type Output = RealQuintic;
    fn add(self, o: &RealQuintic) -> RealQuintic {
        RealQuintic {
            lo: self.lo.add(&o.lo),
            hi: self.hi.add(&o.hi),
        }
    }
}

impl<'a> Sub<&'a RealQuintic> for &'a RealQuintic {
    type Output = RealQuintic;
    fn sub(self, o: &RealQuintic) -> RealQuintic {
        RealQuintic {
            lo: self.lo.sub(&o.lo),
            hi: self.hi.sub(&o.hi),
        }
    }
}

impl<'a> Mul<&'a RealQuintic> for &'a RealQuintic {
    type Output = RealQuintic;
    fn mul(self, o: &RealQuintic) -> RealQuintic {
        RealQuintic {
            lo: self.lo.mul(&o.lo).add(&self.hi.mul(&o.hi).mul_s1_squared()),
            hi: self.lo.mul(&o.hi).add(&self.hi.mul(&o.lo)),
        }
    }
}

impl Neg for &RealQuintic {
    type Output = RealQuintic;
    fn neg(self) -> RealQuintic {
        RealQuintic {
            lo: self.lo.neg(),
            hi: self.hi.neg(),
        }
    }
}

/// Element `re + i·im` of `K(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplexQuintic {
    pub re: RealQuintic,
    pub im: RealQuintic,
}

impl ComplexQuintic {
    pub fn new(re: RealQuintic, im: RealQuintic) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: RealQuintic) -> Self {
        Self::new(re, RealQuintic::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_real(RealQuintic::from_int(v))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_real(RealQuintic::from_rational(r))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::new(RealQuintic::zero(), RealQuintic::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.re.scale(r), self.im.scale(r))
    }

    pub fn scale_real(&self, r: &RealQuintic) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// `|x|² = re² + im²`, an element of `K`.
    pub fn norm_sqr(&self) -> RealQuintic {
        &self.re.square() + &self.im.square()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ninv = self.norm_sqr().inv()?;
        Ok(self.conj().scale_real(&ninv))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// The eight coordinates: real part in basis order, then imaginary part.
    pub fn coords(&self) -> [Rational; 8] {
        let [a, b, c, d] = self.re.coords();
        let [e, f, g, h] = self.im.coords();
        [a, b, c, d, e, f, g, h]
    }

    pub fn from_coords(coords: [Rational; 8]) -> Self {
        let [a, b, c, d, e, f, g, h] = coords;
        Self::new(RealQuintic::new(a, b, c, d), RealQuintic::new(e, f, g, h))
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords().iter().map(format_rational).collect()
    }
}

impl fmt::Display for ComplexQuintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i*({})", self.im),
            (false, false) => write!(f, "{} + i*({})", self.re, self.im),
        }
    }
}

impl<'a> Add<&'a ComplexQuintic> for &'a ComplexQuintic {
    type Output = ComplexQuintic;
    fn add(self, o: &ComplexQuintic) -> ComplexQuintic {
        ComplexQuintic::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a ComplexQuintic> for &'a ComplexQuintic {
    type Output = ComplexQuintic;
    fn sub(self, o: &ComplexQuintic) -> ComplexQuintic {
        ComplexQuintic::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a ComplexQuintic> for &'a ComplexQuintic {
    type Output = ComplexQuintic;
    fn mul(self, o: &ComplexQuintic) -> ComplexQuintic {
        if self.im.is_zero() && o.im.is_zero() {
            return ComplexQuintic::from_real(&self.re * &o.re);
        }
        ComplexQuintic::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl Neg for &ComplexQuintic {
    type Output = ComplexQuintic;
    fn neg(self) -> ComplexQuintic {
        ComplexQuintic::new(-&self.re, -&self.im)
    }
}

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

forward_owned_ops!(RealQuintic);
forward_owned_ops!(ComplexQuintic);
pub(crate) use forward_owned_ops;
