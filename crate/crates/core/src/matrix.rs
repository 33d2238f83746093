use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Square row-major matrix over a [`Scalar`]. The dimension is fixed at
/// construction.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, d) in diag.into_iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.n).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_c64(&self) -> DenseMatrix<Complex64> {
        self.map(S::to_c64)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn trace(&self) -> S {
        (0..self.n).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.n, "matrix-vector dimension mismatch");
        self.rows()
            .map(|row| {
                row.iter().zip(v).fold(S::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b.clone()
                    }
                })
            })
            .collect()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let acc = std::mem::replace(&mut out[(i, j)], S::zero());
                    out[(i, j)] = acc + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Largest entry magnitude, `max |a_ij|`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(S::abs_f64).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data
            .iter()
            .map(|x| x.to_c64().norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// All entries are exactly zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Square submatrix on the index range `start..start + size`.
    pub fn block(&self, start: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self[(start + i, start + j)].clone())
    }

    /// `max |a_ij − conj(a_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let d = self[(i, j)].to_c64() - self[(j, i)].to_c64().conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    /// Determinant by Gaussian elimination (first nonzero pivot for exact
    /// scalars, largest pivot otherwise).
    pub fn determinant(&self) -> S {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = S::one();
        for col in 0..n {
            let pivot = if S::EXACT {
                (col..n).find(|&r| !a[r * n + col].is_zero())
            } else {
                (col..n)
                    .filter(|&r| !a[r * n + col].is_zero())
                    .max_by(|&x, &y| {
                        a[x * n + col]
                            .abs_f64()
                            .total_cmp(&a[y * n + col].abs_f64())
                    })
            };
            let Some(p) = pivot else {
                return S::zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let piv = a[col * n + col].clone();
            det = det * piv.clone();
            let Some(pinv) = piv.inv() else {
                return S::zero();
            };
            for r in col + 1..n {
                let factor = a[r * n + col].clone() * pinv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = factor.clone() * a[col * n + j].clone();
                    let cur = std::mem::replace(&mut a[r * n + j], S::zero());
                    a[r * n + j] = cur - sub;
                }
            }
        }
        det
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

impl<S: Scalar> Mul for &DenseMatrix<S> {
    type Output = DenseMatrix<S>;
    fn mul(self, o: &DenseMatrix<S>) -> DenseMatrix<S> {
        self.try_mul(o).expect("matrix product dimension mismatch")
    }
}

impl<S: Scalar> Add for &DenseMatrix<S> {
    type Output = DenseMatrix<S>;
    fn add(self, o: &DenseMatrix<S>) -> DenseMatrix<S> {
        assert_eq!(self.n, o.n, "matrix sum dimension mismatch");
        DenseMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Sub for &DenseMatrix<S> {
    type Output = DenseMatrix<S>;
    fn sub(self, o: &DenseMatrix<S>) -> DenseMatrix<S> {
        assert_eq!(self.n, o.n, "matrix difference dimension mismatch");
        DenseMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<S: Scalar> Neg for &DenseMatrix<S> {
    type Output = DenseMatrix<S>;
    fn neg(self) -> DenseMatrix<S> {
        self.map(|x| -x.clone())
    }
}

/// Euclidean inner product `Σ conj(a_k) b_k`.
pub fn inner<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.conj() * y.clone())
}

pub fn scale_vec<S: Scalar>(v: &[S], s: &S) -> Vec<S> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn max_abs_vec<S: Scalar>(v: &[S]) -> f64 {
    v.iter().map(S::abs_f64).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ExactScalar;

    fn m(rows: &[&[i64]]) -> DenseMatrix<ExactScalar> {
        DenseMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactScalar::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn product_and_trace() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.trace(), ExactScalar::from_int(5));
    }

    #[test]
    fn determinant_exact_and_float() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(a.determinant(), ExactScalar::from_int(6));
        let f = a.to_c64();
        assert!((f.determinant().re - 6.0).abs() < 1e-12);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), ExactScalar::zero());
        assert_eq!(
            m(&[&[0, 1], &[1, 0]]).determinant(),
            ExactScalar::from_int(-1)
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![ExactScalar::one()], vec![]];
        assert!(DenseMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn try_mul_dimension_mismatch() {
        let a = DenseMatrix::<Complex64>::identity(2);
        let b = DenseMatrix::<Complex64>::identity(3);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }
}
