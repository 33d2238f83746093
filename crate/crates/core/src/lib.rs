//! Discrete Fourier transform operator family, its reflection-symmetrized
//! block form, and the closed-form spectrum of the five-point number
//! operator.
//!
//! Two scalar backends share one generic code path: [`ExactScalar`] (exact
//! algebraic numbers, five-point constants only) and
//! [`num_complex::Complex64`].

pub mod cli;
pub mod eigensolver;
pub mod error;
pub mod field;
pub mod matrix;
pub mod operators;
pub mod report;
pub mod scalar;
pub mod spectrum5;
pub mod suites;
pub mod symmetrize;

pub use error::{Error, Result};
pub use field::{ComplexQuintic, ExactScalar, RealQuintic};
pub use matrix::DenseMatrix;
pub use scalar::Scalar;

pub type ExactMatrix = DenseMatrix<ExactScalar>;
pub type FloatMatrix = DenseMatrix<num_complex::Complex64>;
