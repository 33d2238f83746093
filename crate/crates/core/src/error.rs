use thiserror::Error;

/// Errors raised by operator construction, exact arithmetic and the eigensolver.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operator `{kind}` is not available on the exact backend for n = {n}")]
    UnsupportedBackend { kind: String, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("value is not a perfect square in the field")]
    NotASquare,
    #[error("unsupported matrix size {0}")]
    UnsupportedSize(usize),
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NonHermitian { deviation: f64 },
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {offdiag:e})"
    )]
    NoConvergence { sweeps: usize, offdiag: f64 },
    #[error("vector is not an eigenvector of the DFT with phase i^k")]
    NoPhaseFound,
    #[error("exact backend requires zero tolerance, got {0}")]
    NonZeroTolerance(f64),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
