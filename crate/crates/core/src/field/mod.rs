//! Exact scalars for the five-point transform: rationals, the real field
//! `K = Q(√5, s₁)`, its complex extension `K(i)` and the further extension
//! by `√2`.

pub mod constants;
pub mod quintic;
pub mod rational;
pub mod surd;

pub use constants::{
    constant, cosine, field_identities, root_of_unity, sine, ConstantKind, IdentityCheck,
    NamedConstant, QuinticConstants,
};
pub use quintic::{ComplexQuintic, RealQuintic};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use surd::ExactScalar;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    /// Unary; `y` is ignored.
    Neg,
    /// Unary; `y` is ignored.
    Conj,
}

pub fn field_arith(op: FieldOp, x: &ComplexQuintic, y: &ComplexQuintic) -> ComplexQuintic {
    match op {
        FieldOp::Add => x + y,
        FieldOp::Sub => x - y,
        FieldOp::Mul => x * y,
        FieldOp::Neg => -x,
        FieldOp::Conj => x.conj(),
    }
}

pub fn field_invert(x: &ComplexQuintic) -> Result<ComplexQuintic> {
    x.inv()
}
