//! Exact scalar arithmetic in cyclotomic fields Q(ζ_N) and exact sparse
//! linear algebra over them. No tolerances anywhere: equality is comparison of
//! canonical forms.

pub mod cyclotomic;
pub mod matrix;
pub mod rational;
pub mod sparse;

pub use cyclotomic::{cyclotomic_poly, euler_phi, CyclotomicScalar, Scalar};
pub use matrix::{inverse, kernel, rank, solve_linear, Echelon, ExactMatrix, Solution, Subspace};
pub use rational::Rational;
pub use sparse::SparseVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Binary field operation selector for [`scalar_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with order promotion to the lcm.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}
