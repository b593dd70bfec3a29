//! Partial crossed products `A#H = (A ⊗ H)(1_A ⊗ 1_H)` built from a twisted
//! partial action, with exact subspace arithmetic for membership and corners.

pub mod assoc;
pub mod comodule;
pub mod corner;
pub mod iso;
pub mod product;

pub use assoc::{verify_associativity, AssociativityMode, SampleSpec};
pub use comodule::{coinvariants, ComoduleAlgebra};
pub use corner::global_corner_embedding;
pub use iso::{colinear_check, left_inverse_check, multiplicative_check, unital_check, IsomorphismReport};
pub use product::{build_crossed_product, CrossedProduct};

use hp_algebra::StructuredAlgebra;
use hp_scalars::SparseVec;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CrossedError {
    #[error("normalization fails at {witness:?}; (A⊗H)(1⊗1) is not a projection")]
    NormalizationFailure { witness: Vec<String> },
    #[error("product {left} · {right} leaves the crossed product")]
    ClosureFailure { left: String, right: String },
    #[error("comodule law {law} fails at {witness:?}")]
    LawViolation { law: String, witness: Vec<String> },
}

/// An algebra given by a basis and a way to multiply basis elements, stored
/// or computed on demand.
pub trait BasisAlgebra: Send + Sync {
    fn dim(&self) -> usize;
    fn unit(&self) -> SparseVec;
    fn label(&self, i: usize) -> String;
    fn try_mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, CrossedError>;

    fn try_mul(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, CrossedError> {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out = out.axpy(&(a * b), &self.try_mul_basis(*i, *j)?);
            }
        }
        Ok(out)
    }

    fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.label(i)).collect()
    }
}

impl BasisAlgebra for StructuredAlgebra {
    fn dim(&self) -> usize {
        self.dim
    }

    fn unit(&self) -> SparseVec {
        self.unit.clone()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn try_mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, CrossedError> {
        Ok(self.mul_basis(i, j).clone())
    }

    fn try_mul(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, CrossedError> {
        Ok(self.mul(x, y))
    }
}
