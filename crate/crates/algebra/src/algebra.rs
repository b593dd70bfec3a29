//! Unital associative algebras given by structure constants.

use hp_scalars::{Scalar, SparseVec};
use serde::{Deserialize, Serialize};

use crate::report::{check_tuples, CheckResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredAlgebra {
    pub dim: usize,
    /// `mult[i * dim + j]` is the product `e_i e_j`.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub labels: Vec<String>,
}

impl StructuredAlgebra {
    pub fn from_fn(labels: Vec<String>, unit: SparseVec, f: impl Fn(usize, usize) -> SparseVec) -> Self {
        let dim = labels.len();
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                mult.push(f(i, j));
            }
        }
        StructuredAlgebra { dim, mult, unit, labels }
    }

    /// From a full product table, `mult[i * dim + j] = e_i e_j`.
    pub fn from_table(labels: Vec<String>, unit: SparseVec, mult: Vec<SparseVec>) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim * dim);
        StructuredAlgebra { dim, mult, unit, labels }
    }

    /// Commutative algebra of functions on a finite set: orthogonal idempotents.
    pub fn diagonal(labels: Vec<String>) -> Self {
        let n = labels.len();
        let unit = SparseVec::from_terms((0..n).map(|i| (i, Scalar::one())).collect());
        StructuredAlgebra::from_fn(labels, unit, |i, j| if i == j { SparseVec::unit(i) } else { SparseVec::new() })
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        if x.is_zero() || y.is_zero() {
            return SparseVec::new();
        }
        let mut terms = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let p = self.mul_basis(*i, *j);
                if p.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in p.iter() {
                    terms.push((*k, &ab * c));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn mul3(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        self.mul(&self.mul(x, y), z)
    }

    pub fn one(&self) -> &SparseVec {
        &self.unit
    }

    pub fn commutes(&self, x: &SparseVec, y: &SparseVec) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_central(&self, x: &SparseVec) -> bool {
        (0..self.dim).all(|i| {
            let e = SparseVec::unit(i);
            self.commutes(x, &e)
        })
    }

    pub fn is_idempotent(&self, x: &SparseVec) -> bool {
        &self.mul(x, x) == x
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn validate(&self) -> Vec<CheckResult> {
        let l = &self.labels;
        let assoc = check_tuples("associativity", &[l, l, l], |t| {
            let ij = self.mul_basis(t[0], t[1]);
            let jk = self.mul_basis(t[1], t[2]);
            self.mul(ij, &SparseVec::unit(t[2])) == self.mul(&SparseVec::unit(t[0]), jk)
        });
        let unit = check_tuples("unit", &[l], |t| {
            let e = SparseVec::unit(t[0]);
            self.mul(&self.unit, &e) == e && self.mul(&e, &self.unit) == e
        });
        vec![assoc, unit]
    }

    /// Tensor product algebra with basis `(i, j) ↦ i * other.dim + j`.
    pub fn tensor(&self, other: &StructuredAlgebra) -> StructuredAlgebra {
        let d2 = other.dim;
        let labels = tensor_labels(&self.labels, &other.labels);
        let unit = tensor_vec(&self.unit, &other.unit, d2);
        StructuredAlgebra::from_fn(labels, unit, |x, y| {
            tensor_vec(self.mul_basis(x / d2, y / d2), other.mul_basis(x % d2, y % d2), d2)
        })
    }
}

pub fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()
}

/// `x ⊗ y` with the second factor of dimension `d2`.
pub fn tensor_vec(x: &SparseVec, y: &SparseVec, d2: usize) -> SparseVec {
    let mut terms = Vec::with_capacity(x.nnz() * y.nnz());
    for (i, a) in x.iter() {
        for (j, b) in y.iter() {
            terms.push((i * d2 + j, a * b));
        }
    }
    SparseVec::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_algebra_validates() {
        let a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into(), "z".into()]);
        assert!(a.validate().iter().all(|c| c.passed()));
        assert!(a.is_commutative());
        assert!(a.is_idempotent(&SparseVec::unit(1)));
    }

    #[test]
    fn broken_unit_is_reported() {
        let mut a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into()]);
        a.unit = SparseVec::unit(0);
        let r = a.validate();
        assert!(r[0].passed());
        assert!(!r[1].passed());
        assert_eq!(r[1].witness, Some(vec!["y".to_string()]));
    }
}
