//! The coinvariant subalgebra `A = B^{coH}` with a chosen basis.

use std::sync::Arc;

use hp_algebra::{CheckResult, StructuredAlgebra};
use hp_crossed::{coinvariants, BasisAlgebra, ComoduleAlgebra};
use hp_scalars::{inverse, ExactMatrix, Scalar, SparseVec, Subspace};

use crate::CleftError;

/// `basis` lists elements of B (in B-coordinates); `algebra` is A in that basis.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub subspace: Subspace,
    pub basis: Vec<SparseVec>,
    pub algebra: Arc<StructuredAlgebra>,
    pub checks: Vec<CheckResult>,
    /// Echelon coordinates to `basis` coordinates; `None` when `basis` is the echelon basis.
    change: Option<ExactMatrix>,
}

impl Coinvariants {
    /// Kernel of `b ↦ ρ(b) − b ⊗ 1`, in its echelon basis.
    pub fn compute(ext: &ComoduleAlgebra) -> Result<Self, CleftError> {
        let (subspace, checks) = coinvariants(ext);
        let basis = subspace.basis().to_vec();
        Coinvariants::assemble(ext.algebra.as_ref(), subspace, basis, None, checks)
    }

    /// Same subalgebra, described in another basis spanning it.
    pub fn with_basis(&self, b: &dyn BasisAlgebra, basis: Vec<SparseVec>) -> Result<Self, CleftError> {
        let span = Subspace::span(self.subspace.ambient_dim(), basis.iter().cloned());
        if basis.len() != self.subspace.dim() || !span.same_as(&self.subspace) {
            return Err(CleftError::BasisMismatch);
        }
        let cols = basis.iter().map(|v| self.subspace.coords(v).expect("same span")).collect();
        let m = ExactMatrix::from_columns(basis.len(), cols);
        let change = inverse(&m).map_err(|_| CleftError::BasisMismatch)?;
        Coinvariants::assemble(b, self.subspace.clone(), basis, Some(change), self.checks.clone())
    }

    fn assemble(
        b: &dyn BasisAlgebra,
        subspace: Subspace,
        basis: Vec<SparseVec>,
        change: Option<ExactMatrix>,
        checks: Vec<CheckResult>,
    ) -> Result<Self, CleftError> {
        let labels = basis
            .iter()
            .enumerate()
            .map(|(k, v)| match v.iter().next() {
                Some((i, c)) if v.nnz() == 1 && *c == Scalar::one() => b.label(*i),
                _ => format!("c{k}"),
            })
            .collect();
        let mut me = Coinvariants { subspace, basis, algebra: Arc::new(StructuredAlgebra::diagonal(vec![])), checks, change };
        let unit = me.coords(&b.unit()).ok_or(CleftError::CoinvariantsNotSubalgebra)?;
        let n = me.basis.len();
        let mut mult = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let p = b.try_mul(&me.basis[i], &me.basis[j])?;
                mult.push(me.coords(&p).ok_or(CleftError::CoinvariantsNotSubalgebra)?);
            }
        }
        me.algebra = Arc::new(StructuredAlgebra::from_table(labels, unit, mult));
        Ok(me)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an element of B in `basis`, or `None` outside A.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let c = self.subspace.coords(v)?;
        Some(match &self.change {
            Some(m) => m.apply(&c),
            None => c,
        })
    }

    pub fn embed(&self, c: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, x) in c.iter() {
            out = out.axpy(x, &self.basis[*k]);
        }
        out
    }
}
