//! Right comodule algebras `ρ: B → B ⊗ H` and their coinvariants.

use std::sync::Arc;

use hp_algebra::{check_tuples, tensor_vec, CheckResult, HopfAlgebraData, LinMap};
use hp_scalars::{kernel, ExactMatrix, SparseVec, Subspace};

use crate::product::CrossedProduct;
use crate::{BasisAlgebra, CrossedError};

/// Coaction columns are indexed by the B-basis; rows by `b * dim H + h`.
#[derive(Clone)]
pub struct ComoduleAlgebra {
    pub algebra: Arc<dyn BasisAlgebra>,
    pub hopf: Arc<HopfAlgebraData>,
    pub rho: LinMap,
}

impl std::fmt::Debug for ComoduleAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ComoduleAlgebra").field("dim", &self.algebra.dim()).field("hopf", &self.hopf.dim()).finish()
    }
}

impl ComoduleAlgebra {
    pub fn new(algebra: Arc<dyn BasisAlgebra>, hopf: Arc<HopfAlgebraData>, rho: LinMap) -> Self {
        assert_eq!(rho.sources, [algebra.dim()]);
        assert_eq!(rho.target, algebra.dim() * hopf.dim());
        ComoduleAlgebra { algebra, hopf, rho }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.rho.apply(x)
    }

    /// Product in B ⊗ H.
    fn tensor_mul(&self, x: &SparseVec, y: &SparseVec) -> Option<SparseVec> {
        let dh = self.hopf.dim();
        let mut out = SparseVec::new();
        for (i, c) in x.iter() {
            for (j, d) in y.iter() {
                let b = self.algebra.try_mul_basis(i / dh, j / dh).ok()?;
                out = out.axpy(&(c * d), &tensor_vec(&b, self.hopf.mul_basis(i % dh, j % dh), dh));
            }
        }
        Some(out)
    }

    pub fn verify(&self) -> Vec<CheckResult> {
        let dh = self.hopf.dim();
        let h = &self.hopf;
        let labels = self.algebra.labels();
        let counit = check_tuples("coaction-counital", &[&labels], |x| {
            let mut v = SparseVec::new();
            for (i, c) in self.rho.columns()[x[0]].iter() {
                v = v.axpy(&(c * h.counit(i % dh)), &SparseVec::unit(i / dh));
            }
            v == SparseVec::unit(x[0])
        });
        let coassoc = check_tuples("coaction-coassociative", &[&labels], |x| {
            let r = &self.rho.columns()[x[0]];
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (i, c) in r.iter() {
                let (b, k) = (i / dh, i % dh);
                left = left.axpy(c, &tensor_vec(&self.rho.columns()[b], &SparseVec::unit(k), dh));
                for (k1, k2, d) in h.delta(k) {
                    right = right.axpy(&(c * d), &SparseVec::unit((b * dh + k1) * dh + k2));
                }
            }
            left == right
        });
        let unit = self.algebra.unit();
        let unital = CheckResult::from_bool(
            "coaction-unital",
            self.apply(&unit) == tensor_vec(&unit, h.one(), dh),
            "ρ(1) = 1 ⊗ 1",
        );
        let mult = check_tuples("coaction-multiplicative", &[&labels, &labels], |x| {
            let Ok(p) = self.algebra.try_mul_basis(x[0], x[1]) else { return false };
            let lhs = self.apply(&p);
            self.tensor_mul(&self.rho.columns()[x[0]], &self.rho.columns()[x[1]]) == Some(lhs)
        });
        vec![counit, coassoc, unital, mult]
    }

    pub fn check(&self) -> Result<(), CrossedError> {
        match self.verify().into_iter().find(|c| !c.passed()) {
            Some(c) => Err(CrossedError::LawViolation { law: c.name, witness: c.witness.unwrap_or_default() }),
            None => Ok(()),
        }
    }
}

/// `B^{coH}` as the kernel of `b ↦ ρ(b) − b ⊗ 1_H`, with checks that it is a
/// unital subalgebra.
pub fn coinvariants(ca: &ComoduleAlgebra) -> (Subspace, Vec<CheckResult>) {
    let dh = ca.hopf.dim();
    let d = ca.dim();
    let cols = (0..d)
        .map(|b| ca.rho.columns()[b].sub(&tensor_vec(&SparseVec::unit(b), ca.hopf.one(), dh)))
        .collect();
    let m = ExactMatrix::from_columns(d * dh, cols);
    let sub = Subspace::span(d, kernel(&m));
    let unit = ca.algebra.unit();
    let mut checks = vec![CheckResult::from_bool("coinvariants-unital", sub.contains(&unit), "1 ∈ B^coH")];
    let basis = sub.basis().to_vec();
    let names: Vec<String> = (0..basis.len()).map(|k| format!("c{k}")).collect();
    checks.push(check_tuples("coinvariants-closed", &[&names, &names], |x| {
        ca.algebra.try_mul(&basis[x[0]], &basis[x[1]]).map_or(false, |p| sub.contains(&p))
    }));
    (sub, checks)
}

impl CrossedProduct {
    /// `ρ(a#h) = Σ (a#h_(1)) ⊗ h_(2)`.
    pub fn comodule_structure(self: &Arc<Self>) -> ComoduleAlgebra {
        let dh = self.dim_h();
        let h = self.tpa.hopf.clone();
        let d = self.rank();
        let rho = LinMap::from_fn(vec![d], d * dh, |x| {
            let v = self.embed(&SparseVec::unit(x[0]));
            let mut parts: std::collections::BTreeMap<usize, SparseVec> = Default::default();
            for (i, c) in v.iter() {
                let (a, k) = (i / dh, i % dh);
                for (k1, k2, e) in h.delta(k) {
                    let slot = parts.entry(*k2).or_default();
                    *slot = slot.axpy(&(c * e), &SparseVec::unit(a * dh + k1));
                }
            }
            let mut out = SparseVec::new();
            for (k2, amb) in parts {
                let coords = self.coords(&amb).expect("(I ⊗ Δ) maps A#H into A#H ⊗ H");
                out = out.add(&tensor_vec(&coords, &SparseVec::unit(k2), dh));
            }
            out
        });
        ComoduleAlgebra::new(self.clone(), h, rho)
    }

    /// `A → A#H`, `a ↦ a#1_H`, as a subspace of A#H.
    pub fn coefficient_subspace(&self) -> Subspace {
        let one = self.tpa.hopf.one().clone();
        Subspace::span(self.rank(), (0..self.dim_a()).map(|a| self.sharp(&SparseVec::unit(a), &one)))
    }
}
