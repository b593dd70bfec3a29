//! Checks on linear maps between algebras: unital, multiplicative, mutually
//! inverse, compatible with coactions.

use hp_algebra::{check_tuples, run_check, tensor_vec, CheckResult, LinMap};
use hp_scalars::SparseVec;
use serde::{Deserialize, Serialize};

use crate::comodule::ComoduleAlgebra;
use crate::BasisAlgebra;

/// A pair of maps `forward: X → Y`, `backward: Y → X` and what was checked about them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub checks: Vec<CheckResult>,
    pub forward: LinMap,
    pub backward: LinMap,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }
}

pub fn unital_check(name: &str, src: &dyn BasisAlgebra, dst: &dyn BasisAlgebra, f: &LinMap) -> CheckResult {
    CheckResult::from_bool(name, f.apply(&src.unit()) == dst.unit(), "f(1) = 1")
}

/// `f(x_i x_j) = f(x_i) f(x_j)` on every pair of basis elements.
pub fn multiplicative_check(name: &str, src: &dyn BasisAlgebra, dst: &dyn BasisAlgebra, f: &LinMap) -> CheckResult {
    let labels = src.labels();
    let cols = f.columns();
    check_tuples(name, &[&labels, &labels], |x| {
        let Ok(p) = src.try_mul_basis(x[0], x[1]) else { return false };
        dst.try_mul(&cols[x[0]], &cols[x[1]]).map_or(false, |q| f.apply(&p) == q)
    })
}

/// `g ∘ f = id` on every basis element of the source of `f`.
pub fn left_inverse_check(name: &str, labels: &[String], f: &LinMap, g: &LinMap) -> CheckResult {
    run_check(name, f.source_dim(), |i, tally| {
        tally.record(g.apply(&f.columns()[i]) == SparseVec::unit(i), || vec![labels[i].clone()]);
    })
}

/// `ρ_Y ∘ f = (f ⊗ id) ∘ ρ_X`.
pub fn colinear_check(name: &str, src: &ComoduleAlgebra, dst: &ComoduleAlgebra, f: &LinMap) -> CheckResult {
    let dh = src.hopf.dim();
    let labels = src.algebra.labels();
    run_check(name, src.dim(), |i, tally| {
        let lhs = dst.apply(&f.columns()[i]);
        let mut rhs = SparseVec::new();
        for (j, c) in src.rho.columns()[i].iter() {
            rhs = rhs.axpy(c, &tensor_vec(&f.columns()[j / dh], &SparseVec::unit(j % dh), dh));
        }
        tally.record(lhs == rhs, || vec![labels[i].clone()]);
    })
}
