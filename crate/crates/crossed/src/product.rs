//! The crossed product as the image of right multiplication by `1_A ⊗ 1_H`.

use hp_algebra::{check_tuples, run_check, tensor_vec, CheckResult, LinMap};
use hp_partial::{normalization_check, TwistedPartialAction};
use hp_scalars::{SparseVec, Subspace};

use crate::{BasisAlgebra, CrossedError};

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub tpa: TwistedPartialAction,
    /// `π(a ⊗ h) = (a ⊗ h)(1_A ⊗ 1_H)` on the ambient basis `a * dim H + h`.
    pub projector: LinMap,
    pub basis: Subspace,
    labels: Vec<String>,
    unit: SparseVec,
}

/// `(a⊗h)(b⊗l) = Σ a(h_(1)·b) ω(h_(2), l_(1)) ⊗ h_(3)l_(2)` on ambient basis elements.
pub fn ambient_mul_basis(t: &TwistedPartialAction, a: usize, h: usize, b: usize, l: usize) -> SparseVec {
    let hopf = &t.hopf;
    let dh = hopf.dim();
    let legs3 = hopf.legs(3);
    let ea = SparseVec::unit(a);
    let mut out = SparseVec::new();
    for (p, c) in &legs3[h] {
        let left = t.amul(&ea, t.act(p[0], b));
        if left.is_zero() {
            continue;
        }
        for (q1, q2, d) in hopf.delta(l) {
            let av = t.amul(&left, t.omega(p[1], *q1));
            if av.is_zero() {
                continue;
            }
            out = out.axpy(&(c * d), &tensor_vec(&av, hopf.mul_basis(p[2], *q2), dh));
        }
    }
    out
}

/// Bilinear extension of [`ambient_mul_basis`] to A ⊗ H.
pub fn ambient_mul(t: &TwistedPartialAction, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let dh = t.dim_h();
    let mut out = SparseVec::new();
    for (i, c) in x.iter() {
        for (j, d) in y.iter() {
            out = out.axpy(&(c * d), &ambient_mul_basis(t, i / dh, i % dh, j / dh, j % dh));
        }
    }
    out
}

pub fn projector(t: &TwistedPartialAction) -> LinMap {
    let (da, dh) = (t.dim_a(), t.dim_h());
    let one = tensor_vec(&t.carrier.unit, t.hopf.one(), dh);
    LinMap::from_fn(vec![da, dh], da * dh, |x| ambient_mul(t, &SparseVec::unit(x[0] * dh + x[1]), &one))
}

/// `π ∘ π = π` on every ambient basis element.
pub fn projector_idempotent(t: &TwistedPartialAction, pi: &LinMap) -> CheckResult {
    check_tuples("projector-idempotent", &[t.a_labels(), t.h_labels()], |x| {
        let col = pi.at(x);
        &pi.apply(col) == col
    })
}

/// Builds `A#H`; fails when normalization fails or `π` is not a projection.
pub fn build_crossed_product(t: &TwistedPartialAction) -> Result<CrossedProduct, CrossedError> {
    let norm = normalization_check(t);
    if !norm.passed() {
        return Err(CrossedError::NormalizationFailure { witness: norm.witness.unwrap_or_default() });
    }
    let pi = projector(t);
    let idem = projector_idempotent(t, &pi);
    if !idem.passed() {
        return Err(CrossedError::NormalizationFailure { witness: idem.witness.unwrap_or_default() });
    }
    let basis = Subspace::span(pi.target, pi.columns().iter().cloned());
    let dh = t.dim_h();
    let labels = if basis.is_coordinate() {
        basis.pivots().iter().map(|p| format!("{}#{}", t.a_labels()[p / dh], t.h_labels()[p % dh])).collect()
    } else {
        (0..basis.dim()).map(|k| format!("x{k}")).collect()
    };
    let one = tensor_vec(&t.carrier.unit, t.hopf.one(), dh);
    let unit = basis.coords(&pi.apply(&one)).ok_or(CrossedError::ClosureFailure {
        left: "1#1".into(),
        right: "1#1".into(),
    })?;
    Ok(CrossedProduct { tpa: t.clone(), projector: pi, basis, labels, unit })
}

impl CrossedProduct {
    pub fn dim_a(&self) -> usize {
        self.tpa.dim_a()
    }

    pub fn dim_h(&self) -> usize {
        self.tpa.dim_h()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_a() * self.dim_h()
    }

    /// Rank of π.
    pub fn rank(&self) -> usize {
        self.basis.dim()
    }

    pub fn embed(&self, x: &SparseVec) -> SparseVec {
        self.basis.embed(x)
    }

    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        self.basis.coords(v)
    }

    /// `a#h` in crossed-product coordinates.
    pub fn sharp(&self, a: &SparseVec, h: &SparseVec) -> SparseVec {
        let v = self.projector.apply(&tensor_vec(a, h, self.dim_h()));
        self.coords(&v).expect("the image of π spans the crossed product")
    }

    pub fn sharp_basis(&self, a: usize, h: usize) -> SparseVec {
        self.coords(self.projector.at(&[a, h])).expect("the image of π spans the crossed product")
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, CrossedError> {
        let p = ambient_mul(&self.tpa, &self.embed(x), &self.embed(y));
        self.coords(&p).ok_or_else(|| CrossedError::ClosureFailure { left: describe(self, x), right: describe(self, y) })
    }

    /// Every product `x_i x_j` of basis elements, in canonical order.
    pub fn multiplication_table(&self) -> Result<Vec<(usize, usize, SparseVec)>, CrossedError> {
        let d = self.rank();
        let mut out = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                out.push((i, j, self.try_mul_basis(i, j)?));
            }
        }
        Ok(out)
    }

    /// Unit, closure, and the two product formulas. `full_formula` runs the
    /// product formula over every `a`; otherwise `a = 1_A`.
    pub fn verify_structure(&self, full_formula: bool) -> Vec<CheckResult> {
        let t = &self.tpa;
        let d = self.rank();
        let dh = self.dim_h();
        let mut out = vec![projector_idempotent(t, &self.projector)];
        out.push(CheckResult::from_bool(
            "rank-bound",
            d <= self.ambient_dim() && ((d == self.ambient_dim()) == self.projector_is_identity()),
            format!("rank {d} of {}", self.ambient_dim()),
        ));
        let labels = &self.labels;
        out.push(check_tuples("unit", &[labels], |x| {
            let e = SparseVec::unit(x[0]);
            self.mul(&e, &self.unit).ok() == Some(e.clone()) && self.mul(&self.unit, &e).ok() == Some(e)
        }));
        out.push(check_tuples("closure", &[labels, labels], |x| self.try_mul_basis(x[0], x[1]).is_ok()));
        let hopf = &t.hopf;
        out.push(check_tuples("sharp-formula", &[t.a_labels(), t.h_labels()], |x| {
            let mut want = SparseVec::new();
            let ea = SparseVec::unit(x[0]);
            for (h1, h2, c) in hopf.delta(x[1]) {
                want = want.axpy(c, &tensor_vec(&t.amul(&ea, t.unit_action(*h1)), &SparseVec::unit(*h2), dh));
            }
            self.projector.at(x) == &want
        }));
        let la = t.a_labels();
        let lh = t.h_labels();
        let one_a = t.carrier.unit.clone();
        let formula = |a: &SparseVec, h: usize, b: usize, k: usize| {
            let x = self.projector.apply(&tensor_vec(a, &SparseVec::unit(h), dh));
            let y = self.projector.at(&[b, k]);
            let lhs = ambient_mul(t, &x, y);
            let mut rhs = SparseVec::new();
            for (ai, c) in a.iter() {
                rhs = rhs.axpy(c, &ambient_mul_basis(t, *ai, h, b, k));
            }
            lhs == self.projector.apply(&rhs)
        };
        if full_formula {
            out.push(check_tuples("product-formula", &[la, lh, la, lh], |x| {
                formula(&SparseVec::unit(x[0]), x[1], x[2], x[3])
            }));
        } else {
            out.push(run_check("product-formula", lh.len(), |h, tally| {
                for b in 0..la.len() {
                    for k in 0..lh.len() {
                        let ok = formula(&one_a, h, b, k);
                        tally.record(ok, || vec!["1".into(), lh[h].clone(), la[b].clone(), lh[k].clone()]);
                    }
                }
            }));
        }
        out
    }

    fn projector_is_identity(&self) -> bool {
        self.projector.columns().iter().enumerate().all(|(i, c)| c == &SparseVec::unit(i))
    }
}

fn describe(cp: &CrossedProduct, x: &SparseVec) -> String {
    match x.entries() {
        [(i, c)] if c.is_one() => cp.labels[*i].clone(),
        _ => format!("{:?}", x.entries().iter().map(|(i, _)| cp.labels[*i].clone()).collect::<Vec<_>>()),
    }
}

impl BasisAlgebra for CrossedProduct {
    fn dim(&self) -> usize {
        self.rank()
    }

    fn unit(&self) -> SparseVec {
        self.unit.clone()
    }

    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }

    fn try_mul_basis(&self, i: usize, j: usize) -> Result<SparseVec, CrossedError> {
        self.mul(&SparseVec::unit(i), &SparseVec::unit(j))
    }

    fn try_mul(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec, CrossedError> {
        self.mul(x, y)
    }

    fn labels(&self) -> Vec<String> {
        self.labels.clone()
    }
}
