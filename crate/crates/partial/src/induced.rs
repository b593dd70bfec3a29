//! Global twisted actions and the partial actions they induce on a corner
//! `A = idem·B`.

use std::sync::Arc;

use hp_algebra::{check_tuples, convolution_unit, inverse_in_ideal, CheckResult, HopfAlgebraData, LinMap, StructuredAlgebra};
use hp_scalars::{SparseVec, Subspace};

use crate::action::{PartialAction, TwistedPartialAction};
use crate::PartialError;

/// A twisted (global) action `▷` of H on B with cocycle `u: H ⊗ H → B`.
#[derive(Clone, Debug)]
pub struct GlobalTwistedAction {
    pub hopf: Arc<HopfAlgebraData>,
    pub carrier: Arc<StructuredAlgebra>,
    pub action: LinMap,
    pub cocycle: LinMap,
}

impl GlobalTwistedAction {
    pub fn new(
        hopf: Arc<HopfAlgebraData>,
        carrier: Arc<StructuredAlgebra>,
        action: LinMap,
        cocycle: LinMap,
    ) -> Result<Self, PartialError> {
        let (dh, db) = (hopf.dim(), carrier.dim);
        if action.sources != [dh, db] || action.target != db || cocycle.sources != [dh, dh] || cocycle.target != db {
            return Err(PartialError::Shape("global action or cocycle has the wrong shape".into()));
        }
        Ok(GlobalTwistedAction { hopf, carrier, action, cocycle })
    }

    #[inline]
    pub fn act(&self, h: usize, b: usize) -> &SparseVec {
        &self.action.columns()[h * self.carrier.dim + b]
    }

    pub fn act_on(&self, h: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (b, c) in v.iter() {
            out = out.axpy(c, self.act(h, *b));
        }
        out
    }

    pub fn act_hv(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in x.iter() {
            out = out.axpy(c, &self.act_on(*h, v));
        }
        out
    }

    #[inline]
    pub fn u(&self, h: usize, k: usize) -> &SparseVec {
        &self.cocycle.columns()[h * self.hopf.dim() + k]
    }

    pub fn u_hv(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in x.iter() {
            for (k, d) in y.iter() {
                out = out.axpy(&(c * d), self.u(*h, *k));
            }
        }
        out
    }

    /// The module-algebra and twisting laws of a global twisted action.
    pub fn verify_laws(&self) -> Vec<CheckResult> {
        let (lh, lb) = (self.hopf.labels(), &self.carrier.labels[..]);
        let h = &self.hopf;
        let b = &self.carrier;
        let one = h.one();
        let mult = check_tuples("global-action-multiplicative", &[lh, lb, lb], |x| {
            let lhs = self.act_on(x[0], b.mul_basis(x[1], x[2]));
            let mut rhs = SparseVec::new();
            for (h1, h2, c) in h.delta(x[0]) {
                rhs = rhs.axpy(c, &b.mul(self.act(*h1, x[1]), self.act(*h2, x[2])));
            }
            lhs == rhs
        });
        let unital = check_tuples("global-action-unital", &[lh], |x| {
            self.act_on(x[0], &b.unit) == b.unit.scale(h.counit(x[0]))
        });
        let unit = check_tuples("global-unit-action", &[lb], |x| {
            self.act_hv(one, &SparseVec::unit(x[0])) == SparseVec::unit(x[0])
        });
        let twist = check_tuples("global-twisting", &[lh, lh, lb], |x| {
            let a = SparseVec::unit(x[2]);
            let mut lhs = SparseVec::new();
            let mut rhs = SparseVec::new();
            for (p1, p2, c) in h.delta(x[0]) {
                for (q1, q2, d) in h.delta(x[1]) {
                    let cd = c * d;
                    lhs = lhs.axpy(&cd, &b.mul(&self.act_on(*p1, self.act(*q1, x[2])), self.u(*p2, *q2)));
                    rhs = rhs.axpy(&cd, &b.mul(self.u(*p1, *q1), &self.act_hv(h.mul_basis(*p2, *q2), &a)));
                }
            }
            lhs == rhs
        });
        vec![mult, unital, unit, twist]
    }

    /// Normalized-cocycle laws for `u`.
    pub fn cocycle_checks(&self) -> Vec<CheckResult> {
        let lh = self.hopf.labels();
        let h = &self.hopf;
        let b = &self.carrier;
        let one = h.one();
        let unit = |i: usize| SparseVec::unit(i);
        let law = check_tuples("global-cocycle-law", &[lh, lh, lh], |x| {
            let mut lhs = SparseVec::new();
            let mut rhs = SparseVec::new();
            for (p1, p2, c) in h.delta(x[0]) {
                for (q1, q2, d) in h.delta(x[1]) {
                    let cd = c * d;
                    for (r1, r2, e) in h.delta(x[2]) {
                        let w = self.act_on(*p1, self.u(*q1, *r1));
                        lhs = lhs.axpy(&(&cd * e), &b.mul(&w, &self.u_hv(&unit(*p2), h.mul_basis(*q2, *r2))));
                    }
                    rhs = rhs.axpy(&cd, &b.mul(self.u(*p1, *q1), &self.u_hv(h.mul_basis(*p2, *q2), &unit(x[2]))));
                }
            }
            lhs == rhs
        });
        let norm = check_tuples("global-cocycle-normalized", &[lh], |x| {
            let want = b.unit.scale(h.counit(x[0]));
            self.u_hv(&unit(x[0]), one) == want && self.u_hv(one, &unit(x[0])) == want
        });
        vec![law, norm]
    }

    /// The global action read as a twisted partial action on B itself.
    pub fn as_twisted(&self) -> Result<TwistedPartialAction, PartialError> {
        let pa = PartialAction::new(self.hopf.clone(), self.carrier.clone(), self.action.clone())?;
        TwistedPartialAction::new(pa, self.cocycle.clone())
    }

    /// The convolution inverse of `u` in Hom(H ⊗ H, B).
    pub fn inverse_cocycle(&self) -> Result<LinMap, PartialError> {
        let hh = self.hopf.coalgebra.tensor(&self.hopf.coalgebra);
        let one = convolution_unit(&hh, &self.carrier);
        let inv = inverse_in_ideal(&hh, &self.carrier, self.cocycle.columns(), &one, &one)?;
        let dh = self.hopf.dim();
        Ok(LinMap::from_columns(vec![dh, dh], self.carrier.dim, inv))
    }
}

/// The induced action together with the embedding `A ⊂ B`.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub tpa: TwistedPartialAction,
    pub subspace: Subspace,
    pub idem: SparseVec,
}

impl InducedAction {
    pub fn embed(&self, a: &SparseVec) -> SparseVec {
        self.subspace.embed(a)
    }

    pub fn coords(&self, b: &SparseVec) -> Option<SparseVec> {
        self.subspace.coords(b)
    }

    /// `ω′(h, k) = Σ (h_(1)k_(1)·1) u⁻¹(h_(2), k_(2)) (h_(3)·1)` for a given `u⁻¹`.
    pub fn inverse_from_global(&self, global: &GlobalTwistedAction, u_inv: &LinMap) -> LinMap {
        let t = &self.tpa;
        let h = &t.hopf;
        let dh = h.dim();
        let legs3 = h.legs(3);
        let b = &global.carrier;
        let unit_b = |x: &SparseVec| self.embed(&t.unit_action_vec(x));
        LinMap::from_fn(vec![dh, dh], t.dim_a(), |x| {
            let mut acc = SparseVec::new();
            for (p, c) in &legs3[x[0]] {
                for (q1, q2, d) in h.delta(x[1]) {
                    let first = unit_b(h.mul_basis(p[0], *q1));
                    let mid = &u_inv.columns()[p[1] * dh + q2];
                    let last = unit_b(&SparseVec::unit(p[2]));
                    acc = acc.axpy(&(c * d), &b.mul3(&first, mid, &last));
                }
            }
            self.coords(&acc).expect("inverse cocycle lies in the corner")
        })
    }
}

fn sub_labels(parent: &[String], sub: &Subspace) -> Vec<String> {
    if sub.is_coordinate() {
        sub.pivots().iter().map(|p| parent[*p].clone()).collect()
    } else {
        (0..sub.dim()).map(|k| format!("a{k}")).collect()
    }
}

/// The subalgebra `x·B` for a central idempotent `x`, with unit `x`.
pub fn corner_algebra(b: &StructuredAlgebra, idem: &SparseVec) -> Result<(StructuredAlgebra, Subspace), PartialError> {
    if !b.is_idempotent(idem) || !b.is_central(idem) {
        return Err(PartialError::NotCentralIdempotent);
    }
    let sub = Subspace::span(b.dim, (0..b.dim).map(|i| b.mul(idem, &SparseVec::unit(i))));
    let basis = sub.basis().to_vec();
    let labels = sub_labels(&b.labels, &sub);
    let unit = sub.coords(idem).ok_or(PartialError::NotCentralIdempotent)?;
    let alg = StructuredAlgebra::from_fn(labels, unit, |i, j| {
        sub.coords(&b.mul(&basis[i], &basis[j])).expect("corner is closed under products")
    });
    Ok((alg, sub))
}

/// `h·a = idem(h▷a)` and `ω(h,k) = Σ (h_(1)·1) u(h_(2),k_(1)) (h_(3)k_(2)·1)` on `A = idem·B`.
pub fn induce_partial(global: &GlobalTwistedAction, idem: &SparseVec) -> Result<InducedAction, PartialError> {
    for c in global.verify_laws() {
        if !c.passed() {
            return Err(PartialError::GlobalLawViolation { law: c.name, witness: c.witness.unwrap_or_default() });
        }
    }
    let b = &global.carrier;
    let (alg, sub) = corner_algebra(b, idem)?;
    let carrier = Arc::new(alg);
    let h = global.hopf.clone();
    let pa = PartialAction::from_fn(h.clone(), carrier.clone(), |x, a| {
        let v = b.mul(idem, &global.act_on(x, &sub.basis()[a]));
        sub.coords(&v).expect("idem·B is closed")
    })?;
    let legs3 = h.legs(3);
    let unit_b = |x: &SparseVec| sub.embed(&pa.unit_action_vec(x));
    let dh = h.dim();
    let omega = LinMap::from_fn(vec![dh, dh], carrier.dim, |x| {
        let mut acc = SparseVec::new();
        for (p, c) in &legs3[x[0]] {
            for (q1, q2, d) in h.delta(x[1]) {
                let first = unit_b(&SparseVec::unit(p[0]));
                let last = unit_b(h.mul_basis(p[2], *q2));
                acc = acc.axpy(&(c * d), &b.mul3(&first, global.u(p[1], *q1), &last));
            }
        }
        sub.coords(&acc).expect("ω lies in the corner")
    });
    let tpa = TwistedPartialAction::new(pa, omega)?;
    Ok(InducedAction { tpa, subspace: sub, idem: idem.clone() })
}
