//! Partial actions, twisted partial actions and the axioms they must satisfy.

use std::sync::Arc;

use hp_algebra::{check_tuples, CheckResult, HopfAlgebraData, LinMap, StructuredAlgebra};
use hp_scalars::SparseVec;
use serde::{Deserialize, Serialize};

use crate::PartialError;

/// A linear map `H ⊗ A → A`, `h ⊗ a ↦ h·a`, not yet known to satisfy anything.
#[derive(Clone, Debug)]
pub struct PartialAction {
    pub hopf: Arc<HopfAlgebraData>,
    pub carrier: Arc<StructuredAlgebra>,
    action: LinMap,
    unit_action: Vec<SparseVec>,
}

impl PartialAction {
    pub fn new(hopf: Arc<HopfAlgebraData>, carrier: Arc<StructuredAlgebra>, action: LinMap) -> Result<Self, PartialError> {
        if action.sources != [hopf.dim(), carrier.dim] || action.target != carrier.dim {
            return Err(PartialError::Shape("action must be H ⊗ A → A".into()));
        }
        let mut pa = PartialAction { hopf, carrier, action, unit_action: Vec::new() };
        pa.unit_action = (0..pa.hopf.dim()).map(|h| pa.act_on(h, &pa.carrier.unit)).collect();
        Ok(pa)
    }

    pub fn from_fn(
        hopf: Arc<HopfAlgebraData>,
        carrier: Arc<StructuredAlgebra>,
        f: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<Self, PartialError> {
        let action = LinMap::from_fn(vec![hopf.dim(), carrier.dim], carrier.dim, |t| f(t[0], t[1]));
        PartialAction::new(hopf, carrier, action)
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn dim_h(&self) -> usize {
        self.hopf.dim()
    }

    pub fn dim_a(&self) -> usize {
        self.carrier.dim
    }

    #[inline]
    pub fn act(&self, h: usize, a: usize) -> &SparseVec {
        &self.action.columns()[h * self.carrier.dim + a]
    }

    pub fn act_on(&self, h: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (a, c) in v.iter() {
            out = out.axpy(c, self.act(h, *a));
        }
        out
    }

    /// `x·v` for arbitrary `x ∈ H`, `v ∈ A`.
    pub fn act_hv(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in x.iter() {
            out = out.axpy(c, &self.act_on(*h, v));
        }
        out
    }

    /// `h·1_A`.
    #[inline]
    pub fn unit_action(&self, h: usize) -> &SparseVec {
        &self.unit_action[h]
    }

    /// `x·1_A` for `x ∈ H`.
    pub fn unit_action_vec(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in x.iter() {
            out = out.axpy(c, &self.unit_action[*h]);
        }
        out
    }

    pub fn amul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.carrier.mul(x, y)
    }

    pub fn h_labels(&self) -> &[String] {
        self.hopf.labels()
    }

    pub fn a_labels(&self) -> &[String] {
        &self.carrier.labels
    }

    /// `1_H·a = a` and `h·(ab) = Σ (h_(1)·a)(h_(2)·b)`.
    pub fn verify(&self) -> Vec<CheckResult> {
        let (lh, la) = (self.h_labels(), self.a_labels());
        let one = self.hopf.one();
        let unit = check_tuples("unit-action", &[la], |t| self.act_hv(one, &SparseVec::unit(t[0])) == SparseVec::unit(t[0]));
        let mult = check_tuples("action-multiplicative", &[lh, la, la], |t| {
            let (h, a, b) = (t[0], t[1], t[2]);
            let lhs = self.act_on(h, self.carrier.mul_basis(a, b));
            let mut rhs = SparseVec::new();
            for (h1, h2, c) in self.hopf.delta(h) {
                rhs = rhs.axpy(c, &self.amul(self.act(*h1, a), self.act(*h2, b)));
            }
            lhs == rhs
        });
        vec![unit, mult]
    }
}

/// A partial action with a cocycle `ω: H ⊗ H → A` and, once computed, its
/// inverse `ω′` in the ideal generated by `f1 ∗ f2`.
#[derive(Clone, Debug)]
pub struct TwistedPartialAction {
    pub partial: PartialAction,
    cocycle: LinMap,
    inverse_cocycle: Option<LinMap>,
}

impl std::ops::Deref for TwistedPartialAction {
    type Target = PartialAction;
    fn deref(&self) -> &PartialAction {
        &self.partial
    }
}

/// The outcome of [`classify_cocycle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CocycleKind {
    Trivial,
    NormalizedCocycle,
    General,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub kind: CocycleKind,
    pub trivial: bool,
    pub normalized_cocycle: bool,
    pub checks: Vec<CheckResult>,
}

impl TwistedPartialAction {
    pub fn new(partial: PartialAction, cocycle: LinMap) -> Result<Self, PartialError> {
        let (dh, da) = (partial.dim_h(), partial.dim_a());
        if cocycle.sources != [dh, dh] || cocycle.target != da {
            return Err(PartialError::Shape("cocycle must be H ⊗ H → A".into()));
        }
        Ok(TwistedPartialAction { partial, cocycle, inverse_cocycle: None })
    }

    pub fn from_fn(partial: PartialAction, f: impl Fn(usize, usize) -> SparseVec) -> Result<Self, PartialError> {
        let dh = partial.dim_h();
        let cocycle = LinMap::from_fn(vec![dh, dh], partial.dim_a(), |t| f(t[0], t[1]));
        TwistedPartialAction::new(partial, cocycle)
    }

    /// ω(h, k) = h·(k·1), the cocycle of an untwisted partial action.
    pub fn untwisted(partial: PartialAction) -> Self {
        let dh = partial.dim_h();
        let cocycle =
            LinMap::from_fn(vec![dh, dh], partial.dim_a(), |t| partial.act_on(t[0], partial.unit_action(t[1])));
        TwistedPartialAction { partial, cocycle, inverse_cocycle: None }
    }

    pub fn cocycle(&self) -> &LinMap {
        &self.cocycle
    }

    pub fn inverse_cocycle(&self) -> Option<&LinMap> {
        self.inverse_cocycle.as_ref()
    }

    pub fn with_inverse(mut self, inverse: LinMap) -> Result<Self, PartialError> {
        if inverse.sources != self.cocycle.sources || inverse.target != self.cocycle.target {
            return Err(PartialError::Shape("inverse cocycle shape".into()));
        }
        self.inverse_cocycle = Some(inverse);
        Ok(self)
    }

    /// Replaces the cocycle; any stored inverse is dropped.
    pub fn with_cocycle(&self, cocycle: LinMap) -> Result<Self, PartialError> {
        TwistedPartialAction::new(self.partial.clone(), cocycle)
    }

    #[inline]
    pub fn omega(&self, h: usize, k: usize) -> &SparseVec {
        &self.cocycle.columns()[h * self.dim_h() + k]
    }

    pub fn omega_hv(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (h, c) in x.iter() {
            for (k, d) in y.iter() {
                out = out.axpy(&(c * d), self.omega(*h, *k));
            }
        }
        out
    }

    #[inline]
    pub fn omega_prime(&self, h: usize, k: usize) -> Option<&SparseVec> {
        self.inverse_cocycle.as_ref().map(|m| &m.columns()[h * self.dim_h() + k])
    }

    pub fn hmul(&self, h: usize, k: usize) -> &SparseVec {
        self.hopf.mul_basis(h, k)
    }

    /// `(x·a)` with `x = hk`, summed over the basis expansion of `hk`.
    pub fn prod_act(&self, h: usize, k: usize, a: &SparseVec) -> SparseVec {
        self.act_hv(self.hmul(h, k), a)
    }

    pub fn prod_unit(&self, h: usize, k: usize) -> SparseVec {
        self.unit_action_vec(self.hmul(h, k))
    }
}

/// Eqs. (1)–(4) of a twisted partial action and the two absorption
/// identities they imply, each exhaustively on basis tuples.
pub fn verify_twisted_partial(t: &TwistedPartialAction) -> Vec<CheckResult> {
    let mut out = t.partial.verify();
    let lh = t.h_labels();
    let h = &t.hopf;
    out.push(twisting_check(t));
    out.push(check_tuples("cocycle-absorbs-unit-action", &[lh, lh], |x| {
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in h.delta(x[0]) {
            for (q1, q2, d) in h.delta(x[1]) {
                rhs = rhs.axpy(&(c * d), &t.amul(t.omega(*p1, *q1), &t.prod_unit(*p2, *q2)));
            }
        }
        *t.omega(x[0], x[1]) == rhs
    }));
    out.push(check_tuples("cocycle-absorbs-iterated-action", &[lh, lh], |x| {
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in h.delta(x[0]) {
            for (q1, q2, d) in h.delta(x[1]) {
                let it = t.act_on(*p1, t.unit_action(*q1));
                rhs = rhs.axpy(&(c * d), &t.amul(&it, t.omega(*p2, *q2)));
            }
        }
        *t.omega(x[0], x[1]) == rhs
    }));
    out.push(check_tuples("cocycle-absorbs-unit-action-left", &[lh, lh], |x| {
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in h.delta(x[0]) {
            rhs = rhs.axpy(c, &t.amul(t.unit_action(*p1), t.omega(*p2, x[1])));
        }
        *t.omega(x[0], x[1]) == rhs
    }));
    out
}

/// Twisting (3): Σ (h_(1)·(l_(1)·a)) ω(h_(2), l_(2)) = Σ ω(h_(1), l_(1)) (h_(2)l_(2)·a).
pub fn twisting_check(t: &TwistedPartialAction) -> CheckResult {
    let (lh, la) = (t.h_labels(), t.a_labels());
    let h = &t.hopf;
    check_tuples("twisting", &[lh, lh, la], |x| {
        let (p, q, a) = (x[0], x[1], SparseVec::unit(x[2]));
        let mut lhs = SparseVec::new();
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in h.delta(p) {
            for (q1, q2, d) in h.delta(q) {
                let cd = c * d;
                let inner = t.act_on(*p1, t.act(*q1, x[2]));
                lhs = lhs.axpy(&cd, &t.amul(&inner, t.omega(*p2, *q2)));
                rhs = rhs.axpy(&cd, &t.amul(t.omega(*p1, *q1), &t.prod_act(*p2, *q2, &a)));
            }
        }
        lhs == rhs
    })
}

/// Normalization (8): ω(h, 1_H) = ω(1_H, h) = h·1.
pub fn normalization_check(t: &TwistedPartialAction) -> CheckResult {
    let one = t.hopf.one();
    check_tuples("normalization", &[t.h_labels()], |x| {
        let e = SparseVec::unit(x[0]);
        let want = t.unit_action(x[0]);
        &t.omega_hv(&e, one) == want && &t.omega_hv(one, &e) == want
    })
}

/// Cocycle law (9): Σ (h_(1)·ω(l_(1), m_(1))) ω(h_(2), l_(2)m_(2)) = Σ ω(h_(1), l_(1)) ω(h_(2)l_(2), m).
pub fn cocycle_law_check(t: &TwistedPartialAction) -> CheckResult {
    let lh = t.h_labels();
    let h = &t.hopf;
    check_tuples("cocycle-law", &[lh, lh, lh], |x| {
        let (p, q, r) = (x[0], x[1], x[2]);
        let mut lhs = SparseVec::new();
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in h.delta(p) {
            for (q1, q2, d) in h.delta(q) {
                let cd = c * d;
                for (r1, r2, e) in h.delta(r) {
                    let w = t.act_on(*p1, t.omega(*q1, *r1));
                    let qr = t.hmul(*q2, *r2);
                    lhs = lhs.axpy(&(&cd * e), &t.amul(&w, &t.omega_hv(&SparseVec::unit(*p2), qr)));
                }
                let pq = t.hmul(*p2, *q2);
                rhs = rhs.axpy(&cd, &t.amul(t.omega(*p1, *q1), &t.omega_hv(pq, &SparseVec::unit(r))));
            }
        }
        lhs == rhs
    })
}

/// Triviality (6): h·(l·1) = ω(h, l) = Σ (h_(1)·1)(h_(2)l·1).
pub fn trivial_cocycle_check(t: &TwistedPartialAction) -> CheckResult {
    let lh = t.h_labels();
    check_tuples("trivial-cocycle", &[lh, lh], |x| {
        let w = t.omega(x[0], x[1]);
        let it = t.act_on(x[0], t.unit_action(x[1]));
        let mut rhs = SparseVec::new();
        for (p1, p2, c) in t.hopf.delta(x[0]) {
            rhs = rhs.axpy(c, &t.amul(t.unit_action(*p1), &t.prod_unit(*p2, x[1])));
        }
        &it == w && w == &rhs
    })
}

pub fn classify_cocycle(t: &TwistedPartialAction) -> Classification {
    let triv = trivial_cocycle_check(t);
    let norm = normalization_check(t);
    let law = cocycle_law_check(t);
    let trivial = triv.passed();
    let normalized_cocycle = norm.passed() && law.passed();
    let kind = if trivial {
        CocycleKind::Trivial
    } else if normalized_cocycle {
        CocycleKind::NormalizedCocycle
    } else {
        CocycleKind::General
    };
    Classification { kind, trivial, normalized_cocycle, checks: vec![triv, norm, law] }
}
