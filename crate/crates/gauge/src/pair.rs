//! Gauge pairs `(u, v)` and the four clauses tying `(·, ω)` to `(•, σ)`.

use hp_algebra::{check_tuples, CheckResult, LinMap};
use hp_partial::{verify_symmetric, verify_twisted_partial, PartialAction, TwistedPartialAction};
use hp_scalars::{Scalar, SparseVec};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::GaugeError;

/// `u, v: H → A` with `source = (·, ω)` and `target = (•, σ)` on the same A.
#[derive(Clone, Debug)]
pub struct GaugePair {
    pub source: TwistedPartialAction,
    pub target: TwistedPartialAction,
    pub u: LinMap,
    pub v: LinMap,
}

impl Serialize for GaugePair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaugePair", 6)?;
        st.serialize_field("h_labels", self.source.h_labels())?;
        st.serialize_field("a_labels", self.source.a_labels())?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("target_action", self.target.action())?;
        st.serialize_field("target_cocycle", self.target.cocycle())?;
        st.end()
    }
}

fn check_shape(t: &TwistedPartialAction, m: &LinMap) -> Result<(), GaugeError> {
    if m.sources != [t.dim_h()] || m.target != t.dim_a() {
        return Err(GaugeError::Shape("gauge maps must be H → A".into()));
    }
    Ok(())
}

impl GaugePair {
    /// Builds `•` and `σ` from clauses (iii) and (iv), then verifies the
    /// result from scratch; ω′ for the target is attached when the solver finds it.
    pub fn transport(source: &TwistedPartialAction, u: LinMap, v: LinMap) -> Result<(GaugePair, Vec<CheckResult>), GaugeError> {
        check_shape(source, &u)?;
        check_shape(source, &v)?;
        let t = source;
        let h = t.hopf.clone();
        let (dh, da) = (h.dim(), t.dim_a());
        let legs3 = h.legs(3);
        let legs4 = h.legs(4);
        let action = LinMap::from_fn(vec![dh, da], da, |x| {
            let mut out = SparseVec::new();
            for (p, c) in &legs3[x[0]] {
                let mid = t.amul(v.at(&[p[0]]), t.act(p[1], x[1]));
                if !mid.is_zero() {
                    out = out.axpy(c, &t.amul(&mid, u.at(&[p[2]])));
                }
            }
            out
        });
        let sigma = LinMap::from_fn(vec![dh, dh], da, |x| {
            let mut out = SparseVec::new();
            for (p, c) in &legs4[x[0]] {
                for (q, d) in &legs3[x[1]] {
                    let left = t.amul(v.at(&[p[0]]), &t.act_on(p[1], v.at(&[q[0]])));
                    if left.is_zero() {
                        continue;
                    }
                    let left = t.amul(&left, t.omega(p[2], q[1]));
                    if left.is_zero() {
                        continue;
                    }
                    out = out.axpy(&(c * d), &t.amul(&left, &u.apply(h.mul_basis(p[3], q[2]))));
                }
            }
            out
        });
        let pa = PartialAction::new(h, t.carrier.clone(), action)?;
        let bare = TwistedPartialAction::new(pa, sigma)?;
        let (checks, inverse) = target_checks(&bare);
        let target = match inverse {
            Some(w) => bare.with_inverse(w)?,
            None => bare,
        };
        Ok((GaugePair { source: source.clone(), target, u, v }, checks))
    }

    /// `(f ∗ g)(h)` in Hom(H, A).
    pub fn convolve_at(&self, f: &LinMap, g: &LinMap, x: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (p, q, c) in self.source.hopf.delta(x) {
            out = out.axpy(c, &self.source.amul(f.at(&[*p]), g.at(&[*q])));
        }
        out
    }
}

/// `u = v = (h ↦ h·1)` and target equal to source.
pub fn identity_gauge(source: &TwistedPartialAction) -> GaugePair {
    let e = LinMap::from_fn(vec![source.dim_h()], source.dim_a(), |x| source.unit_action(x[0]).clone());
    GaugePair { source: source.clone(), target: source.clone(), u: e.clone(), v: e }
}

/// `u(h) = λ(g)(h·1)`, `v(h) = λ(g)⁻¹(h·1)` where `g = group_index(h)` on a
/// basis of grouplikes, then transported. Only a generator of examples: the
/// clauses are verified afterwards, not assumed.
pub fn character_gauge(
    source: &TwistedPartialAction,
    group_index: impl Fn(usize) -> usize,
    lambda: &[Scalar],
) -> Result<(GaugePair, Vec<CheckResult>), GaugeError> {
    let inv: Vec<Scalar> =
        lambda.iter().enumerate().map(|(g, l)| l.inv().map_err(|_| GaugeError::ZeroCharacterValue(g))).collect::<Result<_, _>>()?;
    let (dh, da) = (source.dim_h(), source.dim_a());
    let u = LinMap::from_fn(vec![dh], da, |x| source.unit_action(x[0]).scale(&lambda[group_index(x[0])]));
    let v = LinMap::from_fn(vec![dh], da, |x| source.unit_action(x[0]).scale(&inv[group_index(x[0])]));
    GaugePair::transport(source, u, v)
}

fn target_checks(t: &TwistedPartialAction) -> (Vec<CheckResult>, Option<LinMap>) {
    let mut checks = verify_twisted_partial(t);
    let sym = verify_symmetric(t);
    checks.extend(sym.checks);
    (checks, sym.inverse)
}

/// The target re-verified as a symmetric twisted partial action.
pub fn verify_target(gp: &GaugePair) -> Vec<CheckResult> {
    target_checks(&gp.target).0
}

/// Clauses (i)–(iv), the unit conditions, and `v ∗ u(h) = h•1`.
pub fn verify_gauge(gp: &GaugePair) -> Vec<CheckResult> {
    let (s, t) = (&gp.source, &gp.target);
    let (u, v) = (&gp.u, &gp.v);
    let h = s.hopf.clone();
    let lh = s.h_labels();
    let la = s.a_labels();
    let one_a = &s.carrier.unit;
    let one_h = h.one();
    let legs3 = h.legs(3);
    let legs4 = h.legs(4);

    let mut checks = vec![CheckResult::from_bool(
        "gauge-unit",
        &u.apply(one_h) == one_a && &v.apply(one_h) == one_a,
        "u(1_H) = v(1_H) = 1_A",
    )];
    checks.push(check_tuples("gauge-inverse", &[lh], |x| &gp.convolve_at(u, v, x[0]) == s.unit_action(x[0])));
    checks.push(check_tuples("gauge-absorbs-unit-right", &[lh], |x| {
        let mut rhs = SparseVec::new();
        for (p, q, c) in h.delta(x[0]) {
            rhs = rhs.axpy(c, &s.amul(u.at(&[*p]), s.unit_action(*q)));
        }
        u.at(x) == &rhs
    }));
    checks.push(check_tuples("gauge-absorbs-unit-left", &[lh], |x| {
        let mut rhs = SparseVec::new();
        for (p, q, c) in h.delta(x[0]) {
            rhs = rhs.axpy(c, &s.amul(s.unit_action(*p), u.at(&[*q])));
        }
        u.at(x) == &rhs
    }));
    checks.push(check_tuples("gauge-conjugates-action", &[lh, la], |x| {
        let mut rhs = SparseVec::new();
        for (p, c) in &legs3[x[0]] {
            let mid = s.amul(v.at(&[p[0]]), s.act(p[1], x[1]));
            rhs = rhs.axpy(c, &s.amul(&mid, u.at(&[p[2]])));
        }
        t.act(x[0], x[1]) == &rhs
    }));
    checks.push(check_tuples("gauge-twists-cocycle", &[lh, lh], |x| {
        let mut rhs = SparseVec::new();
        for (p, c) in &legs4[x[0]] {
            for (q, d) in &legs3[x[1]] {
                let left = s.amul(&s.amul(v.at(&[p[0]]), &s.act_on(p[1], v.at(&[q[0]]))), s.omega(p[2], q[1]));
                rhs = rhs.axpy(&(c * d), &s.amul(&left, &u.apply(h.mul_basis(p[3], q[2]))));
            }
        }
        t.omega(x[0], x[1]) == &rhs
    }));
    checks.push(check_tuples("gauge-inverse-reversed", &[lh], |x| &gp.convolve_at(v, u, x[0]) == t.unit_action(x[0])));
    checks
}
