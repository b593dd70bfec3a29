//! Twisted partial actions of a group on an algebra, and their translation to
//! and from twisted partial actions of the group algebra.

use std::sync::Arc;

use hp_algebra::{check_tuples, CheckResult, LinMap, StructuredAlgebra};
use hp_constructors::{group_algebra, FiniteGroup};
use hp_scalars::{solve_linear, ExactMatrix, Scalar, SparseVec};

use crate::action::{PartialAction, TwistedPartialAction};
use crate::PartialError;

/// Ideals `D_g = 1_g A`, maps `α_g: D_{g⁻¹} → D_g` and cocycle elements `w_{g,h}`.
///
/// `maps[g]` is stored on all of A as `a ↦ α_g(a 1_{g⁻¹})`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupTwistedPartialAction {
    pub group: FiniteGroup,
    pub carrier: Arc<StructuredAlgebra>,
    pub idempotents: Vec<SparseVec>,
    pub maps: Vec<LinMap>,
    /// `cocycle[g * |G| + h] = w_{g,h}`.
    pub cocycle: Vec<SparseVec>,
}

impl GroupTwistedPartialAction {
    pub fn new(
        group: FiniteGroup,
        carrier: Arc<StructuredAlgebra>,
        idempotents: Vec<SparseVec>,
        maps: Vec<LinMap>,
        cocycle: Vec<SparseVec>,
    ) -> Result<Self, PartialError> {
        let n = group.order();
        let d = carrier.dim;
        if idempotents.len() != n || maps.len() != n || cocycle.len() != n * n {
            return Err(PartialError::Shape("one idempotent and map per element, |G|² cocycle values".into()));
        }
        if maps.iter().any(|m| m.sources != [d] || m.target != d) {
            return Err(PartialError::Shape("α_g must be A → A".into()));
        }
        Ok(GroupTwistedPartialAction { group, carrier, idempotents, maps, cocycle })
    }

    /// A global action `α_g` with trivial cocycle: every `1_g = 1`.
    pub fn global(group: FiniteGroup, carrier: Arc<StructuredAlgebra>, maps: Vec<LinMap>) -> Result<Self, PartialError> {
        let n = group.order();
        let one = carrier.unit.clone();
        GroupTwistedPartialAction::new(group, carrier, vec![one.clone(); n], maps, vec![one; n * n])
    }

    fn alpha(&self, g: usize, v: &SparseVec) -> SparseVec {
        self.maps[g].apply(v)
    }

    pub fn w(&self, g: usize, h: usize) -> &SparseVec {
        &self.cocycle[g * self.group.order() + h]
    }

    pub fn verify(&self) -> Vec<CheckResult> {
        let a = &self.carrier;
        let gl = &self.group.names[..];
        let al = &a.labels[..];
        let e = self.group.identity;
        let u = SparseVec::unit;
        let central = check_tuples("domain-idempotents-central", &[gl], |x| {
            let i = &self.idempotents[x[0]];
            a.is_idempotent(i) && a.is_central(i)
        });
        let ident = check_tuples("identity-domain", &[al], |x| {
            self.idempotents[e] == a.unit && self.alpha(e, &u(x[0])) == u(x[0])
        });
        let maps = check_tuples("maps-between-domains", &[gl, al, al], |x| {
            let g = x[0];
            let gi = self.group.inv(g);
            let img = self.alpha(g, &u(x[1]));
            let into = a.mul(&self.idempotents[g], &img) == img;
            let restricted = self.alpha(g, &a.mul(&u(x[1]), &self.idempotents[gi])) == img;
            let unital = self.alpha(g, &self.idempotents[gi]) == self.idempotents[g];
            let mult = self.alpha(g, a.mul_basis(x[1], x[2])) == a.mul(&img, &self.alpha(g, &u(x[2])));
            into && restricted && unital && mult
        });
        let inside = check_tuples("cocycle-in-domains", &[gl, gl], |x| {
            let (g, h) = (x[0], x[1]);
            let gh = self.group.mul(g, h);
            let w = self.w(g, h);
            &a.mul3(&self.idempotents[g], &self.idempotents[gh], w) == w
        });
        let compat = check_tuples("compatibility", &[gl, gl, al], |x| {
            let (g, h) = (x[0], x[1]);
            let gh = self.group.mul(g, h);
            let w = self.w(g, h);
            let lhs = a.mul(&self.alpha(g, &self.alpha(h, &u(x[2]))), w);
            let rhs = a.mul(w, &self.alpha(gh, &u(x[2])));
            lhs == rhs
        });
        vec![central, ident, maps, inside, compat]
    }

    /// The inverse of `w_{g,g⁻¹}` in `1_g A`, if it exists.
    pub fn inverse_of_w(&self, g: usize) -> Option<SparseVec> {
        invert_in_ideal(&self.carrier, self.w(g, self.group.inv(g)), &self.idempotents[g])
    }

    /// `α_g ∘ α_{g⁻¹}(1_g a) = w_{g,g⁻¹} (1_g a) w_{g,g⁻¹}⁻¹` for every g where the inverse exists.
    pub fn conjugation_check(&self) -> CheckResult {
        let a = &self.carrier;
        let invs: Vec<Option<SparseVec>> = (0..self.group.order()).map(|g| self.inverse_of_w(g)).collect();
        check_tuples("inner-conjugation", &[&self.group.names, &a.labels], |x| {
            let g = x[0];
            let Some(winv) = &invs[g] else { return true };
            let ga = a.mul(&self.idempotents[g], &SparseVec::unit(x[1]));
            let lhs = self.alpha(g, &self.alpha(self.group.inv(g), &ga));
            lhs == a.mul3(self.w(g, self.group.inv(g)), &ga, winv)
        })
    }

    /// `α(u_g ⊗ a) = α_g(a 1_{g⁻¹})`, `ω(u_g, u_h) = w_{g,h}`.
    pub fn to_twisted(&self) -> Result<TwistedPartialAction, PartialError> {
        let h = Arc::new(group_algebra(&self.group));
        let pa = PartialAction::from_fn(h, self.carrier.clone(), |g, a| self.maps[g].columns()[a].clone())?;
        TwistedPartialAction::from_fn(pa, |g, k| self.w(g, k).clone())
    }

    /// Reads off `1_g = g·1`, `α_g`, `w_{g,h} = ω(g,h)` from a twisted partial
    /// action of κG, after checking that every `1_g` is central and every
    /// `w_{g,g⁻¹}` is invertible in `1_g A`.
    pub fn from_twisted(t: &TwistedPartialAction, group: &FiniteGroup) -> Result<Self, PartialError> {
        let n = group.order();
        let expected = group_algebra(group);
        if t.hopf.algebra != expected.algebra || t.hopf.coalgebra != expected.coalgebra {
            return Err(PartialError::NotGroupAlgebra);
        }
        let a = &t.carrier;
        let idempotents: Vec<SparseVec> = (0..n).map(|g| t.unit_action(g).clone()).collect();
        for (g, i) in idempotents.iter().enumerate() {
            if !a.is_central(i) {
                return Err(PartialError::NotCentral { element: group.names[g].clone() });
            }
        }
        let maps: Vec<LinMap> = (0..n)
            .map(|g| LinMap::from_columns(vec![a.dim], a.dim, (0..a.dim).map(|x| t.act(g, x).clone()).collect()))
            .collect();
        let cocycle = (0..n * n).map(|c| t.omega(c / n, c % n).clone()).collect();
        let out = GroupTwistedPartialAction::new(group.clone(), t.carrier.clone(), idempotents, maps, cocycle)?;
        for g in 0..n {
            if out.inverse_of_w(g).is_none() {
                return Err(PartialError::NotInvertible { element: group.names[g].clone() });
            }
        }
        Ok(out)
    }
}

/// Solves `w x = x w = e`, `e x = x` for x.
fn invert_in_ideal(a: &StructuredAlgebra, w: &SparseVec, e: &SparseVec) -> Option<SparseVec> {
    let d = a.dim;
    let mut trip = Vec::new();
    for j in 0..d {
        let x = SparseVec::unit(j);
        for (r, v) in a.mul(w, &x).iter() {
            trip.push((*r, j, v.clone()));
        }
        for (r, v) in a.mul(&x, w).iter() {
            trip.push((d + r, j, v.clone()));
        }
        for (r, v) in a.mul(e, &x).iter() {
            trip.push((2 * d + r, j, v.clone()));
        }
        trip.push((2 * d + j, j, Scalar::from_int(-1)));
    }
    let m = ExactMatrix::from_triplets(3 * d, d, trip);
    let rhs: Vec<(usize, usize, Scalar)> =
        e.iter().flat_map(|(r, v)| [(*r, 0, v.clone()), (d + r, 0, v.clone())]).collect();
    let b = ExactMatrix::from_triplets(3 * d, 1, rhs);
    solve_linear(&m, &b).ok().map(|s| s.solution.column(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_inside_an_ideal() {
        let a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into(), "z".into()]);
        let e = SparseVec::from_terms(vec![(0, Scalar::one()), (1, Scalar::one())]);
        let w = SparseVec::from_terms(vec![(0, Scalar::from_int(2)), (1, Scalar::from_int(-1))]);
        let inv = invert_in_ideal(&a, &w, &e).unwrap();
        assert_eq!(a.mul(&w, &inv), e);
        assert_eq!(inv.get(2), Scalar::zero());
        assert!(invert_in_ideal(&a, &SparseVec::unit(0), &e).is_none());
    }
}
