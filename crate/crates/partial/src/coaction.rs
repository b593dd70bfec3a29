//! Partial actions from a Hopf pairing and a restricted coaction.

use std::sync::Arc;

use hp_algebra::{HopfAlgebraData, LinMap, StructuredAlgebra};
use hp_constructors::HopfPairing;
use hp_scalars::{Scalar, SparseVec, Subspace};

use crate::action::PartialAction;
use crate::induced::corner_algebra;
use crate::PartialError;

/// `A = e_X H` with `ρ = (e_X· ⊗ I) ∘ Δ`; coaction columns are indexed by the
/// A-basis, rows by `a * dim(H) + x`.
#[derive(Clone, Debug)]
pub struct RestrictedCoaction {
    pub carrier: Arc<StructuredAlgebra>,
    pub subspace: Subspace,
    pub coaction: LinMap,
}

pub fn restrict_coaction(h: &HopfAlgebraData, e_x: &SparseVec) -> Result<RestrictedCoaction, PartialError> {
    let (alg, sub) = corner_algebra(&h.algebra, e_x)?;
    let dh = h.dim();
    let coaction = LinMap::from_fn(vec![alg.dim], alg.dim * dh, |t| {
        let x = &sub.basis()[t[0]];
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        for (i, c) in x.iter() {
            for (x1, x2, d) in h.delta(*i) {
                let left = h.algebra.mul(e_x, &SparseVec::unit(*x1));
                let left = sub.coords(&left).expect("e_X H is closed");
                let cd = c * d;
                for (a, v) in left.iter() {
                    terms.push((a * dh + x2, &cd * v));
                }
            }
        }
        SparseVec::from_terms(terms)
    });
    Ok(RestrictedCoaction { carrier: Arc::new(alg), subspace: sub, coaction })
}

/// `h·a = Σ a^[0] ⟨h, a^[1]⟩`, with `⟨ , ⟩` between `pairing.left` (acting)
/// and `pairing.right` (coacting). Eqs. (1)–(2) are verified.
pub fn pairing_action(
    pairing: &HopfPairing,
    carrier: Arc<StructuredAlgebra>,
    coaction: &LinMap,
) -> Result<PartialAction, PartialError> {
    let d2 = pairing.right.dim();
    if coaction.sources != [carrier.dim] || coaction.target != carrier.dim * d2 {
        return Err(PartialError::Shape("coaction must be A → A ⊗ H2".into()));
    }
    let hopf = Arc::new(pairing.left.clone());
    let pa = PartialAction::from_fn(hopf, carrier, |h, a| {
        let mut terms = Vec::new();
        for (idx, c) in coaction.columns()[a].iter() {
            let v = pairing.value(h, idx % d2);
            if !v.is_zero() {
                terms.push((idx / d2, c * v));
            }
        }
        SparseVec::from_terms(terms)
    })?;
    for c in pa.verify() {
        if !c.passed() {
            return Err(PartialError::ActionLawViolation { law: c.name, witness: c.witness.unwrap_or_default() });
        }
    }
    Ok(pa)
}
