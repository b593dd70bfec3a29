//! Cleaving data `(γ, γ′)` on a comodule algebra and the maps built from a
//! symmetric crossed product.

use std::sync::Arc;

use hp_algebra::{check_tuples, CheckResult, HopfAlgebraData, LinMap};
use hp_crossed::{BasisAlgebra, ComoduleAlgebra, CrossedProduct};
use hp_scalars::SparseVec;

use crate::coinv::Coinvariants;
use crate::CleftError;

#[derive(Clone, Debug)]
pub struct CleftData {
    pub extension: ComoduleAlgebra,
    pub coinvariants: Coinvariants,
    /// `H → B`.
    pub gamma: LinMap,
    pub gamma_prime: LinMap,
}

impl CleftData {
    pub fn new(extension: ComoduleAlgebra, gamma: LinMap, gamma_prime: LinMap) -> Result<Self, CleftError> {
        let coinvariants = Coinvariants::compute(&extension)?;
        CleftData::with_coinvariants(extension, coinvariants, gamma, gamma_prime)
    }

    pub fn with_coinvariants(
        extension: ComoduleAlgebra,
        coinvariants: Coinvariants,
        gamma: LinMap,
        gamma_prime: LinMap,
    ) -> Result<Self, CleftError> {
        let (dh, db) = (extension.hopf.dim(), extension.dim());
        for m in [&gamma, &gamma_prime] {
            if m.sources != [dh] || m.target != db {
                return Err(CleftError::Shape("cleaving maps must be H → B".into()));
            }
        }
        Ok(CleftData { extension, coinvariants, gamma, gamma_prime })
    }

    /// Re-expresses A in another basis of the same coinvariant subalgebra.
    pub fn with_coinvariant_basis(&self, basis: Vec<SparseVec>) -> Result<Self, CleftError> {
        let coinvariants = self.coinvariants.with_basis(self.b(), basis)?;
        Ok(CleftData { coinvariants, ..self.clone() })
    }

    pub fn with_gamma(&self, gamma: LinMap) -> Self {
        CleftData { gamma, ..self.clone() }
    }

    pub fn with_gamma_prime(&self, gamma_prime: LinMap) -> Self {
        CleftData { gamma_prime, ..self.clone() }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebraData> {
        &self.extension.hopf
    }

    pub fn b(&self) -> &dyn BasisAlgebra {
        self.extension.algebra.as_ref()
    }

    pub fn dim_h(&self) -> usize {
        self.hopf().dim()
    }

    /// Product in B. The extension is assumed closed under multiplication.
    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        if x.is_zero() || y.is_zero() {
            return SparseVec::new();
        }
        self.b().try_mul(x, y).expect("B is closed under multiplication")
    }

    pub fn mul3(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        self.mul(&self.mul(x, y), z)
    }

    /// `(f ∗ g)(h) = Σ f(h_(1)) g(h_(2))` in Hom(H, B).
    pub fn convolve(&self, f: &LinMap, g: &LinMap) -> LinMap {
        let h = self.hopf();
        LinMap::from_fn(vec![h.dim()], self.extension.dim(), |x| {
            let mut out = SparseVec::new();
            for (p, q, c) in h.delta(x[0]) {
                out = out.axpy(c, &self.mul(f.at(&[*p]), g.at(&[*q])));
            }
            out
        })
    }

    /// `e = γ ∗ γ′`.
    pub fn e(&self) -> LinMap {
        self.convolve(&self.gamma, &self.gamma_prime)
    }

    /// `ẽ = γ′ ∗ γ`.
    pub fn e_tilde(&self) -> LinMap {
        self.convolve(&self.gamma_prime, &self.gamma)
    }

    /// `h ↦ S(h)` as a vector of H.
    pub(crate) fn s(&self, h: usize) -> &SparseVec {
        self.hopf().antipode_of(h)
    }

    /// `ρ(b)` split as `(b_(0) coordinates, h index, coefficient)` triples.
    pub(crate) fn coact(&self, b: &SparseVec) -> Vec<(usize, usize, hp_scalars::Scalar)> {
        let dh = self.dim_h();
        self.extension.apply(b).iter().map(|(i, c)| (i / dh, i % dh, c.clone())).collect()
    }
}

/// `γ(h) = 1#h` and `γ′(h) = Σ ω′(S(h_(2)), h_(3)) # S(h_(1))`, with the two
/// products the construction predicts.
pub fn build_cleft_maps(cp: &Arc<CrossedProduct>) -> Result<(CleftData, Vec<CheckResult>), CleftError> {
    let t = &cp.tpa;
    if t.inverse_cocycle().is_none() {
        return Err(CleftError::NotSymmetric);
    }
    let h = t.hopf.clone();
    let dh = h.dim();
    let legs3 = h.legs(3);
    let unit_a = t.carrier.unit.clone();
    let omega_prime = |x: &SparseVec, k: usize| {
        let mut out = SparseVec::new();
        for (p, c) in x.iter() {
            out = out.axpy(c, t.omega_prime(*p, k).expect("symmetric"));
        }
        out
    };
    let gamma = LinMap::from_fn(vec![dh], cp.rank(), |x| cp.sharp(&unit_a, &SparseVec::unit(x[0])));
    let gamma_prime = LinMap::from_fn(vec![dh], cp.rank(), |x| {
        let mut out = SparseVec::new();
        for (p, c) in &legs3[x[0]] {
            let a = omega_prime(h.antipode_of(p[1]), p[2]);
            if !a.is_zero() {
                out = out.axpy(c, &cp.sharp(&a, h.antipode_of(p[0])));
            }
        }
        out
    });
    let cd = CleftData::new(cp.comodule_structure(), gamma, gamma_prime)?;
    let checks = cleaving_checks(&cd, cp);
    Ok((cd, checks))
}

/// `γ ∗ γ′ = (h ↦ h·1 # 1)` and `γ′ ∗ γ = (h ↦ Σ S(h_(2))·1 # S(h_(1))h_(3))`.
pub fn cleaving_checks(cd: &CleftData, cp: &CrossedProduct) -> Vec<CheckResult> {
    let t = &cp.tpa;
    let h = &t.hopf;
    let legs3 = h.legs(3);
    let lh = t.h_labels();
    let e = cd.e();
    let et = cd.e_tilde();
    let one = h.one().clone();
    vec![
        check_tuples("gamma-gamma-prime", &[lh], |x| e.at(x) == &cp.sharp(t.unit_action(x[0]), &one)),
        check_tuples("gamma-prime-gamma", &[lh], |x| {
            let mut want = SparseVec::new();
            for (p, c) in &legs3[x[0]] {
                let a = t.unit_action_vec(h.antipode_of(p[1]));
                want = want.axpy(c, &cp.sharp(&a, &h.mul(h.antipode_of(p[0]), &SparseVec::unit(p[2]))));
            }
            et.at(x) == &want
        }),
    ]
}
