//! `Φ(a#_ω h) = Σ a u(h_(1)) #_σ h_(2)` and the extraction of `(u, v)` from
//! an isomorphism of crossed products.

use std::sync::Arc;

use hp_algebra::{check_tuples, CheckResult, LinMap};
use hp_crossed::{
    colinear_check, left_inverse_check, multiplicative_check, unital_check, BasisAlgebra, CrossedProduct,
    IsomorphismReport,
};
use hp_scalars::{inverse, SparseVec};

use crate::pair::GaugePair;
use crate::GaugeError;

/// `a#h ↦ Σ a g(h_(1)) # h_(2)` from `from` to `to`: Φ for `g = u`, Ψ for `g = v`.
pub fn gauge_map(from: &CrossedProduct, to: &CrossedProduct, g: &LinMap) -> LinMap {
    let t = &from.tpa;
    let dh = from.dim_h();
    LinMap::from_fn(vec![from.rank()], to.rank(), |x| {
        let mut out = SparseVec::new();
        for (i, c) in from.embed(&SparseVec::unit(x[0])).iter() {
            let ea = SparseVec::unit(i / dh);
            for (h1, h2, d) in t.hopf.delta(i % dh) {
                let a = t.amul(&ea, g.at(&[*h1]));
                if !a.is_zero() {
                    out = out.axpy(&(c * d), &to.sharp(&a, &SparseVec::unit(*h2)));
                }
            }
        }
        out
    })
}

/// `f((a#1)x) = (a#1)f(x)` for every basis element `a` of A and `x` of `src`.
pub fn left_linear_check(name: &str, src: &CrossedProduct, dst: &CrossedProduct, f: &LinMap) -> CheckResult {
    let one = src.tpa.hopf.one().clone();
    let left_s: Vec<SparseVec> = (0..src.dim_a()).map(|a| src.sharp(&SparseVec::unit(a), &one)).collect();
    let left_d: Vec<SparseVec> = (0..dst.dim_a()).map(|a| dst.sharp(&SparseVec::unit(a), &one)).collect();
    let la = src.tpa.a_labels();
    let lx = src.labels();
    let cols = f.columns();
    check_tuples(name, &[la, &lx], |x| {
        let (Ok(p), Ok(q)) = (src.mul(&left_s[x[0]], &SparseVec::unit(x[1])), dst.mul(&left_d[x[0]], &cols[x[1]])) else {
            return false;
        };
        f.apply(&p) == q
    })
}

/// Φ from `u` and Ψ from `v`, with everything the isomorphism should satisfy.
/// `src` and `dst` are the crossed products of `gp.source` and `gp.target`.
pub fn gauge_isomorphism(gp: &GaugePair, src: &Arc<CrossedProduct>, dst: &Arc<CrossedProduct>) -> IsomorphismReport {
    let phi = gauge_map(src, dst, &gp.u);
    let psi = gauge_map(dst, src, &gp.v);
    let (s, d): (&dyn BasisAlgebra, &dyn BasisAlgebra) = (src.as_ref(), dst.as_ref());
    let checks = vec![
        unital_check("phi-unital", s, d, &phi),
        multiplicative_check("phi-multiplicative", s, d, &phi),
        left_linear_check("phi-left-linear", src, dst, &phi),
        colinear_check("phi-colinear", &src.comodule_structure(), &dst.comodule_structure(), &phi),
        left_inverse_check("psi-after-phi", &s.labels(), &phi, &psi),
        left_inverse_check("phi-after-psi", &d.labels(), &psi, &phi),
    ];
    IsomorphismReport { checks, forward: phi, backward: psi }
}

/// `(I ⊗ ε)` on a crossed-product element.
fn counit_part(cp: &CrossedProduct, x: &SparseVec) -> SparseVec {
    let dh = cp.dim_h();
    let mut out = SparseVec::new();
    for (i, c) in cp.embed(x).iter() {
        let e = cp.tpa.hopf.counit(i % dh);
        if !e.is_zero() {
            out = out.axpy(&(c * e), &SparseVec::unit(i / dh));
        }
    }
    out
}

fn witness(c: &CheckResult) -> Vec<String> {
    c.witness.clone().unwrap_or_default()
}

/// `u(h) = (I ⊗ ε)Φ(1 #_ω h)` and `v(h) = (I ⊗ ε)Φ⁻¹(1 #_σ h)`, after checking
/// that Φ is a unital algebra map, left A-linear, right H-colinear and
/// invertible, in that order. Returns the pair and the passing precondition checks.
pub fn extract_gauge(
    src: &Arc<CrossedProduct>,
    dst: &Arc<CrossedProduct>,
    iso: &LinMap,
) -> Result<(GaugePair, Vec<CheckResult>), GaugeError> {
    if iso.sources != [src.rank()] || iso.target != dst.rank() {
        return Err(GaugeError::Shape("isomorphism must map the source crossed product to the target".into()));
    }
    if src.tpa.carrier.dim != dst.tpa.carrier.dim
        || src.tpa.carrier.mult != dst.tpa.carrier.mult
        || src.tpa.hopf.dim() != dst.tpa.hopf.dim()
    {
        return Err(GaugeError::Shape("both crossed products must be built on the same A and H".into()));
    }
    let (s, d): (&dyn BasisAlgebra, &dyn BasisAlgebra) = (src.as_ref(), dst.as_ref());
    let mut checks = Vec::new();
    for c in [unital_check("iso-unital", s, d, iso), multiplicative_check("iso-multiplicative", s, d, iso)] {
        if !c.passed() {
            return Err(GaugeError::NotAlgebraMap { check: c.name.clone(), witness: witness(&c) });
        }
        checks.push(c);
    }
    let c = left_linear_check("iso-left-linear", src, dst, iso);
    if !c.passed() {
        return Err(GaugeError::NotALinear { witness: witness(&c) });
    }
    checks.push(c);
    let c = colinear_check("iso-colinear", &src.comodule_structure(), &dst.comodule_structure(), iso);
    if !c.passed() {
        return Err(GaugeError::NotColinear { witness: witness(&c) });
    }
    checks.push(c);
    if src.rank() != dst.rank() {
        return Err(GaugeError::NotInvertible);
    }
    let inv = inverse(&iso.matrix).map_err(|_| GaugeError::NotInvertible)?;
    let back = LinMap::from_columns(vec![dst.rank()], src.rank(), inv.columns().to_vec());

    let (dh, da) = (src.dim_h(), src.dim_a());
    let one_a = &src.tpa.carrier.unit;
    let u = LinMap::from_fn(vec![dh], da, |x| counit_part(dst, &iso.apply(&src.sharp(one_a, &SparseVec::unit(x[0])))));
    let v = LinMap::from_fn(vec![dh], da, |x| counit_part(src, &back.apply(&dst.sharp(one_a, &SparseVec::unit(x[0])))));
    Ok((GaugePair { source: src.tpa.clone(), target: dst.tpa.clone(), u, v }, checks))
}
