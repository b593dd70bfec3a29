//! The induced crossed product as a corner of the global one.

use hp_algebra::{check_tuples, tensor_vec, CheckResult};
use hp_partial::{GlobalTwistedAction, InducedAction};
use hp_scalars::{SparseVec, Subspace};

use crate::product::{build_crossed_product, CrossedProduct};
use crate::BasisAlgebra;

/// Checks `(1_A#1_H)(B#_u H) = A ⊗ H` and `(1_A#1_H)(B#_u H)(1_A#1_H) = A#H`
/// inside the global crossed product, plus multiplicativity of the inclusion.
/// `cp` must be the crossed product of `induced.tpa`.
pub fn global_corner_embedding(global: &GlobalTwistedAction, induced: &InducedAction, cp: &CrossedProduct) -> Vec<CheckResult> {
    let mut out = global.cocycle_checks();
    let gcp = match global.as_twisted().map_err(|e| e.to_string()).and_then(|t| build_crossed_product(&t).map_err(|e| e.to_string())) {
        Ok(g) => g,
        Err(e) => {
            out.push(CheckResult::fail("global-crossed-product", e));
            return out;
        }
    };
    out.push(CheckResult::from_bool(
        "global-crossed-product",
        gcp.rank() == gcp.ambient_dim(),
        format!("rank {} of {}", gcp.rank(), gcp.ambient_dim()),
    ));
    let dh = cp.dim_h();
    let one_h = cp.tpa.hopf.one().clone();
    let e = gcp.sharp(&induced.idem, &one_h);
    let mul = |x: &SparseVec, y: &SparseVec| gcp.mul(x, y).unwrap_or_default();
    out.push(CheckResult::from_bool("corner-idempotent", mul(&e, &e) == e, "(1#1)(1#1) = 1#1"));

    // ι: A ⊗ H → B ⊗ H, then into global coordinates.
    let iota = |amb: &SparseVec| {
        let mut v = SparseVec::new();
        for (i, c) in amb.iter() {
            v = v.axpy(c, &tensor_vec(&induced.embed(&SparseVec::unit(i / dh)), &SparseVec::unit(i % dh), dh));
        }
        gcp.coords(&v).unwrap_or_default()
    };
    let g = gcp.rank();
    let tensor = Subspace::span(g, (0..cp.ambient_dim()).map(|i| iota(&SparseVec::unit(i))));
    let left = Subspace::span(g, (0..g).map(|y| mul(&e, &SparseVec::unit(y))));
    out.push(CheckResult::from_bool("left-corner-equals-tensor", left.same_as(&tensor), format!("dim {}", left.dim())));
    let image: Vec<SparseVec> = (0..cp.rank()).map(|x| iota(&cp.embed(&SparseVec::unit(x)))).collect();
    let corner = Subspace::span(g, (0..g).map(|y| mul(&mul(&e, &SparseVec::unit(y)), &e)));
    let sub = Subspace::span(g, image.iter().cloned());
    out.push(CheckResult::from_bool("corner-equals-crossed-product", corner.same_as(&sub) && sub.dim() == cp.rank(), format!("dim {}", corner.dim())));
    out.push(CheckResult::from_bool("inclusion-unit", iota(&cp.embed(&BasisAlgebra::unit(cp))) == e, "ι(1#1) = 1_A#1_H"));
    let labels = BasisAlgebra::labels(cp);
    out.push(check_tuples("inclusion-multiplicative", &[&labels, &labels], |x| {
        let Ok(p) = cp.mul(&SparseVec::unit(x[0]), &SparseVec::unit(x[1])) else { return false };
        iota(&cp.embed(&p)) == mul(&image[x[0]], &image[x[1]])
    }));
    out
}

