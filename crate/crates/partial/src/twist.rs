//! Twisting a partial action of a smash product `L ⋊ κG` by a group 2-cocycle.

use hp_algebra::LinMap;
use hp_constructors::{FiniteGroup, GroupCocycleTable};

use crate::action::{PartialAction, TwistedPartialAction};
use crate::PartialError;

/// Checks that H has basis `l * |G| + g` with products landing in the `gg′` block.
pub fn check_smash_shape(pa: &PartialAction, group: &FiniteGroup) -> Result<(), PartialError> {
    let n = group.order();
    let d = pa.dim_h();
    if n == 0 || d % n != 0 {
        return Err(PartialError::NotSmashShape(format!("dim H = {d} is not a multiple of |G| = {n}")));
    }
    for x in 0..d {
        for y in 0..d {
            let g = group.mul(x % n, y % n);
            if pa.hopf.mul_basis(x, y).iter().any(|(z, _)| z % n != g) {
                let l = pa.h_labels();
                return Err(PartialError::NotSmashShape(format!("{} · {} leaves the group block", l[x], l[y])));
            }
        }
    }
    Ok(())
}

/// `ω(l⊗u_g, l′⊗u_s) = γ(g, s) ((l⊗u_g)·((l′⊗u_s)·1))`; γ must be a normalized cocycle.
pub fn cocycle_twist_smash(
    pa: &PartialAction,
    group: &FiniteGroup,
    gamma: &GroupCocycleTable,
) -> Result<TwistedPartialAction, PartialError> {
    if !gamma.is_normalized() || !gamma.cocycle_law().passed() {
        return Err(PartialError::CocycleNotNormalized);
    }
    cocycle_twist_smash_unchecked(pa, group, gamma)
}

/// As [`cocycle_twist_smash`] without the cocycle precondition, for
/// experiments with arbitrary tables.
pub fn cocycle_twist_smash_unchecked(
    pa: &PartialAction,
    group: &FiniteGroup,
    gamma: &GroupCocycleTable,
) -> Result<TwistedPartialAction, PartialError> {
    if gamma.group.order() != group.order() {
        return Err(PartialError::Shape("cocycle table is over a different group".into()));
    }
    check_smash_shape(pa, group)?;
    let n = group.order();
    let d = pa.dim_h();
    let omega = LinMap::from_fn(vec![d, d], pa.dim_a(), |t| {
        let base = pa.act_on(t[0], pa.unit_action(t[1]));
        base.scale(gamma.value(t[0] % n, t[1] % n))
    });
    TwistedPartialAction::new(pa.clone(), omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hp_algebra::StructuredAlgebra;
    use hp_constructors::group_algebra;
    use hp_scalars::SparseVec;
    use std::sync::Arc;

    #[test]
    fn group_algebra_is_a_smash_shape() {
        let g = FiniteGroup::cyclic(3);
        let a = Arc::new(StructuredAlgebra::diagonal(vec!["x".into()]));
        let pa = PartialAction::from_fn(Arc::new(group_algebra(&g)), a, |_, x| SparseVec::unit(x)).unwrap();
        assert!(check_smash_shape(&pa, &g).is_ok());
        assert!(check_smash_shape(&pa, &FiniteGroup::z2()).is_err());
        let t = cocycle_twist_smash(&pa, &g, &GroupCocycleTable::trivial(g.clone())).unwrap();
        assert_eq!(t.omega(1, 2), &SparseVec::unit(0));
    }
}
