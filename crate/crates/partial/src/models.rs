//! Ready-made actions: the torus model (pairing action of a smash product on
//! a corner of the cosemidirect product, twisted by a group cocycle), the
//! translation action on functions on a group, and a partial swap.

use std::sync::Arc;

use hp_algebra::{HopfAlgebraData, LinMap, StructuredAlgebra};
use hp_constructors::{
    circle_group_algebra, cosemidirect_product, group_algebra, hopf_pairing, permutation_action,
    smash_cosemidirect_pairing_table, smash_product, torus_coaction, truncated_torus, FiniteGroup,
    GroupCocycleTable, GroupSubset, HopfPairing,
};
use hp_scalars::{Scalar, SparseVec};

use crate::action::{PartialAction, TwistedPartialAction};
use crate::coaction::{pairing_action, restrict_coaction, RestrictedCoaction};
use crate::dictionary::GroupTwistedPartialAction;
use crate::induced::{induce_partial, GlobalTwistedAction, InducedAction};
use crate::twist::{cocycle_twist_smash, cocycle_twist_smash_unchecked};
use crate::PartialError;

pub struct TorusModel {
    pub group: FiniteGroup,
    pub perm: Vec<Vec<usize>>,
    pub m: u32,
    pub n: usize,
    pub subset: GroupSubset,
    pub smash: Arc<HopfAlgebraData>,
    pub cosemidirect: Arc<HopfAlgebraData>,
    pub pairing: HopfPairing,
    pub restricted: RestrictedCoaction,
    pub partial: PartialAction,
    pub gamma: GroupCocycleTable,
    pub twisted: TwistedPartialAction,
}

/// Builds `H′ = (κC_m)^⊗n ⋊ κG` acting on `A = e_X H` where
/// `H = (κC_m)^⊗n >◁ (κG)*`, then twists by `gamma`. With `check_gamma`
/// off, `gamma` need not be a normalized cocycle.
pub fn torus_model(
    group: &FiniteGroup,
    perm: &[Vec<usize>],
    m: u32,
    subset: &GroupSubset,
    gamma: &GroupCocycleTable,
    check_gamma: bool,
) -> Result<TorusModel, PartialError> {
    let n = perm.first().map_or(0, |p| p.len());
    let act = permutation_action(group, perm, circle_group_algebra(m, n), m)?;
    let smash = smash_product(&act)?;
    let co = torus_coaction(group, perm, truncated_torus(m, n), m)?;
    let cosemi = cosemidirect_product(&co)?;
    let table = smash_cosemidirect_pairing_table(group, m, n);
    let pairing = hopf_pairing(&smash, &cosemi, &table)?;
    let e_x = SparseVec::from_terms(subset.members.iter().map(|s| (*s, Scalar::one())).collect());
    let restricted = restrict_coaction(&cosemi, &e_x)?;
    let partial = pairing_action(&pairing, restricted.carrier.clone(), &restricted.coaction)?;
    let twisted = if check_gamma {
        cocycle_twist_smash(&partial, group, gamma)?
    } else {
        cocycle_twist_smash_unchecked(&partial, group, gamma)?
    };
    Ok(TorusModel {
        group: group.clone(),
        perm: perm.to_vec(),
        m,
        n,
        subset: subset.clone(),
        smash: partial.hopf.clone(),
        cosemidirect: Arc::new(cosemi),
        pairing,
        restricted,
        partial,
        gamma: gamma.clone(),
        twisted,
    })
}

pub struct FunctionsModel {
    pub group: FiniteGroup,
    pub gamma: GroupCocycleTable,
    pub global: GlobalTwistedAction,
    pub induced: InducedAction,
    pub subset: Vec<usize>,
}

/// κG acting on functions on G by `g▷δ_x = δ_{gx}`, with `u(g,h) = γ(g,h)1_B`.
pub fn translation_action(group: &FiniteGroup, gamma: &GroupCocycleTable) -> Result<GlobalTwistedAction, PartialError> {
    let n = group.order();
    let hopf = Arc::new(group_algebra(group));
    let labels = group.names.iter().map(|g| format!("δ_{g}")).collect();
    let b = Arc::new(StructuredAlgebra::diagonal(labels));
    let action = LinMap::from_fn(vec![n, n], n, |t| SparseVec::unit(group.mul(t[0], t[1])));
    let cocycle = LinMap::from_fn(vec![n, n], n, |t| b.unit.scale(gamma.value(t[0], t[1])));
    GlobalTwistedAction::new(hopf, b, action, cocycle)
}

/// The action induced on the indicator of `subset`.
pub fn functions_model(group: &FiniteGroup, gamma: &GroupCocycleTable, subset: &[usize]) -> Result<FunctionsModel, PartialError> {
    let global = translation_action(group, gamma)?;
    let idem = SparseVec::from_terms(subset.iter().map(|y| (*y, Scalar::one())).collect());
    let induced = induce_partial(&global, &idem)?;
    Ok(FunctionsModel { group: group.clone(), gamma: gamma.clone(), global, induced, subset: subset.to_vec() })
}

/// Z/2 acting on κ³ by swapping the first two coordinates on `D_a = span(e1, e2)`,
/// with `w_{a,a}` supplied and the other cocycle values `1_g 1_{gh}`.
pub fn partial_swap(w_aa: SparseVec) -> Result<GroupTwistedPartialAction, PartialError> {
    let g = FiniteGroup::z2();
    let a = Arc::new(StructuredAlgebra::diagonal(vec!["e1".into(), "e2".into(), "e3".into()]));
    let one = a.unit.clone();
    let d_a = SparseVec::from_terms(vec![(0, Scalar::one()), (1, Scalar::one())]);
    let id = LinMap::from_fn(vec![3], 3, |t| SparseVec::unit(t[0]));
    let swap = LinMap::from_fn(vec![3], 3, |t| match t[0] {
        0 => SparseVec::unit(1),
        1 => SparseVec::unit(0),
        _ => SparseVec::new(),
    });
    let (e, x) = (g.identity, 1 - g.identity);
    let mut maps = vec![id.clone(), id];
    maps[x] = swap;
    let mut idems = vec![one.clone(), one.clone()];
    idems[x] = d_a.clone();
    let mut w = vec![d_a.clone(); 4];
    w[e * 2 + e] = one;
    w[x * 2 + x] = w_aa;
    GroupTwistedPartialAction::new(g, a, idems, maps, w)
}
