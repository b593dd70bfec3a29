//! Verification stages shared by the scenarios. Each appends one or more
//! sections to the report and hands on what later stages need.

use std::sync::Arc;

use hp_algebra::CheckResult;
use hp_cleft::{build_cleft_maps, cleaving_checks, cleft_isomorphism, gamma_prime_normalized_check, reconstruct_action, verify_partially_cleft};
use hp_crossed::product::projector_idempotent;
use hp_crossed::{build_crossed_product, coinvariants, verify_associativity, AssociativityMode, CrossedProduct, SampleSpec};
use hp_gauge::{gauge_isomorphism, identity_gauge, verify_gauge};
use hp_partial::{classify_cocycle, verify_symmetric, verify_twisted_partial, CocycleKind, TwistedPartialAction};
use hp_scalars::SparseVec;

use crate::config::ScenarioConfig;
use crate::mutation::Mutation;
use crate::report::ScenarioReport;
use crate::ScenarioError;

fn prefixed(prefix: &str, checks: Vec<CheckResult>) -> Vec<CheckResult> {
    checks.into_iter().map(|c| c.in_section(prefix)).collect()
}

fn mutated<T>(m: Option<&Mutation>, targets: &[&str], x: T, f: impl FnOnce(&Mutation, &T) -> Result<T, ScenarioError>) -> Result<T, ScenarioError> {
    match m {
        Some(m) if targets.contains(&m.target.as_str()) => f(m, &x),
        _ => Ok(x),
    }
}

/// The axioms of a twisted partial action, then normalization, cocycle law
/// and the classification against `expected`. A trivial ω also meets an
/// expected normalized cocycle, since a small subset can hide the table.
pub fn axioms(r: &mut ScenarioReport, t: &TwistedPartialAction, expected: CocycleKind) {
    r.section("twisted-partial", verify_twisted_partial(t));
    let cls = classify_cocycle(t);
    let mut checks: Vec<CheckResult> = cls.checks.into_iter().filter(|c| c.name != "trivial-cocycle").collect();
    checks.push(CheckResult::from_bool(
        "classification",
        cls.kind == expected || (expected == CocycleKind::NormalizedCocycle && cls.kind == CocycleKind::Trivial),
        format!("classified {:?}, expected {expected:?}", cls.kind),
    ));
    r.fact("cocycle_kind", serde_json::to_value(cls.kind).expect("kind").as_str().unwrap_or_default());
    r.section("cocycle", checks);
}

/// Solves for ω′ and attaches it; the symmetric suite is reported against
/// the attached (possibly mutated) ω′.
pub fn symmetric(r: &mut ScenarioReport, t: &TwistedPartialAction, m: Option<&Mutation>) -> Result<Option<TwistedPartialAction>, ScenarioError> {
    let sym = verify_symmetric(t);
    let Some(w) = sym.inverse.clone() else {
        r.section("symmetric", sym.checks);
        return Ok(None);
    };
    let attached = t.clone().with_inverse(w).map_err(|e| ScenarioError::Build(e.to_string()))?;
    let attached = mutated(m, &["omega-prime"], attached, |m, t| m.apply_tpa(t))?;
    if m.is_some_and(|m| m.targets("omega-prime")) {
        r.section("symmetric", verify_symmetric(&attached).checks);
    } else {
        r.section("symmetric", sym.checks);
    }
    Ok(Some(attached))
}

/// π, the structure checks, associativity (every triple when the rank is
/// small, seeded samples otherwise), the comodule structure and coinvariants.
pub fn crossed(r: &mut ScenarioReport, t: &TwistedPartialAction, cfg: &ScenarioConfig) -> Option<Arc<CrossedProduct>> {
    let cp = match build_crossed_product(t) {
        Ok(cp) => Arc::new(cp),
        Err(e) => {
            r.section("crossed-product", vec![CheckResult::fail("build", e.to_string())]);
            return None;
        }
    };
    r.fact("crossed_product_rank", cp.rank());
    r.fact("crossed_product_ambient_dim", cp.ambient_dim());
    let small = cp.rank() <= 24;
    let mut checks = vec![projector_idempotent(&cp.tpa, &cp.projector)];
    checks.extend(cp.verify_structure(small));
    let mode = if small {
        AssociativityMode::Exhaustive
    } else {
        AssociativityMode::Sampled(SampleSpec { count: cfg.sample_count, seed: cfg.seed })
    };
    checks.extend(verify_associativity(&cp, mode));
    let ca = cp.comodule_structure();
    checks.extend(ca.verify());
    let (inv, ic) = coinvariants(&ca);
    checks.extend(ic);
    checks.push(CheckResult::from_bool(
        "coinvariants-are-coefficients",
        inv.same_as(&cp.coefficient_subspace()),
        format!("coinvariants of dimension {} differ from A#1", inv.dim()),
    ));
    r.section("crossed-product", checks);
    Some(cp)
}

/// Cleaving maps, the cleft clauses, reconstruction on the basis `a#1` and
/// the isomorphism with the rebuilt crossed product. With `grouplike`, also
/// `γ(g)e_r = e_{gr}γ(g)` on pairs of basis elements.
pub fn cleft(r: &mut ScenarioReport, cp: &Arc<CrossedProduct>, m: Option<&Mutation>, grouplike: bool) -> Result<(), ScenarioError> {
    let cd = match build_cleft_maps(cp) {
        Ok((cd, _)) => cd,
        Err(e) => {
            r.section("cleft", vec![CheckResult::fail("cleaving-maps", e.to_string())]);
            return Ok(());
        }
    };
    let t = &cp.tpa;
    let one = t.hopf.one().clone();
    let basis = (0..t.dim_a()).map(|a| cp.sharp(&SparseVec::unit(a), &one)).collect();
    let cd = cd.with_coinvariant_basis(basis).map_err(|e| ScenarioError::Build(e.to_string()))?;
    let cd = mutated(m, &["gamma", "gamma-prime"], cd, |m, cd| m.apply_cleft(cd))?;
    let mut checks = cleaving_checks(&cd, cp);
    let rep = verify_partially_cleft(&cd);
    for (clause, cs) in rep.clauses {
        checks.extend(prefixed(&clause, cs));
    }
    checks.push(gamma_prime_normalized_check(&cd));
    if grouplike {
        let h = cd.hopf();
        let e = cd.e();
        checks.push(hp_algebra::check_tuples("grouplike-e-commutation", &[h.labels(), h.labels()], |x| {
            let gr = h.mul_basis(x[0], x[1]);
            cd.mul(cd.gamma.at(&[x[0]]), e.at(&[x[1]])) == cd.mul(&e.apply(gr), cd.gamma.at(&[x[0]]))
        }));
    }
    match reconstruct_action(&cd) {
        Ok(rec) => {
            let same = rec.tpa.action() == t.action()
                && rec.tpa.cocycle() == t.cocycle()
                && rec.tpa.inverse_cocycle() == t.inverse_cocycle()
                && rec.tpa.carrier.mult == t.carrier.mult;
            checks.extend(prefixed("reconstruction", rec.checks.clone()));
            checks.push(CheckResult::from_bool("reconstruction-exact", same, "reconstructed structure constants differ"));
            match build_crossed_product(&rec.tpa) {
                Ok(cp2) => checks.extend(prefixed("isomorphism", cleft_isomorphism(&cd, &Arc::new(cp2)).checks)),
                Err(e) => checks.push(CheckResult::fail("isomorphism", e.to_string())),
            }
        }
        Err(e) => checks.push(CheckResult::fail("reconstruction", e.to_string())),
    }
    r.section("cleft", checks);
    Ok(())
}

/// The identity gauge `u = v = (h ↦ h·1)` and its isomorphism.
pub fn gauge(r: &mut ScenarioReport, cp: &Arc<CrossedProduct>, m: Option<&Mutation>) -> Result<(), ScenarioError> {
    let gp = identity_gauge(&cp.tpa);
    let gp = mutated(m, &["u", "v", "sigma"], gp, |m, gp| m.apply_gauge(gp))?;
    let mut checks = verify_gauge(&gp);
    let dst = if gp.target.cocycle() == cp.tpa.cocycle() {
        Ok(cp.clone())
    } else {
        build_crossed_product(&gp.target).map(Arc::new)
    };
    match dst {
        Ok(dst) => {
            let iso = gauge_isomorphism(&gp, cp, &dst);
            checks.extend(prefixed("isomorphism", iso.checks));
        }
        Err(e) => checks.push(CheckResult::fail("isomorphism", e.to_string())),
    }
    r.section("gauge", checks);
    Ok(())
}

/// Runs the shared tail: symmetric, crossed product, cleft, gauge.
pub fn tail(
    r: &mut ScenarioReport,
    t: &TwistedPartialAction,
    cfg: &ScenarioConfig,
    m: Option<&Mutation>,
    grouplike: bool,
) -> Result<Option<Arc<CrossedProduct>>, ScenarioError> {
    let Some(sym) = symmetric(r, t, m)? else {
        r.skip("crossed-product", "not symmetric");
        r.skip("cleft", "not symmetric");
        r.skip("gauge", "not symmetric");
        return Ok(None);
    };
    let Some(cp) = crossed(r, &sym, cfg) else {
        r.skip("cleft", "no crossed product");
        r.skip("gauge", "no crossed product");
        return Ok(None);
    };
    cleft(r, &cp, m, grouplike)?;
    gauge(r, &cp, m)?;
    Ok(Some(cp))
}

pub fn expected_kind(cfg: &ScenarioConfig) -> CocycleKind {
    if cfg.cocycle == "trivial" {
        CocycleKind::Trivial
    } else {
        CocycleKind::NormalizedCocycle
    }
}
