//! The four named scenarios.

use std::sync::Arc;

use hp_algebra::{validate_hopf, CheckResult, HopfAlgebraData};
use hp_constructors::{pairing_checks, smash_cosemidirect_pairing_table, GroupCocycleTable};
use hp_crossed::{build_crossed_product, global_corner_embedding, verify_associativity, AssociativityMode};
use hp_partial::{
    classify_cocycle, functions_model, induce_partial, partial_swap, torus_model, CocycleKind,
    GroupTwistedPartialAction, PartialAction, TorusModel, TwistedPartialAction,
};
use hp_scalars::{Scalar, SparseVec};

use crate::config::ScenarioConfig;
use crate::mutation::Mutation;
use crate::report::ScenarioReport;
use crate::stages;
use crate::ScenarioError;

/// The acting Hopf algebra and the twisted partial action a scenario is about.
#[derive(Clone, Debug)]
pub struct Built {
    pub hopf: Arc<HopfAlgebraData>,
    pub tpa: TwistedPartialAction,
}

pub struct ScenarioRun {
    pub report: ScenarioReport,
    pub built: Built,
}

fn build_err(e: impl ToString) -> ScenarioError {
    ScenarioError::Build(e.to_string())
}

fn check_applicable(cfg: &ScenarioConfig, m: Option<&Mutation>, allowed: &[&str]) -> Result<(), ScenarioError> {
    match m {
        Some(m) if !allowed.contains(&m.target.as_str()) => {
            Err(ScenarioError::Mutation(format!("{m} does not apply to scenario {}", cfg.name)))
        }
        _ => Ok(()),
    }
}

const TPA_TARGETS: [&str; 8] = ["omega", "action", "omega-prime", "gamma", "gamma-prime", "u", "v", "sigma"];

fn torus(cfg: &ScenarioConfig, table: &GroupCocycleTable) -> Result<TorusModel, ScenarioError> {
    let group = cfg.group()?;
    let subset = cfg.subset(&group)?;
    // The table is checked in its own section, so a broken one still builds.
    torus_model(&group, &group.regular_embedding(), cfg.m, &subset, table, false).map_err(build_err)
}

fn functions(cfg: &ScenarioConfig) -> Result<hp_partial::FunctionsModel, ScenarioError> {
    let group = cfg.group()?;
    let subset: Vec<usize> = cfg.subset(&group)?.members.iter().copied().collect();
    functions_model(&group, &cfg.cocycle_table(&group)?, &subset).map_err(build_err)
}

/// `w_{a,a} = -1_a` is fixed by the swap, so the cocycle law holds; over Q it
/// is not a coboundary since -1 is not a square.
fn swap() -> Result<GroupTwistedPartialAction, ScenarioError> {
    let w = SparseVec::from_terms(vec![(0, Scalar::from_int(-1)), (1, Scalar::from_int(-1))]);
    partial_swap(w).map_err(build_err)
}

/// Builds the scenario's objects without verifying anything.
pub fn build(cfg: &ScenarioConfig) -> Result<Built, ScenarioError> {
    cfg.validate()?;
    match cfg.name.as_str() {
        "klein4" | "smoke-z2" => {
            let model = torus(cfg, &cfg.cocycle_table(&cfg.group()?)?)?;
            Ok(Built { hopf: model.smash.clone(), tpa: model.twisted })
        }
        "induced-functions" => {
            let fm = functions(cfg)?;
            Ok(Built { hopf: fm.induced.tpa.hopf.clone(), tpa: fm.induced.tpa })
        }
        "group-dictionary" => {
            let t = swap()?.to_twisted().map_err(build_err)?;
            Ok(Built { hopf: t.hopf.clone(), tpa: t })
        }
        other => Err(ScenarioError::UnknownScenario(other.to_string())),
    }
}

pub fn run(cfg: &ScenarioConfig, m: Option<&Mutation>) -> Result<ScenarioRun, ScenarioError> {
    cfg.validate()?;
    let mut run = match cfg.name.as_str() {
        "klein4" | "smoke-z2" => run_torus(cfg, m),
        "induced-functions" => run_functions(cfg, m),
        "group-dictionary" => run_dictionary(cfg, m),
        other => Err(ScenarioError::UnknownScenario(other.to_string())),
    }?;
    run.report.mutation = m.map(|m| m.to_string());
    Ok(run)
}

/// Entries of the Klein four table on non-identity pairs, rows and columns in
/// the order a, b, ab.
const KLEIN_REFERENCE: [[i64; 3]; 3] = [[-1, 1, -1], [-1, -1, 1], [1, -1, -1]];

fn group_cocycle_section(r: &mut ScenarioReport, cfg: &ScenarioConfig, table: &GroupCocycleTable) {
    let g = &table.group;
    let mut checks = vec![table.normalization(), table.cocycle_law()];
    let coboundary = table.is_coboundary();
    r.fact("group_cocycle_is_coboundary", coboundary);
    for x in 0..g.order() {
        for y in 0..g.order() {
            if x != g.identity && y != g.identity {
                r.fact(&format!("gamma({},{})", g.names[x], g.names[y]), table.value(x, y));
            }
        }
    }
    if cfg.cocycle == "klein4" {
        let ok = (1..4).all(|x| (1..4).all(|y| *table.value(x, y) == Scalar::from_int(KLEIN_REFERENCE[x - 1][y - 1])));
        checks.push(CheckResult::from_bool("reference-values", ok, "table differs from the reference values"));
        checks.push(CheckResult::from_bool("not-coboundary", !coboundary, "a coboundary witness exists"));
    }
    r.section("group-cocycle", checks);
}

/// Each `h·e_a` is zero or one basis element times an m-th root of unity.
fn monomial_check(t: &TwistedPartialAction, m: u32) -> CheckResult {
    hp_algebra::check_tuples("action-monomial", &[t.h_labels(), t.a_labels()], |x| {
        let v = t.act(x[0], x[1]);
        match v.nnz() {
            0 => true,
            1 => {
                let c = v.iter().next().map(|(_, c)| c.clone()).unwrap();
                let mut p = Scalar::one();
                for _ in 0..m {
                    p = &p * &c;
                }
                p.is_one()
            }
            _ => false,
        }
    })
}

fn run_torus(cfg: &ScenarioConfig, m: Option<&Mutation>) -> Result<ScenarioRun, ScenarioError> {
    let mut allowed = TPA_TARGETS.to_vec();
    allowed.extend(["cocycle-table", "antipode"]);
    check_applicable(cfg, m, &allowed)?;
    let mut r = ScenarioReport::new(cfg);
    let group = cfg.group()?;
    let table = cfg.cocycle_table(&group)?;
    let table = match m {
        Some(m) if m.targets("cocycle-table") => m.apply_table(&table)?,
        _ => table,
    };
    let model = torus(cfg, &table)?;
    let mut t = model.twisted.clone();
    let mut smash = model.smash.clone();
    if let Some(m) = m.filter(|m| m.targets("antipode")) {
        smash = Arc::new(m.apply_hopf(&smash)?);
        let pa = PartialAction::new(smash.clone(), t.carrier.clone(), t.action().clone()).map_err(build_err)?;
        t = TwistedPartialAction::new(pa, t.cocycle().clone()).map_err(build_err)?;
    }
    if let Some(m) = m.filter(|m| m.targets("omega") || m.targets("action")) {
        t = m.apply_tpa(&t)?;
    }

    r.fact("dim_acting_hopf", smash.dim());
    r.fact("dim_cosemidirect", model.cosemidirect.dim());
    r.fact("dim_a", t.dim_a());
    r.section("hopf-smash", validate_hopf(&smash));
    r.section("hopf-cosemidirect", validate_hopf(&model.cosemidirect));
    let table_m = smash_cosemidirect_pairing_table(&group, cfg.m, cfg.n);
    r.section("pairing", pairing_checks(&model.smash, &model.cosemidirect, &table_m));
    let expected_dim = (cfg.m as usize).pow(cfg.n as u32) * model.subset.len();
    r.section(
        "model",
        vec![
            CheckResult::from_bool("dimension-count", t.dim_a() == expected_dim, format!("dim A = {}, expected {expected_dim}", t.dim_a())),
            monomial_check(&t, cfg.m),
        ],
    );
    group_cocycle_section(&mut r, cfg, &table);
    stages::axioms(&mut r, &t, stages::expected_kind(cfg));
    stages::tail(&mut r, &t, cfg, m, cfg.name == "smoke-z2")?;
    Ok(ScenarioRun { report: r, built: Built { hopf: smash, tpa: t } })
}

fn run_functions(cfg: &ScenarioConfig, m: Option<&Mutation>) -> Result<ScenarioRun, ScenarioError> {
    check_applicable(cfg, m, &TPA_TARGETS)?;
    let mut r = ScenarioReport::new(cfg);
    let fm = functions(cfg)?;
    let mut t = fm.induced.tpa.clone();
    if let Some(m) = m.filter(|m| m.targets("omega") || m.targets("action")) {
        t = m.apply_tpa(&t)?;
    }
    r.fact("dim_b", fm.global.carrier.dim);
    r.fact("dim_a", t.dim_a());
    let mut global = fm.global.verify_laws();
    global.extend(fm.global.cocycle_checks());
    r.section("global", global);
    stages::axioms(&mut r, &t, stages::expected_kind(cfg));

    let group = &fm.group;
    let trivial = functions_model(group, &GroupCocycleTable::trivial(group.clone()), &fm.subset).map_err(build_err)?;
    let full = induce_partial(&fm.global, &fm.global.carrier.unit).map_err(build_err)?;
    let u_inv = fm.global.inverse_cocycle().map_err(build_err)?;
    let closed = fm.induced.inverse_from_global(&fm.global, &u_inv);
    let solved = hp_partial::verify_symmetric(&fm.induced.tpa).inverse;
    r.section(
        "reductions",
        vec![
            CheckResult::from_bool(
                "trivial-u-gives-trivial-omega",
                classify_cocycle(&trivial.induced.tpa).kind == CocycleKind::Trivial,
                "ω induced by u ≡ 1 is not trivial",
            ),
            CheckResult::from_bool(
                "full-idempotent-gives-global",
                full.tpa.action() == &fm.global.action && full.tpa.cocycle() == &fm.global.cocycle,
                "idem = 1_B does not give back the global action",
            ),
            CheckResult::from_bool(
                "inverse-closed-form",
                solved.as_ref() == Some(&closed),
                "solved ω′ differs from Σ(h_(1)k_(1)·1)u⁻¹(h_(2),k_(2))(h_(3)·1)",
            ),
        ],
    );
    let cp = stages::tail(&mut r, &t, cfg, m, false)?;
    match cp {
        Some(cp) => r.section("corner", global_corner_embedding(&fm.global, &fm.induced, &cp)),
        None => r.skip("corner", "no crossed product"),
    }
    Ok(ScenarioRun { report: r, built: Built { hopf: t.hopf.clone(), tpa: t } })
}

fn run_dictionary(cfg: &ScenarioConfig, m: Option<&Mutation>) -> Result<ScenarioRun, ScenarioError> {
    check_applicable(cfg, m, &["omega", "action"])?;
    let mut r = ScenarioReport::new(cfg);
    let swap = swap()?;
    let mut laws = swap.verify();
    laws.push(swap.conjugation_check());
    r.section("group-laws", laws);
    let mut t = swap.to_twisted().map_err(build_err)?;
    if let Some(m) = m {
        t = m.apply_tpa(&t)?;
    }
    r.fact("dim_a", t.dim_a());
    stages::axioms(&mut r, &t, CocycleKind::NormalizedCocycle);
    let back = GroupTwistedPartialAction::from_twisted(&t, &swap.group);
    let round = match &back {
        Ok(back) => {
            let again = back.to_twisted().map_err(build_err)?;
            vec![
                CheckResult::from_bool("group-side-identical", *back == swap, "extracted group data differ"),
                CheckResult::from_bool(
                    "hopf-side-identical",
                    again.action() == t.action() && again.cocycle() == t.cocycle(),
                    "structure constants differ after the round trip",
                ),
            ]
        }
        Err(e) => vec![CheckResult::fail("extraction", e.to_string())],
    };
    r.section("round-trip", round);
    match build_crossed_product(&t) {
        Ok(cp) => {
            r.fact("crossed_product_rank", cp.rank());
            let mut checks = cp.verify_structure(true);
            checks.extend(verify_associativity(&cp, AssociativityMode::Exhaustive));
            r.section("crossed-product", checks);
        }
        Err(e) => r.section("crossed-product", vec![CheckResult::fail("build", e.to_string())]),
    }
    Ok(ScenarioRun { report: r, built: Built { hopf: t.hopf.clone(), tpa: t } })
}
