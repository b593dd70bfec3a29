use std::time::Instant;

use hp_algebra::Status;
use hp_scenarios::*;

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn passes(r: &ScenarioReport, section: &str, check: &str) -> bool {
    r.find(section, check).is_some_and(|c| c.status == Status::Pass)
}

fn scenario(name: &str, failed: &mut u32) -> Option<ScenarioReport> {
    let clock = Instant::now();
    let cfg = ScenarioConfig::default_for(name).unwrap();
    let run = match run_scenario(&cfg, None) {
        Ok(run) => run,
        Err(e) => {
            line(&format!("{name}: runs ({e})"), false, failed);
            return None;
        }
    };
    let r = run.report;
    let s = &r.summary;
    line(
        &format!("{name}: all {} checks pass, {} failed, {} skipped ({:.1?})", s.checks, s.failed, s.skipped, clock.elapsed()),
        s.failed == 0 && s.skipped == 0 && s.checks > 0,
        failed,
    );
    for f in r.failing() {
        println!("     failing: {f}");
    }
    let diff = check_golden(&default_golden_dir(), &r);
    let ok = matches!(&diff, Ok(d) if d.is_empty());
    line(&format!("{name}: report matches the golden file"), ok, failed);
    if let Ok(d) = diff {
        for l in d.iter().take(10) {
            println!("     {l}");
        }
    }
    Some(r)
}

fn main() {
    let mut failed = 0;

    if let Some(r) = scenario("klein4", &mut failed) {
        let fact = |k: &str| r.facts.get(k).map(String::as_str).unwrap_or("");
        line("klein4: dim A′ = 2⁴·3 = 48, both Hopf algebras of dim 64", fact("dim_a") == "48" && fact("dim_acting_hopf") == "64" && fact("dim_cosemidirect") == "64", &mut failed);
        line("klein4: γ(a,b) = 1, γ(b,a) = −1", fact("gamma(a,b)") == "1" && fact("gamma(b,a)") == "-1", &mut failed);
        line(
            "klein4: nine reference values, cocycle law on 64 triples, not a coboundary",
            passes(&r, "group-cocycle", "reference-values") && passes(&r, "group-cocycle", "group-cocycle-law") && passes(&r, "group-cocycle", "not-coboundary"),
            &mut failed,
        );
        let sampled = r.find("crossed-product", "sampled-associativity");
        line(
            "klein4: 10⁴ seeded associativity samples, zero failures",
            sampled.is_some_and(|c| c.status == Status::Pass && c.checked == 10_000),
            &mut failed,
        );
        line("klein4: cocycle classified as normalized", fact("cocycle_kind") == "normalized-cocycle", &mut failed);
    }

    if let Some(r) = scenario("smoke-z2", &mut failed) {
        let n: u64 = r.facts["crossed_product_rank"].parse().unwrap();
        let ex = r.find("crossed-product", "exhaustive-associativity");
        line(
            &format!("smoke-z2: exhaustive associativity over all {}³ basis triples", n),
            ex.is_some_and(|c| c.status == Status::Pass && c.checked == n * n * n),
            &mut failed,
        );
        line("smoke-z2: cocycle classified as trivial", r.facts["cocycle_kind"] == "trivial", &mut failed);
        line("smoke-z2: γ(g)e_r = e_{gr}γ(g) on grouplike pairs", passes(&r, "cleft", "grouplike-e-commutation"), &mut failed);
    }

    if let Some(r) = scenario("induced-functions", &mut failed) {
        for c in ["trivial-u-gives-trivial-omega", "full-idempotent-gives-global", "inverse-closed-form"] {
            line(&format!("induced-functions: reduction {c}"), passes(&r, "reductions", c), &mut failed);
        }
        let corner = r.sections.iter().find(|s| s.name == "corner");
        line(
            "induced-functions: corner (1#1)(B#H)(1#1) = A#H",
            corner.is_some_and(|s| !s.checks.is_empty() && s.checks.iter().all(|c| c.status == Status::Pass)),
            &mut failed,
        );
    }

    if let Some(r) = scenario("group-dictionary", &mut failed) {
        line(
            "group-dictionary: both directions round-trip",
            passes(&r, "round-trip", "group-side-identical") && passes(&r, "round-trip", "hopf-side-identical"),
            &mut failed,
        );
        line("group-dictionary: A#κG is associative", passes(&r, "crossed-product", "exhaustive-associativity"), &mut failed);
    }

    for entry in CATALOGUE.iter() {
        let m = entry.mutation();
        let clock = Instant::now();
        let cfg = entry.scenario_config().unwrap();
        let base = run_scenario(&cfg, None).map(|r| r.report.passed()).unwrap_or(false);
        let run = run_scenario(&cfg, Some(&m));
        let (ok, failing) = match &run {
            Ok(run) => {
                let failing = run.report.failing();
                (base && entry.expected.iter().all(|e| failing.iter().any(|f| f == e)), failing)
            }
            Err(e) => (false, vec![e.to_string()]),
        };
        line(
            &format!("mutation {m} on {}: {} fail ({} in total, {:.1?})", cfg.name, entry.expected.join(", "), failing.len(), clock.elapsed()),
            ok,
            &mut failed,
        );
        if !ok {
            println!("     failing: {failing:?}");
        }
    }

    let cfg = ScenarioConfig::default_for("smoke-z2").unwrap();
    let json = |jobs| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().unwrap();
        pool.install(|| run_scenario(&cfg, None).unwrap().report.to_json())
    };
    line("smoke-z2: byte-identical reports with 1 and 8 workers", json(1) == json(8), &mut failed);

    let bad = ["klein4:negate:0", "omega:negate", "omega:negate:x", "omega:nope:0"];
    line("malformed mutations are rejected", bad.iter().all(|s| s.parse::<Mutation>().is_err()), &mut failed);
    line(
        "out-of-range mutation index is an error",
        matches!(run_scenario(&cfg, Some(&"omega:negate:999".parse().unwrap())), Err(ScenarioError::Mutation(_))),
        &mut failed,
    );
    line(
        "torus-only mutations are rejected on group-dictionary",
        run_scenario(&ScenarioConfig::default_for("group-dictionary").unwrap(), Some(&"antipode:corrupt:0".parse().unwrap())).is_err(),
        &mut failed,
    );
    line(
        "unknown scenario and invalid configs are config errors",
        matches!(ScenarioConfig::default_for("nope"), Err(ScenarioError::UnknownScenario(_)))
            && matches!(ScenarioConfig::from_json(r#"{"name": "smoke-z2", "m": 3}"#, "smoke-z2"), Err(ScenarioError::Config(_))),
        &mut failed,
    );

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
