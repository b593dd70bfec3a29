use std::sync::Arc;
use std::time::Instant;

use hp_algebra::{all_pass, CheckResult, LinMap};
use hp_constructors::{FiniteGroup, GroupCocycleTable, GroupSubset};
use hp_crossed::{build_crossed_product, BasisAlgebra, CrossedProduct};
use hp_gauge::*;
use hp_partial::{functions_model, torus_model, verify_symmetric, TwistedPartialAction};
use hp_scalars::{Scalar, SparseVec};

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn report(prefix: &str, checks: &[CheckResult], failed: &mut u32) {
    for c in checks {
        line(&format!("{prefix}: {} ({} cases)", c.name, c.checked), c.passed(), failed);
    }
}

fn symmetric(t: &TwistedPartialAction) -> TwistedPartialAction {
    let inv = verify_symmetric(t).inverse.expect("symmetric");
    t.clone().with_inverse(inv).unwrap()
}

fn set_column(m: &LinMap, i: usize, v: SparseVec) -> LinMap {
    let mut cols = m.columns().to_vec();
    cols[i] = v;
    LinMap::from_columns(m.sources.clone(), m.target, cols)
}

fn is_identity(m: &LinMap) -> bool {
    m.columns().iter().enumerate().all(|(i, c)| *c == SparseVec::unit(i))
}

/// `Σ f(h_(1))(h_(2)·1)`.
fn absorbed(gp: &GaugePair, f: &LinMap) -> LinMap {
    let s = &gp.source;
    LinMap::from_fn(f.sources.clone(), f.target, |x| {
        let mut out = SparseVec::new();
        for (p, q, c) in s.hopf.delta(x[0]) {
            out = out.axpy(c, &s.amul(f.at(&[*p]), s.unit_action(*q)));
        }
        out
    })
}

fn identity_case(name: &str, t: &TwistedPartialAction, cp: &Arc<CrossedProduct>, failed: &mut u32) {
    let clock = Instant::now();
    let gp = identity_gauge(t);
    report(&format!("{name} identity gauge"), &verify_gauge(&gp), failed);
    let iso = gauge_isomorphism(&gp, cp, cp);
    report(&format!("{name} identity gauge Φ/Ψ"), &iso.checks, failed);
    line(&format!("{name}: the identity gauge gives Φ = Ψ = id"), is_identity(&iso.forward) && is_identity(&iso.backward), failed);
    let ex = extract_gauge(cp, cp, &iso.forward);
    let ok = match &ex {
        Ok((g2, pre)) => all_pass(pre) && g2.u == gp.u && g2.v == gp.v,
        Err(e) => {
            println!("  {e}");
            false
        }
    };
    line(&format!("{name}: extracting from Φ = id gives u = v = (h ↦ h·1)"), ok, failed);
    println!("  {name} identity gauge {:.1?}", clock.elapsed());
}

fn main() {
    let start = Instant::now();
    let mut failed = 0;

    let k4 = FiniteGroup::klein4();
    let x = GroupSubset::from_names(&k4, &["e".into(), "a".into(), "b".into()]).unwrap();
    let model = torus_model(&k4, &k4.regular_embedding(), 2, &x, &GroupCocycleTable::klein4_table(), true).unwrap();
    let t = symmetric(&model.twisted);
    let cp = Arc::new(build_crossed_product(&t).unwrap());
    identity_case("Klein four", &t, &cp, &mut failed);

    let z2 = FiniteGroup::z2();
    let xs = GroupSubset::from_names(&z2, &["a".into()]).unwrap();
    let smoke = torus_model(&z2, &z2.regular_embedding(), 2, &xs, &GroupCocycleTable::trivial(z2.clone()), true).unwrap();
    let ts = symmetric(&smoke.twisted);
    let cps = Arc::new(build_crossed_product(&ts).unwrap());
    identity_case("smoke Z/2", &ts, &cps, &mut failed);

    // λ = ζ_2^c with c = (0, 1, 1, 1) on (e, a, b, c); not a character, so σ
    // differs from ω by the coboundary λ(g)⁻¹λ(s)⁻¹λ(gs).
    let clock = Instant::now();
    let gn = k4.order();
    let c = [0i64, 1, 1, 1];
    let lambda: Vec<Scalar> = (0..gn).map(|g| Scalar::zeta(2, c[g])).collect();
    let (gp, target_checks) = character_gauge(&t, |h| h % gn, &lambda).unwrap();
    report("Klein four coboundary gauge", &verify_gauge(&gp), &mut failed);
    report("Klein four coboundary gauge, target re-verified", &target_checks, &mut failed);
    line("Klein four coboundary gauge: target carries ω′", gp.target.inverse_cocycle().is_some(), &mut failed);
    line("Klein four coboundary gauge: • = ·", gp.target.action() == t.action(), &mut failed);
    let h = &t.hopf;
    let mut twisted = true;
    for x in 0..h.dim() {
        for y in 0..h.dim() {
            let xy = h.mul_basis(x, y).iter().next().map(|(i, _)| *i).unwrap();
            let (g, s, gs) = (x % gn, y % gn, xy % gn);
            let f = lambda[g].inv().unwrap() * lambda[s].inv().unwrap() * lambda[gs].clone();
            twisted &= gp.target.omega(x, y) == &t.omega(x, y).scale(&f);
        }
    }
    line("Klein four coboundary gauge: σ(h, k) = λ(g)⁻¹λ(s)⁻¹λ(gs) ω(h, k) on all 4096 pairs", twisted, &mut failed);
    line("Klein four coboundary gauge: σ ≠ ω", gp.target.cocycle() != t.cocycle(), &mut failed);
    println!("  gauge and target {:.1?}", clock.elapsed());

    let clock = Instant::now();
    let cp2 = Arc::new(build_crossed_product(&gp.target).unwrap());
    let iso = gauge_isomorphism(&gp, &cp, &cp2);
    report("Klein four A#_ω H → A#_σ H", &iso.checks, &mut failed);
    line("Klein four: Φ is not the identity", !is_identity(&iso.forward), &mut failed);
    println!("  isomorphism {:.1?}", clock.elapsed());

    let clock = Instant::now();
    match extract_gauge(&cp, &cp2, &iso.forward) {
        Ok((g2, pre)) => {
            report("Klein four extraction preconditions", &pre, &mut failed);
            line("Klein four extraction: u′ = Σ u(h_(1))(h_(2)·1)", g2.u == absorbed(&gp, &gp.u), &mut failed);
            line("Klein four extraction: v′ = Σ v(h_(1))(h_(2)·1)", g2.v == absorbed(&gp, &gp.v), &mut failed);
            report("Klein four extracted gauge", &verify_gauge(&g2), &mut failed);
            line("Klein four extraction: Φ rebuilt from u′ equals Φ", gauge_map(&cp, &cp2, &g2.u) == iso.forward, &mut failed);
        }
        Err(e) => line(&format!("Klein four extraction: {e}"), false, &mut failed),
    }
    println!("  extraction {:.1?}", clock.elapsed());

    // Mutations.
    let one = h.unit_index().unwrap();
    let unit_a = &t.carrier.unit;
    let k = (0..h.dim()).find(|&k| t.unit_action(k) != unit_a && !t.unit_action(k).is_zero()).unwrap();
    let spill = gp.u.at(&[k]).add(&unit_a.sub(t.unit_action(k)));
    let broken = GaugePair { u: set_column(&gp.u, k, spill), ..gp.clone() };
    let checks = verify_gauge(&broken);
    let ii = checks.iter().find(|c| c.name == "gauge-absorbs-unit-right").unwrap();
    println!("  u({}) += 1 − h·1: {:?}", h.labels()[k], ii.witness);
    line("Klein four: u violating clause (ii) fails with a witness", !ii.passed() && ii.witness.is_some(), &mut failed);

    let k = (0..h.dim()).find(|&k| k != one && !gp.v.at(&[k]).is_zero()).unwrap();
    let broken = GaugePair { v: set_column(&gp.v, k, gp.v.at(&[k]).scale(&Scalar::from_int(2))), ..gp.clone() };
    let i = verify_gauge(&broken).into_iter().find(|c| c.name == "gauge-inverse").unwrap();
    line("Klein four: v scaled by 2 at one element fails clause (i)", !i.passed(), &mut failed);
    let iso_b = gauge_isomorphism(&broken, &cp, &cp2);
    let back = iso_b.checks.iter().find(|c| c.name == "psi-after-phi").unwrap();
    println!("  v({}) scaled by 2: Ψ∘Φ fails on {} of {}, first at {:?}", h.labels()[k], back.failures, back.checked, back.witness);
    line("Klein four: v violating clause (i) gives Ψ∘Φ ≠ id with a witness", !back.passed() && back.witness.is_some(), &mut failed);

    // Conjugation by 1#u_a on the global smash product of functions on the
    // Klein four group: an algebra automorphism moving δ_x#1 to δ_{ax}#1.
    let fm = functions_model(&k4, &GroupCocycleTable::trivial(k4.clone()), &[0, 1]).unwrap();
    let global = symmetric(&fm.global.as_twisted().unwrap());
    let gcp = Arc::new(build_crossed_product(&global).unwrap());
    let a = k4.index_of("a").unwrap();
    let ua = gcp.sharp(&global.carrier.unit, &SparseVec::unit(a));
    let conj = LinMap::from_fn(vec![gcp.rank()], gcp.rank(), |x| {
        gcp.mul(&gcp.mul(&ua, &SparseVec::unit(x[0])).unwrap(), &ua).unwrap()
    });
    let err = extract_gauge(&gcp, &gcp, &conj).err();
    println!("  conjugation by 1#u_a: {err:?}");
    line("conjugation by 1#u_a is an algebra automorphism rejected as NotALinear",
        matches!(err, Some(GaugeError::NotALinear { .. })), &mut failed);
    let zero = LinMap::from_fn(vec![gcp.rank()], gcp.rank(), |_| SparseVec::new());
    line("the zero map is rejected as NotAlgebraMap",
        matches!(extract_gauge(&gcp, &gcp, &zero), Err(GaugeError::NotAlgebraMap { .. })), &mut failed);
    let unit = BasisAlgebra::unit(gcp.as_ref());
    let rank_one = LinMap::from_fn(vec![gcp.rank()], gcp.rank(), |x| {
        if x[0] == 0 { unit.clone() } else { SparseVec::new() }
    });
    line("a non-multiplicative linear map is rejected as NotAlgebraMap",
        matches!(extract_gauge(&gcp, &gcp, &rank_one), Err(GaugeError::NotAlgebraMap { .. })), &mut failed);

    let json = serde_json::to_string(&gp).is_ok();
    line("gauge pair serializes to JSON", json, &mut failed);

    println!("total {:.1?}", start.elapsed());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
