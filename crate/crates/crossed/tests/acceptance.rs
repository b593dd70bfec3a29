use std::sync::Arc;
use std::time::Instant;

use hp_algebra::{all_pass, find, tensor_vec, CheckResult, LinMap};
use hp_constructors::{group_algebra, FiniteGroup, GroupCocycleTable, GroupSubset};
use hp_crossed::product::{ambient_mul, projector, projector_idempotent};
use hp_crossed::*;
use hp_partial::{functions_model, induce_partial, torus_model, TorusModel, TwistedPartialAction};
use hp_scalars::{SparseVec, Subspace};

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn fails(checks: &[CheckResult], name: &str) -> bool {
    find(checks, name).map_or(false, |c| !c.passed() && c.witness.is_some())
}

fn klein() -> TorusModel {
    let k4 = FiniteGroup::klein4();
    let x = GroupSubset::from_names(&k4, &["e".into(), "a".into(), "b".into()]).unwrap();
    torus_model(&k4, &k4.regular_embedding(), 2, &x, &GroupCocycleTable::klein4_table(), true).unwrap()
}

fn smoke() -> TorusModel {
    let z2 = FiniteGroup::z2();
    let x = GroupSubset::from_names(&z2, &["a".into()]).unwrap();
    torus_model(&z2, &z2.regular_embedding(), 2, &x, &GroupCocycleTable::trivial(z2.clone()), true).unwrap()
}

/// Negates ω(h, l) at the first pair of non-unit basis elements with a nonzero value.
fn break_cocycle(t: &TwistedPartialAction) -> TwistedPartialAction {
    let dh = t.dim_h();
    let c = (0..dh * dh).find(|c| c / dh != 0 && c % dh != 0 && !t.omega(c / dh, c % dh).is_zero()).unwrap();
    let mut cols = t.cocycle().columns().to_vec();
    cols[c] = cols[c].neg();
    t.with_cocycle(LinMap::from_columns(vec![dh, dh], t.dim_a(), cols)).unwrap()
}

fn main() {
    let start = Instant::now();
    let mut failed = 0;

    let k4 = FiniteGroup::klein4();
    let model = klein();
    let t = Instant::now();
    let cp = Arc::new(build_crossed_product(&model.twisted).unwrap());
    println!("  Klein four A#H: rank of π = {} of {} ({:.1?})", cp.rank(), cp.ambient_dim(), t.elapsed());
    line("Klein four: π is idempotent and its rank is below dim A · dim H",
        projector_idempotent(&cp.tpa, &cp.projector).passed() && cp.rank() < cp.ambient_dim(), &mut failed);
    let t = Instant::now();
    let st = cp.verify_structure(false);
    for c in &st {
        line(&format!("Klein four crossed product: {} ({} cases)", c.name, c.checked), c.passed(), &mut failed);
    }
    println!("  structure checks {:.1?}", t.elapsed());
    let t = Instant::now();
    let asc = verify_associativity(&cp, AssociativityMode::Sampled(SampleSpec { count: 10_000, seed: 0 }));
    for c in &asc {
        line(&format!("Klein four associativity: {} ({} cases)", c.name, c.checked), c.passed(), &mut failed);
    }
    println!("  associativity {:.1?}", t.elapsed());

    let t = Instant::now();
    let ca = cp.comodule_structure();
    let cv = ca.verify();
    for c in &cv {
        line(&format!("Klein four comodule algebra: {} ({} cases)", c.name, c.checked), c.passed(), &mut failed);
    }
    let one = hp_crossed::BasisAlgebra::unit(cp.as_ref());
    line("ρ(1#1) = 1#1 ⊗ 1", ca.apply(&one) == tensor_vec(&one, cp.tpa.hopf.one(), cp.dim_h()), &mut failed);
    let (inv, ic) = coinvariants(&ca);
    line(&format!("Klein four coinvariants = A#1, dimension {} = dim A", inv.dim()),
        inv.same_as(&cp.coefficient_subspace()) && inv.dim() == cp.dim_a() && all_pass(&ic), &mut failed);
    println!("  comodule checks {:.1?}", t.elapsed());

    let sm = smoke();
    let scp = Arc::new(build_crossed_product(&sm.twisted).unwrap());
    println!("  smoke Z/2 A#H: rank {} of {}", scp.rank(), scp.ambient_dim());
    line("smoke Z/2: structure checks with the product formula over every a", all_pass(&scp.verify_structure(true)), &mut failed);
    let ex = verify_associativity(&scp, AssociativityMode::Exhaustive);
    let n = find(&ex, "exhaustive-associativity").unwrap();
    line(&format!("smoke Z/2: exhaustive associativity over all {} triples", n.checked),
        all_pass(&ex) && n.checked as usize == scp.rank().pow(3), &mut failed);
    let (sinv, _) = coinvariants(&scp.comodule_structure());
    line("smoke Z/2: coinvariants have dimension dim A", sinv.dim() == scp.dim_a(), &mut failed);

    // Untwisted partial action: the product reduces to Σ a(h_(1)·(b(l_(1)·1))) # h_(2)l_(2).
    let st = &sm.twisted;
    let dh = st.dim_h();
    let mut ok = true;
    for a in 0..st.dim_a() {
        for h in 0..dh {
            for b in 0..st.dim_a() {
                for l in 0..dh {
                    let x = scp.projector.at(&[a, h]);
                    let y = scp.projector.at(&[b, l]);
                    let mut want = SparseVec::new();
                    for (h1, h2, c) in st.hopf.delta(h) {
                        for (l1, l2, d) in st.hopf.delta(l) {
                            let inner = st.amul(&SparseVec::unit(b), st.unit_action(*l1));
                            let av = st.amul(&SparseVec::unit(a), &st.act_on(*h1, &inner));
                            want = want.axpy(&(c * d), &tensor_vec(&av, st.hopf.mul_basis(*h2, *l2), dh));
                        }
                    }
                    ok &= ambient_mul(st, x, y) == scp.projector.apply(&want);
                }
            }
        }
    }
    line("trivial ω: product is the partial smash product formula", ok, &mut failed);

    // Global action with trivial ω: ordinary smash product.
    let fm = functions_model(&k4, &GroupCocycleTable::trivial(k4.clone()), &[0, 1]).unwrap();
    let gcp = build_crossed_product(&fm.global.as_twisted().unwrap()).unwrap();
    line("global action, trivial ω: dim A#H = dim A · dim H = 16", gcp.rank() == 16 && all_pass(&gcp.verify_structure(true)), &mut failed);

    // Mutations.
    let broken = break_cocycle(&sm.twisted);
    let bcp = build_crossed_product(&broken).unwrap();
    let r = verify_associativity(&bcp, AssociativityMode::Sampled(SampleSpec::default()));
    line("ω negated at one entry: criterion and sampled associativity both fail",
        fails(&r, "criterion-cocycle-law") && fails(&r, "sampled-associativity"), &mut failed);
    let kb = break_cocycle(&model.twisted);
    let kcp = build_crossed_product(&kb).unwrap();
    let r = verify_associativity(&kcp, AssociativityMode::Sampled(SampleSpec::default()));
    let s = find(&r, "sampled-associativity").unwrap();
    println!("  Klein four with one ω entry negated: {} of {} sampled triples fail", s.failures, s.checked);
    line("Klein four, ω negated at one entry: criterion fails", fails(&r, "criterion-cocycle-law"), &mut failed);
    let (a, b) = (k4.index_of("a").unwrap(), k4.index_of("b").unwrap());
    let flipped = GroupCocycleTable::from_fn(k4.clone(), |g, s| {
        let v = model.gamma.value(g, s).clone();
        if (g, s) == (a, b) { -v } else { v }
    })
    .unwrap();
    let gt = hp_partial::cocycle_twist_smash_unchecked(&model.partial, &k4, &flipped).unwrap();
    let r = verify_associativity(&build_crossed_product(&gt).unwrap(), AssociativityMode::Sampled(SampleSpec::default()));
    let s = find(&r, "sampled-associativity").unwrap();
    println!("  Klein four with γ(a, b) negated: {} of {} sampled triples fail", s.failures, s.checked);
    line("Klein four, γ(a, b) negated: criterion and sampled associativity both fail",
        fails(&r, "criterion-cocycle-law") && fails(&r, "sampled-associativity"), &mut failed);
    let t = &sm.twisted;
    let mut cols = t.cocycle().columns().to_vec();
    let hit = (1..dh).find(|h| !t.omega(*h, 0).is_zero()).unwrap();
    cols[hit * dh] = cols[hit * dh].neg();
    let unnormal = t.with_cocycle(LinMap::from_columns(vec![dh, dh], t.dim_a(), cols)).unwrap();
    let pi = projector(&unnormal);
    line("ω(h, 1) negated: build reports a normalization failure and π is not idempotent",
        matches!(build_crossed_product(&unnormal), Err(CrossedError::NormalizationFailure { .. }))
            && !projector_idempotent(&unnormal, &pi).passed(), &mut failed);

    // Comodule algebras.
    let h = Arc::new(group_algebra(&k4));
    let delta = LinMap::from_fn(vec![4], 16, |x| h.delta_vec(&SparseVec::unit(x[0])));
    let reg = ComoduleAlgebra::new(Arc::new(h.algebra.clone()), h.clone(), delta);
    let (c, _) = coinvariants(&reg);
    line("B = H with ρ = Δ: comodule laws hold, coinvariants = span(1_H)",
        all_pass(&reg.verify()) && c.same_as(&Subspace::span(4, [h.one().clone()])), &mut failed);
    let triv = LinMap::from_fn(vec![4], 16, |x| tensor_vec(&SparseVec::unit(x[0]), h.one(), 4));
    let tc = ComoduleAlgebra::new(Arc::new(h.algebra.clone()), h.clone(), triv);
    line("trivial coaction: coinvariants are all of B", all_pass(&tc.verify()) && coinvariants(&tc).0.dim() == 4, &mut failed);

    // Corners.
    let gamma = GroupCocycleTable::klein4_table();
    let fm = functions_model(&k4, &gamma, &[0, 1]).unwrap();
    let icp = build_crossed_product(&fm.induced.tpa).unwrap();
    let corner = global_corner_embedding(&fm.global, &fm.induced, &icp);
    for c in &corner {
        line(&format!("functions on Klein four, Y = {{e, a}}: {}", c.name), c.passed(), &mut failed);
    }
    let whole = induce_partial(&fm.global, &fm.global.carrier.unit).unwrap();
    let wcp = build_crossed_product(&whole.tpa).unwrap();
    let wc = global_corner_embedding(&fm.global, &whole, &wcp);
    line("idem = 1_B: the corner is the whole global crossed product",
        all_pass(&wc) && wcp.rank() == 16, &mut failed);

    println!("total {:.1?}", start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
