use std::time::Instant;

use hp_algebra::{all_pass, dual_hopf, tensor_hopf, validate_hopf, HopfAlgebraData};
use hp_constructors::*;
use hp_scalars::{ExactMatrix, Scalar};

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn valid(h: &HopfAlgebraData) -> bool {
    all_pass(&validate_hopf(h))
}

fn same_constants(a: &HopfAlgebraData, b: &HopfAlgebraData) -> bool {
    a.algebra.mult == b.algebra.mult
        && a.algebra.unit == b.algebra.unit
        && a.coalgebra == b.coalgebra
        && a.antipode == b.antipode
}

fn main() {
    let start = Instant::now();
    let mut failed = 0;

    // Hopf validity of every constructor output.
    let groups = ["trivial", "z2", "c3", "klein4", "s3", "c8", "q8"];
    let mut ok = true;
    let mut ok_dual = true;
    let mut ok_pair = true;
    for name in groups {
        let g = FiniteGroup::preset(name).unwrap();
        let h = group_algebra(&g);
        ok &= h.dim() == g.order() && valid(&h);
        let d = dual_hopf(&h);
        ok_dual &= valid(&d);
        ok_pair &= hopf_pairing(&h, &d, &ExactMatrix::identity(g.order())).is_ok();
    }
    line("group algebras of order 1 to 8 (trivial, Z/2, C3, Klein four, S3, C8, Q8) validate", ok, &mut failed);
    line("their duals validate", ok_dual, &mut failed);
    line("kG and (kG)* are paired by ⟨u_g, p_s⟩ = δ_{g,s}", ok_pair, &mut failed);

    let t1 = truncated_torus(1, 3);
    line("truncated torus m = 1 is one-dimensional", t1.dim() == 1 && valid(&t1), &mut failed);
    let t21 = truncated_torus(2, 1);
    line(
        "truncated torus m = 2, n = 1 is kZ/2",
        same_constants(&t21, &group_algebra(&FiniteGroup::z2())),
        &mut failed,
    );
    let t24 = truncated_torus(2, 4);
    line("truncated torus (kC2)^⊗4 has dim 16 and validates", t24.dim() == 16 && valid(&t24), &mut failed);
    let c2 = truncated_torus(2, 1);
    let c2_4 = tensor_hopf(&tensor_hopf(&c2, &c2), &tensor_hopf(&c2, &c2));
    line("(kC2)^⊗4 agrees with the fourfold tensor product", same_constants(&t24, &c2_4), &mut failed);

    let z2 = FiniteGroup::z2();
    let trivial = trivial_action(&z2, circle_group_algebra(2, 2));
    let sm = smash_product(&trivial).unwrap();
    line(
        "smash product with the trivial action is the tensor product",
        same_constants(&sm, &tensor_hopf(&circle_group_algebra(2, 2), &group_algebra(&z2))),
        &mut failed,
    );
    let swap = permutation_action(&z2, &z2.regular_embedding(), circle_group_algebra(2, 2), 2).unwrap();
    let sm = smash_product(&swap).unwrap();
    line("smash product (kC2)^⊗2 ⋊ kZ/2 with swap action: dim 8, validates", sm.dim() == 8 && valid(&sm), &mut failed);

    let k4 = FiniteGroup::klein4();
    let perm = k4.regular_embedding();
    let act = permutation_action(&k4, &perm, circle_group_algebra(2, 4), 2).unwrap();
    line("Klein four permutation action satisfies the module-algebra laws", all_pass(&act.verify()), &mut failed);
    let smash = smash_product(&act).unwrap();
    line("smash product (kC2)^⊗4 ⋊ k(Klein four): dim 64, validates", smash.dim() == 64 && valid(&smash), &mut failed);

    let one = FiniteGroup::cyclic(1);
    let co = torus_coaction(&one, &one.regular_embedding(), truncated_torus(3, 1), 3).unwrap();
    let cs = cosemidirect_product(&co).unwrap();
    line("cosemidirect product over the trivial group is L", same_constants(&cs, &truncated_torus(3, 1)), &mut failed);
    let co = torus_coaction(&z2, &z2.regular_embedding(), truncated_torus(2, 2), 2).unwrap();
    let cs = cosemidirect_product(&co).unwrap();
    line("cosemidirect (kC2)^⊗2 >◁ (kZ/2)* with swap coaction: dim 8, validates", cs.dim() == 8 && valid(&cs), &mut failed);
    let co = torus_coaction(&k4, &perm, truncated_torus(2, 4), 2).unwrap();
    line("Klein four coaction satisfies the comodule-coalgebra laws", all_pass(&co.verify()), &mut failed);
    let cosemi = cosemidirect_product(&co).unwrap();
    line("cosemidirect (kC2)^⊗4 >◁ (k Klein four)*: dim 64, validates", cosemi.dim() == 64 && valid(&cosemi), &mut failed);

    let ok = hopf_pairing(&circle_group_algebra(2, 1), &truncated_torus(2, 1), &torus_pairing_table(2, 1)).is_ok();
    line("pairing kC2 with itself, ⟨χ_j, t^k⟩ = (−1)^{jk}", ok, &mut failed);
    let ok = [3, 4, 5].iter().all(|&m| {
        hopf_pairing(&circle_group_algebra(m, 1), &truncated_torus(m, 1), &torus_pairing_table(m, 1)).is_ok()
    });
    line("pairing kC_m with itself, ⟨χ_j, t^k⟩ = ζ_m^{jk}, m = 3, 4, 5", ok, &mut failed);
    let table = smash_cosemidirect_pairing_table(&k4, 2, 4);
    line("Klein four smash/cosemidirect pairing satisfies every pairing law", hopf_pairing(&smash, &cosemi, &table).is_ok(), &mut failed);
    let bad = table.scale(&Scalar::from_int(-1));
    line(
        "a negated pairing table is rejected with a witness",
        matches!(hopf_pairing(&smash, &cosemi, &bad), Err(ConstructorError::PairingLawViolation { .. })),
        &mut failed,
    );

    let secs = start.elapsed().as_secs_f64();
    line(&format!("Hopf validity suite under 60 s ({secs:.1} s)"), secs < 60.0, &mut failed);

    // Klein four cocycle facts.
    let c = GroupCocycleTable::klein4_table();
    let g = &c.group;
    let ix = |n: &str| g.index_of(n).unwrap();
    let minus = [("a", "a"), ("a", "ab"), ("b", "a"), ("b", "b"), ("ab", "b"), ("ab", "ab")];
    let plus = [("a", "b"), ("b", "ab"), ("ab", "a")];
    let ok = minus.iter().all(|(x, y)| *c.value(ix(x), ix(y)) == Scalar::from_int(-1))
        && plus.iter().all(|(x, y)| c.value(ix(x), ix(y)).is_one());
    line("Klein four cocycle: the nine listed values", ok, &mut failed);
    line("Klein four cocycle: γ(g,1) = γ(1,g) = 1", c.is_normalized(), &mut failed);
    let law = c.cocycle_law();
    line(&format!("Klein four cocycle: 2-cocycle law on all {} triples", law.checked), law.passed() && law.checked == 64, &mut failed);
    line("Klein four cocycle: not a coboundary (exhaustive φ search over μ_8)", !c.is_coboundary(), &mut failed);

    if failed > 0 {
        std::process::exit(1);
    }
}
