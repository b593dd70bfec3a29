use std::time::Instant;

use hp_algebra::*;
use hp_scalars::{ExactMatrix, Scalar, SparseVec};

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

/// Group algebra from a multiplication table.
fn group_algebra(names: &[String], table: &[Vec<usize>]) -> HopfAlgebraData {
    let n = names.len();
    let labels: Vec<String> = names.iter().map(|g| format!("u_{g}")).collect();
    let e = (0..n).find(|&i| (0..n).all(|j| table[i][j] == j)).unwrap();
    let algebra = StructuredAlgebra::from_fn(labels.clone(), SparseVec::unit(e), |i, j| SparseVec::unit(table[i][j]));
    let inv = |i: usize| (0..n).find(|&j| table[i][j] == e).unwrap();
    let antipode = ExactMatrix::from_columns(n, (0..n).map(|i| SparseVec::unit(inv(i))).collect());
    HopfAlgebraData::new(algebra, CoalgebraData::grouplike(labels), antipode)
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn s3() -> HopfAlgebraData {
    let ps = perms(3);
    let names: Vec<String> = ps.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect();
    let idx = |p: &Vec<usize>| ps.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> =
        ps.iter().map(|p| ps.iter().map(|q| idx(&(0..3).map(|i| p[q[i]]).collect())).collect()).collect();
    group_algebra(&names, &table)
}

fn cyclic(n: usize) -> HopfAlgebraData {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    group_algebra(&names, &table)
}

fn klein4() -> HopfAlgebraData {
    let names: Vec<String> = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    group_algebra(&names, &table)
}

fn valid(h: &HopfAlgebraData) -> bool {
    all_pass(&validate_hopf(h))
}

fn main() {
    let start = Instant::now();
    let mut failed = 0;

    line("validate: group algebra of Z/2 passes every law", valid(&cyclic(2)), &mut failed);

    let mut broken = s3();
    broken.antipode = ExactMatrix::identity(6);
    let r = validate_hopf(&broken);
    let anti = find(&r, "antipode-left").unwrap();
    line(
        "validate: S = id on kS3 fails the antipode law with a witness",
        !anti.passed() && anti.witness.is_some() && find(&r, "associativity").unwrap().passed(),
        &mut failed,
    );

    let ds3 = dual_hopf(&s3());
    line("dual: (kS3)* validates", valid(&ds3), &mut failed);

    let dz2 = dual_hopf(&cyclic(2));
    let ok = (0..2).all(|g| (0..2).all(|h| *dz2.mul_basis(g, h) == if g == h { SparseVec::unit(g) } else { SparseVec::new() }));
    line("dual: p_g p_h = δ_{g,h} p_g for Z/2", ok, &mut failed);

    let h = s3();
    line("dual: biduality recovers kS3", relabel(&dual_hopf(&dual_hopf(&h)), h.labels().to_vec()) == h, &mut failed);

    let dk = dual_hopf(&klein4());
    let ok = dk.dim() == 4
        && valid(&dk)
        && (0..4).all(|g| {
            let mut want: Vec<(usize, usize, Scalar)> = (0..4).map(|s| (s, s ^ g, Scalar::one())).collect();
            want.sort_by_key(|t| (t.0, t.1));
            dk.delta(g) == want.as_slice()
        });
    line("dual: (k Klein four)* has Δp_g = Σ p_s ⊗ p_{s⁻¹g} and validates", ok, &mut failed);

    let c2 = cyclic(2);
    let c22 = tensor_hopf(&c2, &c2);
    line("tensor: kC2 ⊗ kC2 has dim 4 and validates", c22.dim() == 4 && valid(&c22), &mut failed);
    let c24 = tensor_hopf(&c22, &c22);
    line("tensor: (kC2)^⊗4 has dim 16 and validates", c24.dim() == 16 && valid(&c24), &mut failed);
    let t = tensor_hopf(&h, &HopfAlgebraData::trivial());
    line(
        "tensor: H ⊗ trivial Hopf algebra has the structure constants of H",
        t.algebra.mult == h.algebra.mult && t.coalgebra.comult == h.coalgebra.comult && t.antipode == h.antipode,
        &mut failed,
    );

    // Convolution on Hom(kS3 ⊗ kS3, kS3) with the multiplication as sample map.
    let hh = tensor_hopf(&h, &h);
    let cod = &h.algebra;
    let dom = &hh.coalgebra;
    let mult: Values = (0..hh.dim()).map(|c| h.mul_basis(c / 6, c % 6).clone()).collect();
    let unit = convolution_unit(dom, cod);
    line(
        "convolution: f ∗ (η∘ε) = f = (η∘ε) ∗ f",
        convolve(dom, cod, &mult, &unit) == mult && convolve(dom, cod, &unit, &mult) == mult,
        &mut failed,
    );
    let twist: Values = (0..hh.dim()).map(|c| SparseVec::unit((c * 5 + 1) % 6)).collect();
    let fg = convolve(dom, cod, &mult, &twist);
    let ok = convolve(dom, cod, &fg, &mult) == convolve(dom, cod, &mult, &convolve(dom, cod, &twist, &mult));
    line("convolution: associativity on a sampled triple", ok, &mut failed);

    // f1 = f2 = η∘ε: the ideal is everything and ω = f1∗f2 is its own inverse.
    let inv = inverse_in_ideal(dom, cod, &unit, &unit, &unit);
    line("inverse in ideal: ω = f1∗f2 gives ω′ = f1∗f2", inv.as_ref().ok() == Some(&unit), &mut failed);
    // The convolution inverse of a character-valued map on kS3 ⊗ kS3.
    let chi: Values = (0..hh.dim())
        .map(|c| {
            let sgn = |g: usize| if [0usize, 3, 4].contains(&g) { 1 } else { -1 };
            cod.unit.scale(&Scalar::from_int(2 * sgn(c / 6) * sgn(c % 6)))
        })
        .collect();
    let ok = match inverse_in_ideal(dom, cod, &chi, &unit, &unit) {
        Ok(w) => convolve(dom, cod, &chi, &w) == unit && convolve(dom, cod, &w, &chi) == unit,
        Err(_) => false,
    };
    line("inverse in ideal: output satisfies both two-sided identities", ok, &mut failed);

    let cs3 = dual_hopf(&h);
    let one_leg = iterated_comult(&cs3, 1);
    let two_legs = iterated_comult(&cs3, 2);
    let ok1 = one_leg.matrix == ExactMatrix::identity(6);
    let ok2 = (0..6).all(|i| {
        let want = SparseVec::from_terms(cs3.delta(i).iter().map(|(j, k, c)| (j * 6 + k, c.clone())).collect());
        two_legs.columns()[i] == want
    });
    let four = iterated_comult(&cs3, 4);
    let left = cs3.coalgebra.legs_left_assoc(4);
    let ok4 = (0..6).all(|i| {
        let want = SparseVec::from_terms(
            left[i].iter().map(|(l, c)| (l.iter().fold(0, |acc, x| acc * 6 + x), c.clone())).collect(),
        );
        four.columns()[i] == want
    });
    line("iterated comult: one leg is id, two legs is Δ", ok1 && ok2, &mut failed);
    line("iterated comult: four legs agree with (Δ⊗id⊗id)(Δ⊗id)Δ", ok4, &mut failed);

    let json = serde_json::to_string(&dk).unwrap();
    let back: HopfAlgebraData = serde_json::from_str(&json).unwrap();
    line("serialization: Hopf data JSON round trip", back == dk, &mut failed);

    let secs = start.elapsed().as_secs_f64();
    line(&format!("runtime: algebra-core suite under 60 s ({secs:.1} s)"), secs < 60.0, &mut failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
