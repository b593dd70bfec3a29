use hp_scalars::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn line(name: &str, ok: bool, failed: &mut u32) {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        *failed += 1;
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Dense product of two coefficient lists, reduced modulo the monic Φ_n by
/// long division.
fn oracle_mul(a: &[Rational], b: &[Rational], n: u32) -> Vec<Rational> {
    let mut p = vec![Rational::from_int(0); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            p[i + j] = &p[i + j] + &(x * y);
        }
    }
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    for top in (d..p.len()).rev() {
        let c = p[top].clone();
        for (k, f) in phi.iter().enumerate() {
            p[top - d + k] = &p[top - d + k] - &(&c * &Rational::from_int(*f));
        }
    }
    p.truncate(d);
    p
}

fn random_coeffs(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| q(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect()
}

fn random_scalar(rng: &mut ChaCha8Rng, n: u32) -> Scalar {
    Scalar::from_coeffs(n, random_coeffs(rng, euler_phi(n) as usize))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ExactMatrix {
    let rows: Vec<Vec<Scalar>> =
        (0..n).map(|_| (0..n).map(|_| Scalar::from_rational(q(rng.gen_range(-4..=4), rng.gen_range(1..=3)))).collect()).collect();
    ExactMatrix::from_dense(&rows)
}

fn main() {
    let mut failed = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    line("ζ_2 · ζ_2 = 1", (&Scalar::zeta(2, 1) * &Scalar::zeta(2, 1)).is_one(), &mut failed);
    line("ζ_4 + ζ_4³ = 0", (&Scalar::zeta(4, 1) + &Scalar::zeta(4, 3)).is_zero(), &mut failed);
    line("ζ_6³ = −1 and ζ_12⁴ = ζ_3", Scalar::zeta(6, 3) == Scalar::from_int(-1) && Scalar::zeta(12, 4) == Scalar::zeta(3, 1), &mut failed);
    line(
        "mixed orders promote to the lcm: ζ_4 · ζ_3 = ζ_12⁷",
        &Scalar::zeta(4, 1) * &Scalar::zeta(3, 1) == Scalar::zeta(12, 7),
        &mut failed,
    );

    let x = Scalar::from_coeffs(3, vec![q(1, 2), q(1, 1)]);
    let want = oracle_mul(&[q(1, 2), q(1, 1)], &[q(1, 2), q(0, 1), q(1, 1)], 3);
    let got = &x * &x.conj();
    line(
        &format!("(1/2 + ζ_3) · conj = {got} agrees with dense polynomial arithmetic mod Φ_3"),
        got == Scalar::from_coeffs(3, want),
        &mut failed,
    );

    let mut ok = true;
    let mut trials = 0;
    for n in [3u32, 4, 5, 7, 8, 12] {
        let d = euler_phi(n) as usize;
        for _ in 0..50 {
            let (a, b) = (random_coeffs(&mut rng, d + 2), random_coeffs(&mut rng, d + 1));
            let prod = &Scalar::from_coeffs(n, a.clone()) * &Scalar::from_coeffs(n, b.clone());
            ok &= prod == Scalar::from_coeffs(n, oracle_mul(&a, &b, n));
            trials += 1;
        }
    }
    line(&format!("{trials} random products in Q(ζ_N), N ∈ {{3,4,5,7,8,12}}, match the polynomial oracle"), ok, &mut failed);

    let mut ok = true;
    for n in [1u32, 3, 4, 5, 8, 12] {
        for _ in 0..30 {
            let (a, b, c) = (random_scalar(&mut rng, n), random_scalar(&mut rng, n), random_scalar(&mut rng, n));
            ok &= &(&a * &b) * &c == &a * &(&b * &c);
            ok &= &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
            ok &= &a + &b == &b + &a && &a * &b == &b * &a;
            ok &= (&a - &a).is_zero() && (&a * &Scalar::one()) == a;
            if !a.is_zero() {
                ok &= a.inv().is_ok_and(|i| (&a * &i).is_one());
            }
        }
    }
    line("field axioms and x · x⁻¹ = 1 on random elements of six fields", ok, &mut failed);
    line("0⁻¹ is DivisionByZero", Scalar::zero().inv() == Err(ScalarError::DivisionByZero), &mut failed);

    let r = q(6, -4);
    line(
        "rationals are reduced with positive denominator: 6/−4 = −3/2",
        r.to_string() == "-3/2" && r.denom() > 0.into(),
        &mut failed,
    );

    let s = Scalar::from_coeffs(12, vec![q(1, 3), q(-2, 1), q(0, 1), q(5, 7)]);
    let json = serde_json::to_string(&s).unwrap();
    let back: Scalar = serde_json::from_str(&json).unwrap();
    line(&format!("scalar JSON round-trips ({json})"), back == s, &mut failed);

    let id = ExactMatrix::identity(4);
    let rhs = ExactMatrix::from_columns(4, vec![SparseVec::from_terms(vec![(0, Scalar::one()), (3, Scalar::zeta(4, 1))])]);
    let sol = solve_linear(&id, &rhs);
    line(
        "identity system returns the right-hand side with an empty kernel",
        sol.as_ref().is_ok_and(|s| s.solution == rhs && s.kernel_basis.is_empty()) && kernel(&id).is_empty(),
        &mut failed,
    );
    line(
        "zero matrix with a nonzero right-hand side has no solution",
        matches!(solve_linear(&ExactMatrix::zero(3, 3), &ExactMatrix::identity(3)), Err(ScalarError::NoSolution)),
        &mut failed,
    );
    line("kernel of the zero 5×5 matrix has 5 standard columns", kernel(&ExactMatrix::zero(5, 5)).len() == 5, &mut failed);

    let mut ok = true;
    let mut solved = 0;
    while solved < 20 {
        let m = random_matrix(&mut rng, 6);
        if rank(&m) < 6 {
            continue;
        }
        let b = random_matrix(&mut rng, 6);
        ok &= solve_linear(&m, &b).is_ok_and(|s| m.mul(&s.solution) == b && s.kernel_basis.is_empty());
        ok &= inverse(&m).is_ok_and(|i| m.mul(&i) == ExactMatrix::identity(6));
        solved += 1;
    }
    line("20 random invertible 6×6 systems: M · x = rhs and M · M⁻¹ = I", ok, &mut failed);

    let mut ok = true;
    for r in 1..6 {
        let a = ExactMatrix::from_columns(6, (0..r).map(|_| random_matrix(&mut rng, 6).column(0).clone()).collect());
        let p = a.mul(&a.transpose());
        let k = kernel(&p);
        ok &= k.len() == 6 - rank(&p) && k.iter().all(|v| p.apply(v).is_zero());
    }
    line("kernel dimension is n − rank and every kernel vector is annihilated", ok, &mut failed);

    let m = ExactMatrix::from_dense(&[
        vec![Scalar::one(), Scalar::zeta(3, 1)],
        vec![Scalar::zeta(3, 2), Scalar::one()],
    ]);
    line(
        "[[1, ζ_3], [ζ_3², 1]] is singular over Q(ζ_3)",
        rank(&m) == 1 && matches!(inverse(&m), Err(ScalarError::Singular)),
        &mut failed,
    );

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
