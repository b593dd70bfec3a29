//! The partially cleft axioms, clause by clause, and the normalization of γ′.

use std::collections::BTreeMap;

use hp_algebra::{centrality_check, check_tuples, tensor_vec, CheckResult, LinMap};
use hp_scalars::SparseVec;
use serde::{Deserialize, Serialize};

use crate::data::CleftData;

/// Checks keyed by clause: `"i"` … `"vii"`, plus `"derived"` for the
/// consequences that every partially cleft pair must satisfy.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CleftReport {
    pub clauses: BTreeMap<String, Vec<CheckResult>>,
}

impl CleftReport {
    pub fn passed(&self) -> bool {
        self.checks().all(|c| c.passed())
    }

    pub fn checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.clauses.values().flatten()
    }

    pub fn find(&self, name: &str) -> Option<&CheckResult> {
        self.checks().find(|c| c.name == name)
    }

    /// Clauses with at least one failing check.
    pub fn failing_clauses(&self) -> Vec<&str> {
        self.clauses.iter().filter(|(_, v)| v.iter().any(|c| !c.passed())).map(|(k, _)| k.as_str()).collect()
    }
}

pub fn verify_partially_cleft(cd: &CleftData) -> CleftReport {
    let h = cd.hopf();
    let dh = h.dim();
    let lh = h.labels();
    let coinv = &cd.coinvariants;
    let la = coinv.algebra.labels.clone();
    let lb = cd.b().labels();
    let g = &cd.gamma;
    let gp = &cd.gamma_prime;
    let e = cd.e();
    let et = cd.e_tilde();
    let unit_b = cd.b().unit();
    let mut r = CleftReport::default();
    let mut put = |k: &str, v: Vec<CheckResult>| {
        r.clauses.insert(k.to_string(), v);
    };

    put("i", vec![CheckResult::from_bool("gamma-unit", &g.apply(h.one()) == &unit_b, "γ(1_H) = 1_B")]);

    put(
        "ii",
        vec![
            check_tuples("gamma-colinear", &[lh], |x| {
                let mut want = SparseVec::new();
                for (p, q, c) in h.delta(x[0]) {
                    want = want.axpy(c, &tensor_vec(g.at(&[*p]), &SparseVec::unit(*q), dh));
                }
                cd.extension.apply(g.at(x)) == want
            }),
            check_tuples("gamma-prime-colinear", &[lh], |x| {
                let mut want = SparseVec::new();
                for (p, q, c) in h.delta(x[0]) {
                    want = want.axpy(c, &tensor_vec(gp.at(&[*q]), cd.s(*p), dh));
                }
                cd.extension.apply(gp.at(x)) == want
            }),
        ],
    );

    // e lands in A by (ii); the convolution checks need its A-coordinates.
    let e_a: Option<Vec<SparseVec>> = e.columns().iter().map(|v| coinv.coords(v)).collect();
    let in_a = check_tuples("e-in-coinvariants", &[lh], |x| coinv.coords(e.at(x)).is_some());
    let pair = h.coalgebra.tensor(&h.coalgebra);
    let central = match &e_a {
        Some(ea) => {
            let em: Vec<SparseVec> = (0..dh * dh)
                .map(|c| {
                    let mut out = SparseVec::new();
                    for (i, x) in h.mul_basis(c / dh, c % dh).iter() {
                        out = out.axpy(x, &ea[*i]);
                    }
                    out
                })
                .collect();
            centrality_check("e-product-convolution-central", &pair, &coinv.algebra, &em)
        }
        None => CheckResult::skipped("e-product-convolution-central", "γ ∗ γ′ does not land in A"),
    };
    let commutes = check_tuples("e-tilde-commutes-with-coinvariants", &[lh, &la], |x| {
        let a = &coinv.basis[x[1]];
        cd.mul(et.at(&[x[0]]), a) == cd.mul(a, et.at(&[x[0]]))
    });
    put("iii", vec![in_a, central, commutes]);

    let expansion = check_tuples("expansion", &[&lb], |x| {
        let mut acc = SparseVec::new();
        for (b0, k, c) in cd.coact(&SparseVec::unit(x[0])) {
            let eb = SparseVec::unit(b0);
            for (k1, k2, d) in h.delta(k) {
                acc = acc.axpy(&(&c * d), &cd.mul3(&eb, gp.at(&[*k1]), g.at(&[*k2])));
            }
        }
        acc == SparseVec::unit(x[0])
    });
    put("iv", vec![expansion]);

    put(
        "v",
        vec![check_tuples("gamma-moves-e", &[lh, lh], |x| {
            let lhs = cd.mul(g.at(&[x[0]]), e.at(&[x[1]]));
            let mut rhs = SparseVec::new();
            for (p, q, c) in h.delta(x[0]) {
                rhs = rhs.axpy(c, &cd.mul(&e.apply(h.mul_basis(*p, x[1])), g.at(&[*q])));
            }
            lhs == rhs
        })],
    );
    put(
        "vi",
        vec![check_tuples("gamma-prime-moves-e-tilde", &[lh, lh], |x| {
            let lhs = cd.mul(gp.at(&[x[1]]), et.at(&[x[0]]));
            let mut rhs = SparseVec::new();
            for (p, q, c) in h.delta(x[1]) {
                rhs = rhs.axpy(c, &cd.mul(&et.apply(h.mul_basis(x[0], *p)), gp.at(&[*q])));
            }
            lhs == rhs
        })],
    );
    put(
        "vii",
        vec![check_tuples("gamma-exchanges-e", &[lh, lh], |x| {
            let mut lhs = SparseVec::new();
            for (p, q, c) in h.delta(x[1]) {
                lhs = lhs.axpy(c, &cd.mul(&g.apply(h.mul_basis(x[0], *p)), et.at(&[*q])));
            }
            let mut rhs = SparseVec::new();
            for (p, q, c) in h.delta(x[0]) {
                rhs = rhs.axpy(c, &cd.mul(e.at(&[*p]), &g.apply(h.mul_basis(*q, x[1]))));
            }
            lhs == rhs
        })],
    );

    let mut derived = vec![
        CheckResult::from_bool("gamma-prime-unit", &gp.apply(h.one()) == &unit_b, "γ′(1_H) = 1_B"),
        maps_equal("gamma-gamma-prime-gamma", lh, &cd.convolve(&e, g), g),
        maps_equal("e-idempotent", lh, &cd.convolve(&e, &e), &e),
        maps_equal("e-tilde-idempotent", lh, &cd.convolve(&et, &et), &et),
    ];
    match &e_a {
        Some(ea) => derived.push(centrality_check("e-convolution-central", &h.coalgebra, &coinv.algebra, ea)),
        None => derived.push(CheckResult::skipped("e-convolution-central", "γ ∗ γ′ does not land in A")),
    }
    derived.extend(product_expansions(cd));
    put("derived", derived);
    r
}

fn maps_equal(name: &str, labels: &[String], f: &LinMap, g: &LinMap) -> CheckResult {
    check_tuples(name, &[labels], |x| f.at(x) == g.at(x))
}

/// The three expansions of `γ(h)γ(k)`, `γ(h)γ(k)a` and `γ(h)a` obtained by
/// applying clause (iv) to them.
pub fn product_expansions(cd: &CleftData) -> Vec<CheckResult> {
    let h = cd.hopf();
    let lh = h.labels();
    let coinv = &cd.coinvariants;
    let la = &coinv.algebra.labels;
    let (g, gp) = (&cd.gamma, &cd.gamma_prime);
    let legs3 = h.legs(3);
    // Σ γ(h_(1))γ(k_(1)) · mid · γ′(h_(2)k_(2))γ(h_(3)k_(3))
    let expand = |x: usize, y: usize, mid: Option<&SparseVec>| {
        let mut out = SparseVec::new();
        for (p, c) in &legs3[x] {
            for (q, d) in &legs3[y] {
                let mut left = cd.mul(g.at(&[p[0]]), g.at(&[q[0]]));
                if let Some(a) = mid {
                    left = cd.mul(&left, a);
                }
                let right = cd.mul(&gp.apply(h.mul_basis(p[1], q[1])), &g.apply(h.mul_basis(p[2], q[2])));
                out = out.axpy(&(c * d), &cd.mul(&left, &right));
            }
        }
        out
    };
    vec![
        check_tuples("gamma-gamma-expansion", &[lh, lh], |x| {
            cd.mul(g.at(&[x[0]]), g.at(&[x[1]])) == expand(x[0], x[1], None)
        }),
        check_tuples("gamma-gamma-coinvariant-expansion", &[lh, lh, la], |x| {
            let a = &coinv.basis[x[2]];
            cd.mul3(g.at(&[x[0]]), g.at(&[x[1]]), a) == expand(x[0], x[1], Some(a))
        }),
        check_tuples("gamma-coinvariant-expansion", &[lh, la], |x| {
            let a = &coinv.basis[x[1]];
            let mut rhs = SparseVec::new();
            for (p, c) in &legs3[x[0]] {
                rhs = rhs.axpy(c, &cd.mul(&cd.mul3(g.at(&[p[0]]), a, gp.at(&[p[1]])), g.at(&[p[2]])));
            }
            cd.mul(g.at(&[x[0]]), a) == rhs
        }),
    ]
}

/// `γ′ ∗ γ ∗ γ′ = γ′`.
pub fn gamma_prime_normalized_check(cd: &CleftData) -> CheckResult {
    let ggg = cd.convolve(&cd.convolve(&cd.gamma_prime, &cd.gamma), &cd.gamma_prime);
    maps_equal("gamma-prime-normalized", cd.hopf().labels(), &ggg, &cd.gamma_prime)
}

/// Replaces γ′ by `γ̄ = γ′ ∗ γ ∗ γ′` and checks that γ̄ is normalized and
/// leaves both `γ ∗ γ′` and `γ′ ∗ γ` unchanged.
pub fn normalize_gamma_prime(cd: &CleftData) -> (CleftData, Vec<CheckResult>) {
    let lh = cd.hopf().labels();
    let bar = cd.convolve(&cd.convolve(&cd.gamma_prime, &cd.gamma), &cd.gamma_prime);
    let out = cd.with_gamma_prime(bar);
    let checks = vec![
        gamma_prime_normalized_check(&out),
        maps_equal("gamma-bar-left", lh, &out.e(), &cd.e()),
        maps_equal("gamma-bar-right", lh, &out.e_tilde(), &cd.e_tilde()),
    ];
    (out, checks)
}
