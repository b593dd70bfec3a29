//! Associativity of a crossed product: the twisting/cocycle criterion,
//! seeded sampling and, for small algebras, every triple.

use hp_algebra::{check_tuples, run_check_items, CheckResult};
use hp_partial::{cocycle_law_check, twisting_check};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::product::CrossedProduct;
use crate::BasisAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub count: usize,
    pub seed: u64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { count: 10_000, seed: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociativityMode {
    Criterion,
    Sampled(SampleSpec),
    Exhaustive,
}

/// Basis triples drawn from ChaCha8 seeded with `spec.seed`; independent of
/// how many workers later evaluate them.
pub fn sample_triples(dim: usize, spec: SampleSpec) -> Vec<[usize; 3]> {
    if dim == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count).map(|_| [rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim)]).collect()
}

fn associates(alg: &dyn BasisAlgebra, i: usize, j: usize, k: usize) -> bool {
    let ij = alg.try_mul_basis(i, j);
    let jk = alg.try_mul_basis(j, k);
    match (ij, jk) {
        (Ok(ij), Ok(jk)) => {
            let left = alg.try_mul(&ij, &hp_scalars::SparseVec::unit(k));
            let right = alg.try_mul(&hp_scalars::SparseVec::unit(i), &jk);
            matches!((left, right), (Ok(l), Ok(r)) if l == r)
        }
        _ => false,
    }
}

/// The criterion (twisting and cocycle law) always runs; the other modes add
/// a direct test of `(xy)z = x(yz)`.
pub fn verify_associativity(cp: &CrossedProduct, mode: AssociativityMode) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut tw = twisting_check(&cp.tpa);
    tw.name = "criterion-twisting".into();
    let mut co = cocycle_law_check(&cp.tpa);
    co.name = "criterion-cocycle-law".into();
    out.push(tw);
    out.push(co);
    let labels = cp.labels();
    match mode {
        AssociativityMode::Criterion => {}
        AssociativityMode::Sampled(spec) => {
            let triples = sample_triples(cp.rank(), spec);
            out.push(run_check_items("sampled-associativity", &triples, |t, tally| {
                let ok = associates(cp, t[0], t[1], t[2]);
                tally.record(ok, || t.iter().map(|i| labels[*i].clone()).collect());
            }));
        }
        AssociativityMode::Exhaustive => {
            out.push(check_tuples("exhaustive-associativity", &[&labels, &labels, &labels], |t| {
                associates(cp, t[0], t[1], t[2])
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_depend_only_on_seed() {
        let a = sample_triples(50, SampleSpec { count: 20, seed: 3 });
        let b = sample_triples(50, SampleSpec { count: 20, seed: 3 });
        let c = sample_triples(50, SampleSpec { count: 20, seed: 4 });
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().flatten().all(|i| *i < 50));
    }
}
