//! Coalgebras by structure constants, with cached iterated comultiplication.

use std::sync::{Arc, OnceLock};

use hp_scalars::{Scalar, SparseVec};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::algebra::tensor_labels;
use crate::report::{check_tuples, CheckResult};

/// Basis indices of one Sweedler term `h_(1) ⊗ … ⊗ h_(n)`.
pub type Legs = SmallVec<[usize; 4]>;

/// For every basis element, the canonical (sorted, merged) terms of Δ^(n).
pub type LegTable = Vec<Vec<(Legs, Scalar)>>;

const MAX_CACHED_LEGS: usize = 6;

#[derive(Serialize, Deserialize)]
pub struct CoalgebraData {
    pub dim: usize,
    /// `comult[i]` lists `(j, k, c)` with `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub labels: Vec<String>,
    #[serde(skip)]
    legs_cache: [OnceLock<Arc<LegTable>>; MAX_CACHED_LEGS + 1],
}

impl Clone for CoalgebraData {
    fn clone(&self) -> Self {
        CoalgebraData::new(self.labels.clone(), self.comult.clone(), self.counit.clone())
    }
}

impl PartialEq for CoalgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.comult == other.comult && self.counit == other.counit
    }
}

impl std::fmt::Debug for CoalgebraData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoalgebraData").field("dim", &self.dim).field("labels", &self.labels).finish()
    }
}

fn canonical_terms(mut terms: Vec<(Legs, Scalar)>) -> Vec<(Legs, Scalar)> {
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Legs, Scalar)> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some((k2, acc)) if *k2 == k => *acc += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

impl CoalgebraData {
    pub fn new(labels: Vec<String>, comult: Vec<Vec<(usize, usize, Scalar)>>, counit: Vec<Scalar>) -> Self {
        let dim = labels.len();
        assert_eq!(comult.len(), dim);
        assert_eq!(counit.len(), dim);
        let comult = comult
            .into_iter()
            .map(|terms| {
                let legs: Vec<(Legs, Scalar)> =
                    terms.into_iter().map(|(j, k, c)| (Legs::from_slice(&[j, k]), c)).collect();
                canonical_terms(legs).into_iter().map(|(l, c)| (l[0], l[1], c)).collect()
            })
            .collect();
        CoalgebraData { dim, comult, counit, labels, legs_cache: Default::default() }
    }

    /// Coalgebra in which every basis element is grouplike.
    pub fn grouplike(labels: Vec<String>) -> Self {
        let n = labels.len();
        let comult = (0..n).map(|i| vec![(i, i, Scalar::one())]).collect();
        CoalgebraData::new(labels, comult, vec![Scalar::one(); n])
    }

    #[inline]
    pub fn delta(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    /// Δ^(n) on every basis element; `n = 1` is the identity.
    pub fn legs(&self, n: usize) -> Arc<LegTable> {
        assert!(n >= 1, "at least one leg");
        if n <= MAX_CACHED_LEGS {
            return self.legs_cache[n].get_or_init(|| Arc::new(self.compute_legs(n))).clone();
        }
        Arc::new(self.compute_legs(n))
    }

    fn compute_legs(&self, n: usize) -> LegTable {
        if n == 1 {
            return (0..self.dim).map(|i| vec![(Legs::from_slice(&[i]), Scalar::one())]).collect();
        }
        let prev = self.legs(n - 1);
        prev.iter()
            .map(|terms| {
                let mut out = Vec::new();
                for (legs, c) in terms {
                    let last = *legs.last().unwrap();
                    for (j, k, d) in self.delta(last) {
                        let mut l = legs.clone();
                        l.pop();
                        l.push(*j);
                        l.push(*k);
                        out.push((l, c * d));
                    }
                }
                canonical_terms(out)
            })
            .collect()
    }

    /// Δ^(n) computed by expanding the first leg instead of the last.
    pub fn legs_left_assoc(&self, n: usize) -> LegTable {
        let mut cur: LegTable =
            (0..self.dim).map(|i| vec![(Legs::from_slice(&[i]), Scalar::one())]).collect();
        for _ in 1..n {
            cur = cur
                .into_iter()
                .map(|terms| {
                    let mut out = Vec::new();
                    for (legs, c) in terms {
                        for (j, k, d) in self.delta(legs[0]) {
                            let mut l = Legs::from_slice(&[*j, *k]);
                            l.extend_from_slice(&legs[1..]);
                            out.push((l, &c * d));
                        }
                    }
                    canonical_terms(out)
                })
                .collect();
        }
        cur
    }

    pub fn apply_counit(&self, v: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in v.iter() {
            if !self.counit[*i].is_zero() {
                acc += &(c * &self.counit[*i]);
            }
        }
        acc
    }

    pub fn validate(&self) -> Vec<CheckResult> {
        let l = &self.labels;
        let three = self.legs(3);
        let left = self.legs_left_assoc(3);
        let coassoc = check_tuples("coassociativity", &[l], |t| three[t[0]] == left[t[0]]);
        let counit = check_tuples("counit", &[l], |t| {
            let i = t[0];
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (j, k, c) in self.delta(i) {
                left.push((*k, c * &self.counit[*j]));
                right.push((*j, c * &self.counit[*k]));
            }
            let e = SparseVec::unit(i);
            SparseVec::from_terms(left) == e && SparseVec::from_terms(right) == e
        });
        vec![coassoc, counit]
    }

    /// Tensor product coalgebra: Δ(x ⊗ y) = Σ (x_(1) ⊗ y_(1)) ⊗ (x_(2) ⊗ y_(2)).
    pub fn tensor(&self, other: &CoalgebraData) -> CoalgebraData {
        let d2 = other.dim;
        let mut comult = Vec::with_capacity(self.dim * d2);
        let mut counit = Vec::with_capacity(self.dim * d2);
        for x in 0..self.dim {
            for y in 0..d2 {
                let mut terms = Vec::new();
                for (x1, x2, a) in self.delta(x) {
                    for (y1, y2, b) in other.delta(y) {
                        terms.push((x1 * d2 + y1, x2 * d2 + y2, a * b));
                    }
                }
                comult.push(terms);
                counit.push(&self.counit[x] * &other.counit[y]);
            }
        }
        CoalgebraData::new(tensor_labels(&self.labels, &other.labels), comult, counit)
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let flipped: Vec<(Legs, Scalar)> =
                self.delta(i).iter().map(|(j, k, c)| (Legs::from_slice(&[*k, *j]), c.clone())).collect();
            let orig: Vec<(Legs, Scalar)> =
                self.delta(i).iter().map(|(j, k, c)| (Legs::from_slice(&[*j, *k]), c.clone())).collect();
            canonical_terms(flipped) == orig
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouplike_legs() {
        let c = CoalgebraData::grouplike(vec!["a".into(), "b".into()]);
        let l = c.legs(4);
        assert_eq!(l[1].len(), 1);
        assert_eq!(l[1][0].0.as_slice(), &[1, 1, 1, 1]);
        assert!(c.validate().iter().all(|r| r.passed()));
        assert!(c.is_cocommutative());
    }
}
