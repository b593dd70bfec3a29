//! Hopf algebras by structure constants: validation, tensor products, duals.

use std::sync::Arc;

use hp_scalars::{ExactMatrix, Scalar, SparseVec};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{tensor_vec, StructuredAlgebra};
use crate::coalgebra::{CoalgebraData, LegTable};
use crate::linmap::LinMap;
use crate::report::{check_tuples, CheckResult};

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebraData {
    pub algebra: StructuredAlgebra,
    pub coalgebra: CoalgebraData,
    pub antipode: ExactMatrix,
}

/// Per-law results of [`validate_hopf`].
pub type ValidationReport = Vec<CheckResult>;

impl HopfAlgebraData {
    pub fn new(algebra: StructuredAlgebra, coalgebra: CoalgebraData, antipode: ExactMatrix) -> Self {
        assert_eq!(algebra.dim, coalgebra.dim, "algebra and coalgebra dimensions differ");
        assert_eq!(antipode.rows(), algebra.dim);
        assert_eq!(antipode.cols(), algebra.dim);
        HopfAlgebraData { algebra, coalgebra, antipode }
    }

    /// The one-dimensional Hopf algebra κ.
    pub fn trivial() -> Self {
        let labels = vec!["1".to_string()];
        HopfAlgebraData::new(
            StructuredAlgebra::from_fn(labels.clone(), SparseVec::unit(0), |_, _| SparseVec::unit(0)),
            CoalgebraData::grouplike(labels),
            ExactMatrix::identity(1),
        )
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.algebra.labels
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.algebra.mul_basis(i, j)
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.algebra.mul(x, y)
    }

    pub fn one(&self) -> &SparseVec {
        &self.algebra.unit
    }

    /// Index of the unit when it is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        match self.one().entries() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }

    #[inline]
    pub fn delta(&self, i: usize) -> &[(usize, usize, Scalar)] {
        self.coalgebra.delta(i)
    }

    pub fn legs(&self, n: usize) -> Arc<LegTable> {
        self.coalgebra.legs(n)
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.coalgebra.counit[i]
    }

    pub fn antipode_of(&self, i: usize) -> &SparseVec {
        self.antipode.column(i)
    }

    pub fn delta_vec(&self, x: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut terms = Vec::new();
        for (i, a) in x.iter() {
            for (j, k, c) in self.delta(*i) {
                terms.push((j * d + k, a * c));
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Every basis element is grouplike.
    pub fn is_pointed_basis(&self) -> bool {
        (0..self.dim()).all(|i| matches!(self.delta(i), [(j, k, c)] if *j == i && *k == i && c.is_one()))
    }
}

/// Checks every Hopf algebra law exhaustively on basis elements.
pub fn validate_hopf(h: &HopfAlgebraData) -> ValidationReport {
    let mut out = h.algebra.validate();
    out.extend(h.coalgebra.validate());
    let d = h.dim();
    let l = h.labels();
    let alg2 = &h.algebra.tensor(&h.algebra);
    out.push(check_tuples("comult-multiplicative", &[l, l], |t| {
        let lhs = h.delta_vec(h.mul_basis(t[0], t[1]));
        let rhs = alg2.mul(&h.delta_vec(&SparseVec::unit(t[0])), &h.delta_vec(&SparseVec::unit(t[1])));
        lhs == rhs
    }));
    out.push(CheckResult::from_bool(
        "comult-unital",
        h.delta_vec(h.one()) == tensor_vec(h.one(), h.one(), d),
        "Δ(1) differs from 1⊗1",
    ));
    out.push(check_tuples("counit-multiplicative", &[l, l], |t| {
        h.coalgebra.apply_counit(h.mul_basis(t[0], t[1])) == h.counit(t[0]) * h.counit(t[1])
    }));
    out.push(CheckResult::from_bool(
        "counit-unital",
        h.coalgebra.apply_counit(h.one()).is_one(),
        "ε(1) differs from 1",
    ));
    let antipode_side = |name: &str, left: bool| {
        check_tuples(name, &[l], |t| {
            let mut acc = SparseVec::new();
            for (j, k, c) in h.delta(t[0]) {
                let p = if left {
                    h.mul(h.antipode_of(*j), &SparseVec::unit(*k))
                } else {
                    h.mul(&SparseVec::unit(*j), h.antipode_of(*k))
                };
                acc = acc.axpy(c, &p);
            }
            acc == h.one().scale(h.counit(t[0]))
        })
    };
    out.push(antipode_side("antipode-left", true));
    out.push(antipode_side("antipode-right", false));
    out
}

/// H1 ⊗ H2 with the middle-flip comultiplication and S ⊗ S.
pub fn tensor_hopf(h1: &HopfAlgebraData, h2: &HopfAlgebraData) -> HopfAlgebraData {
    let d2 = h2.dim();
    let algebra = h1.algebra.tensor(&h2.algebra);
    let coalgebra = h1.coalgebra.tensor(&h2.coalgebra);
    let n = h1.dim() * d2;
    let cols = (0..n).map(|x| tensor_vec(h1.antipode_of(x / d2), h2.antipode_of(x % d2), d2)).collect();
    HopfAlgebraData::new(algebra, coalgebra, ExactMatrix::from_columns(n, cols))
}

/// Label of the dual basis functional of a basis element.
pub fn dual_label(l: &str) -> String {
    match l.strip_prefix("u_") {
        Some(rest) => format!("p_{rest}"),
        None => format!("{l}*"),
    }
}

/// The dual Hopf algebra on the dual basis: multiplication and
/// comultiplication are transposed, S is transposed.
pub fn dual_hopf(h: &HopfAlgebraData) -> HopfAlgebraData {
    let d = h.dim();
    let labels: Vec<String> = h.labels().iter().map(|l| dual_label(l)).collect();
    // p_i p_j = Σ_k [coefficient of e_i ⊗ e_j in Δ(e_k)] p_k
    let mut prod: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
    for k in 0..d {
        for (i, j, c) in h.delta(k) {
            prod[i * d + j].push((k, c.clone()));
        }
    }
    let unit = SparseVec::from_terms((0..d).map(|k| (k, h.counit(k).clone())).collect());
    let prod = prod.into_iter().map(SparseVec::from_terms).collect();
    let algebra = StructuredAlgebra::from_table(labels.clone(), unit, prod);
    // Δ(p_k) = Σ_{i,j} [coefficient of e_k in e_i e_j] p_i ⊗ p_j
    let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); d];
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.mul_basis(i, j).iter() {
                comult[*k].push((i, j, c.clone()));
            }
        }
    }
    let counit = (0..d).map(|k| h.one().get(k)).collect();
    let coalgebra = CoalgebraData::new(labels, comult, counit);
    HopfAlgebraData::new(algebra, coalgebra, h.antipode.transpose())
}

/// Δ^(legs) as a linear map H → H^{⊗legs}.
pub fn iterated_comult(h: &HopfAlgebraData, legs: usize) -> LinMap {
    let d = h.dim();
    let table = h.legs(legs);
    let target = d.pow(legs as u32);
    let cols = table
        .iter()
        .map(|terms| {
            SparseVec::from_terms(
                terms.iter().map(|(l, c)| (l.iter().fold(0, |acc, i| acc * d + i), c.clone())).collect(),
            )
        })
        .collect();
    LinMap::from_columns(vec![d], target, cols)
}

#[derive(Serialize, Deserialize)]
struct HopfWire {
    dim: usize,
    labels: Vec<String>,
    mult: Vec<(usize, usize, usize, Scalar)>,
    unit: Vec<(usize, Scalar)>,
    comult: Vec<(usize, usize, usize, Scalar)>,
    counit: Vec<(usize, Scalar)>,
    antipode: Vec<(usize, usize, Scalar)>,
}

impl Serialize for HopfAlgebraData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let d = self.dim();
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.mul_basis(i, j).iter() {
                    mult.push((i, j, *k, c.clone()));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..d {
            for (j, k, c) in self.delta(i) {
                comult.push((i, *j, *k, c.clone()));
            }
        }
        HopfWire {
            dim: d,
            labels: self.labels().to_vec(),
            mult,
            unit: self.one().entries().to_vec(),
            comult,
            counit: (0..d).filter(|i| !self.counit(*i).is_zero()).map(|i| (i, self.counit(i).clone())).collect(),
            antipode: self.antipode.entries().map(|(r, c, v)| (r, c, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HopfAlgebraData {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let w = HopfWire::deserialize(de)?;
        let d = w.dim;
        if w.labels.len() != d {
            return Err(D::Error::custom("label count differs from dim"));
        }
        let range = |i: usize| if i < d { Ok(i) } else { Err(D::Error::custom(format!("index {i} out of range"))) };
        let mut mult = vec![Vec::new(); d * d];
        for (i, j, k, c) in w.mult {
            mult[range(i)? * d + range(j)?].push((range(k)?, c));
        }

        for (k, _) in &w.unit {
            range(*k)?;
        }
        let unit = SparseVec::from_terms(w.unit);
        let algebra =
            StructuredAlgebra::from_table(w.labels.clone(), unit, mult.into_iter().map(SparseVec::from_terms).collect());
        let mut comult = vec![Vec::new(); d];
        for (i, j, k, c) in w.comult {
            comult[range(i)?].push((range(j)?, range(k)?, c));
        }
        let mut counit = vec![Scalar::zero(); d];
        for (i, c) in w.counit {
            counit[range(i)?] = c;
        }
        for (r, c, _) in &w.antipode {
            range(*r)?;
            range(*c)?;
        }
        let antipode = ExactMatrix::from_triplets(d, d, w.antipode);
        Ok(HopfAlgebraData::new(algebra, CoalgebraData::new(w.labels, comult, counit), antipode))
    }
}

/// Hopf algebra with labels replaced.
pub fn relabel(h: &HopfAlgebraData, labels: Vec<String>) -> HopfAlgebraData {
    assert_eq!(labels.len(), h.dim());
    let mut algebra = h.algebra.clone();
    algebra.labels = labels.clone();
    let coalgebra = CoalgebraData::new(labels, h.coalgebra.comult.clone(), h.coalgebra.counit.clone());
    HopfAlgebraData::new(algebra, coalgebra, h.antipode.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> HopfAlgebraData {
        let labels: Vec<String> = (0..n).map(|i| format!("u_{i}")).collect();
        let algebra = StructuredAlgebra::from_fn(labels.clone(), SparseVec::unit(0), |i, j| SparseVec::unit((i + j) % n));
        let antipode = ExactMatrix::from_columns(n, (0..n).map(|i| SparseVec::unit((n - i) % n)).collect());
        HopfAlgebraData::new(algebra, CoalgebraData::grouplike(labels), antipode)
    }

    #[test]
    fn cyclic_group_algebra_validates() {
        assert!(validate_hopf(&cyclic(3)).iter().all(|c| c.passed()));
    }

    #[test]
    fn corrupted_antipode_fails() {
        let mut h = cyclic(3);
        h.antipode = ExactMatrix::identity(3);
        let r = validate_hopf(&h);
        let left = r.iter().find(|c| c.name == "antipode-left").unwrap();
        assert!(!left.passed());
        assert_eq!(left.witness, Some(vec!["u_1".to_string()]));
    }

    #[test]
    fn dual_and_tensor_validate() {
        let h = cyclic(3);
        let d = dual_hopf(&h);
        assert!(validate_hopf(&d).iter().all(|c| c.passed()));
        assert_eq!(d.mul_basis(1, 1), &SparseVec::unit(1));
        assert!(d.mul_basis(1, 2).is_zero());
        let t = tensor_hopf(&h, &d);
        assert_eq!(t.dim(), 9);
        assert!(validate_hopf(&t).iter().all(|c| c.passed()));
        assert_eq!(relabel(&dual_hopf(&d), h.labels().to_vec()), h);
    }

    #[test]
    fn iterated_comult_matches_left_association() {
        let d = dual_hopf(&cyclic(3));
        assert_eq!(*d.legs(4), d.coalgebra.legs_left_assoc(4));
        assert_eq!(iterated_comult(&d, 1).matrix, ExactMatrix::identity(3));
    }

    #[test]
    fn json_roundtrip() {
        let h = dual_hopf(&cyclic(2));
        let s = serde_json::to_string(&h).unwrap();
        let back: HopfAlgebraData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
    }
}
