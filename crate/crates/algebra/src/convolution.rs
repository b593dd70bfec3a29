//! The convolution algebra Hom(C, A): product, unit, centrality, and inverses
//! inside the ideal generated by a central idempotent.

use std::sync::Arc;

use hp_scalars::{solve_linear, ExactMatrix, Scalar, ScalarError, SparseVec};
use rayon::prelude::*;

use crate::algebra::StructuredAlgebra;
use crate::coalgebra::CoalgebraData;
use crate::linmap::LinMap;
use crate::report::{run_check, CheckResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConvolutionError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not a central idempotent")]
    NotCentralIdempotent(String),
    #[error("element is not in the ideal generated by f1*f2")]
    NotInIdeal,
    #[error("not invertible in the ideal: {0}")]
    NotInvertible(String),
}

/// Values of a map C → A, one coefficient vector per basis element of C.
pub type Values = Vec<SparseVec>;

/// `(f ∗ g)(c) = Σ f(c_(1)) g(c_(2))`.
pub fn convolve(dom: &CoalgebraData, cod: &StructuredAlgebra, f: &[SparseVec], g: &[SparseVec]) -> Values {
    assert_eq!(f.len(), dom.dim);
    assert_eq!(g.len(), dom.dim);
    (0..dom.dim)
        .into_par_iter()
        .with_min_len(64)
        .map(|c| {
            let mut terms = Vec::new();
            for (i, j, k) in dom.delta(c) {
                if f[*i].is_zero() || g[*j].is_zero() {
                    continue;
                }
                let p = cod.mul(&f[*i], &g[*j]);
                terms.extend(p.into_entries().into_iter().map(|(r, v)| (r, &v * k)));
            }
            SparseVec::from_terms(terms)
        })
        .collect()
}

/// The convolution unit `η ∘ ε`.
pub fn convolution_unit(dom: &CoalgebraData, cod: &StructuredAlgebra) -> Values {
    (0..dom.dim).map(|c| cod.unit.scale(&dom.counit[c])).collect()
}

/// Exhaustive test that `f` commutes with every element of Hom(C, A).
///
/// With τ running over the basis maps `e_p ↦ a`, `f ∗ τ = τ ∗ f` unfolds to
/// `Σ_i c_{ip} f(e_i) a = Σ_j c_{pj} a f(e_j)` for every basis `c`, every
/// index `p`, and every basis `a`, where `Δc = Σ c_{ij} e_i ⊗ e_j`.
pub fn centrality_check(
    name: &str,
    dom: &CoalgebraData,
    cod: &StructuredAlgebra,
    f: &[SparseVec],
) -> CheckResult {
    run_check(name, dom.dim, |c, tally| {
        let mut ps: Vec<usize> = Vec::new();
        for (i, j, _) in dom.delta(c) {
            ps.push(*i);
            ps.push(*j);
        }
        ps.sort_unstable();
        ps.dedup();
        for p in ps {
            let mut left = SparseVec::new();
            let mut right = SparseVec::new();
            for (i, j, k) in dom.delta(c) {
                if *j == p {
                    left = left.axpy(k, &f[*i]);
                }
                if *i == p {
                    right = right.axpy(k, &f[*j]);
                }
            }
            for a in 0..cod.dim {
                let e = SparseVec::unit(a);
                let ok = cod.mul(&left, &e) == cod.mul(&e, &right);
                tally.record(ok, || vec![dom.labels[c].clone(), dom.labels[p].clone(), cod.labels[a].clone()]);
            }
        }
    })
}

/// Exhaustive test of `f ∗ f = f`.
pub fn idempotent_check(name: &str, dom: &CoalgebraData, cod: &StructuredAlgebra, f: &[SparseVec]) -> CheckResult {
    let ff = convolve(dom, cod, f, f);
    run_check(name, dom.dim, |c, tally| tally.record(ff[c] == f[c], || vec![dom.labels[c].clone()]))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Basis indices of C grouped into blocks that no comultiplication links.
fn coalgebra_blocks(dom: &CoalgebraData) -> Vec<Vec<usize>> {
    let mut uf = UnionFind((0..dom.dim).collect());
    for c in 0..dom.dim {
        for (i, j, _) in dom.delta(c) {
            uf.union(c, *i);
            uf.union(c, *j);
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; dom.dim];
    for c in 0..dom.dim {
        let r = uf.find(c);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(c);
    }
    blocks
}

/// Solves for the unique `w′` with `w ∗ w′ = w′ ∗ w = f1 ∗ f2` and
/// `w′ = (f1 ∗ f2) ∗ w′`.
///
/// The system splits along blocks of C closed under Δ and each block is
/// solved exactly. A positive-dimensional solution set is reported as
/// `NotInvertible` rather than resolved by choice.
pub fn inverse_in_ideal(
    dom: &CoalgebraData,
    cod: &StructuredAlgebra,
    w: &[SparseVec],
    f1: &[SparseVec],
    f2: &[SparseVec],
) -> Result<Values, ConvolutionError> {
    for (name, f) in [("f1", f1), ("f2", f2)] {
        if f.len() != dom.dim {
            return Err(ConvolutionError::ShapeMismatch(format!("{name} has {} values, expected {}", f.len(), dom.dim)));
        }
        let ok = idempotent_check(name, dom, cod, f).passed() && centrality_check(name, dom, cod, f).passed();
        if !ok {
            return Err(ConvolutionError::NotCentralIdempotent(name.into()));
        }
    }
    if w.len() != dom.dim {
        return Err(ConvolutionError::ShapeMismatch("cocycle has the wrong number of values".into()));
    }
    let e = convolve(dom, cod, f1, f2);
    if convolve(dom, cod, &e, w) != w || convolve(dom, cod, w, &e) != w {
        return Err(ConvolutionError::NotInIdeal);
    }
    let da = cod.dim;
    let blocks = coalgebra_blocks(dom);
    let solved: Vec<Result<Vec<(usize, SparseVec)>, ConvolutionError>> = blocks
        .par_iter()
        .with_min_len(16)
        .map(|block| {
            let mut local = std::collections::HashMap::with_capacity(block.len());
            for (k, c) in block.iter().enumerate() {
                local.insert(*c, k);
            }
            let n_unknowns = block.len() * da;
            let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
            let mut rhs: Vec<(usize, usize, Scalar)> = Vec::new();
            for (k, c) in block.iter().enumerate() {
                let row = |eq: usize, r: usize| (k * 3 + eq) * da + r;
                for (i, j, coef) in dom.delta(*c) {
                    for a in 0..da {
                        let ea = SparseVec::unit(a);
                        // w ∗ X
                        for (r, v) in cod.mul(&w[*i], &ea).iter() {
                            trip.push((row(0, *r), local[j] * da + a, coef * v));
                        }
                        // X ∗ w
                        for (r, v) in cod.mul(&ea, &w[*j]).iter() {
                            trip.push((row(1, *r), local[i] * da + a, coef * v));
                        }
                        // e ∗ X
                        for (r, v) in cod.mul(&e[*i], &ea).iter() {
                            trip.push((row(2, *r), local[j] * da + a, coef * v));
                        }
                    }
                }
                for a in 0..da {
                    trip.push((row(2, a), k * da + a, Scalar::from_int(-1)));
                }
                for (r, v) in e[*c].iter() {
                    rhs.push((row(0, *r), 0, v.clone()));
                    rhs.push((row(1, *r), 0, v.clone()));
                }
            }
            let rows = block.len() * 3 * da;
            let m = ExactMatrix::from_triplets(rows, n_unknowns, trip);
            let b = ExactMatrix::from_triplets(rows, 1, rhs);
            let sol = solve_linear(&m, &b).map_err(|err| match err {
                ScalarError::NoSolution => ConvolutionError::NotInvertible("no solution".into()),
                other => ConvolutionError::NotInvertible(other.to_string()),
            })?;
            if !sol.kernel_basis.is_empty() {
                return Err(ConvolutionError::NotInvertible(format!(
                    "solution space has dimension {}",
                    sol.kernel_basis.len()
                )));
            }
            let x = sol.solution.column(0);
            let mut out: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); block.len()];
            for (u, v) in x.iter() {
                out[u / da].push((u % da, v.clone()));
            }
            Ok(block.iter().zip(out).map(|(c, t)| (*c, SparseVec::from_terms(t))).collect())
        })
        .collect();
    let mut result = vec![SparseVec::new(); dom.dim];
    for part in solved {
        for (c, v) in part? {
            result[c] = v;
        }
    }
    Ok(result)
}

/// An element of Hom(C, A) bundled with its domain and codomain.
#[derive(Clone, Debug)]
pub struct ConvolutionElement {
    pub domain: Arc<CoalgebraData>,
    pub codomain: Arc<StructuredAlgebra>,
    pub values: Values,
}

impl ConvolutionElement {
    pub fn new(domain: Arc<CoalgebraData>, codomain: Arc<StructuredAlgebra>, values: Values) -> Self {
        assert_eq!(values.len(), domain.dim);
        ConvolutionElement { domain, codomain, values }
    }

    pub fn unit(domain: Arc<CoalgebraData>, codomain: Arc<StructuredAlgebra>) -> Self {
        let values = convolution_unit(&domain, &codomain);
        ConvolutionElement { domain, codomain, values }
    }

    fn same_shape(&self, other: &Self) -> Result<(), ConvolutionError> {
        if *self.domain != *other.domain || *self.codomain != *other.codomain {
            return Err(ConvolutionError::ShapeMismatch("different domain or codomain".into()));
        }
        Ok(())
    }

    pub fn convolve(&self, other: &Self) -> Result<Self, ConvolutionError> {
        self.same_shape(other)?;
        let values = convolve(&self.domain, &self.codomain, &self.values, &other.values);
        Ok(ConvolutionElement { domain: self.domain.clone(), codomain: self.codomain.clone(), values })
    }

    pub fn inverse_in_ideal(&self, f1: &Self, f2: &Self) -> Result<Self, ConvolutionError> {
        self.same_shape(f1)?;
        self.same_shape(f2)?;
        let values = inverse_in_ideal(&self.domain, &self.codomain, &self.values, &f1.values, &f2.values)?;
        Ok(ConvolutionElement { domain: self.domain.clone(), codomain: self.codomain.clone(), values })
    }

    pub fn to_linmap(&self) -> LinMap {
        LinMap::from_columns(vec![self.domain.dim], self.codomain.dim, self.values.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StructuredAlgebra;

    fn z2_group_coalgebra() -> CoalgebraData {
        CoalgebraData::grouplike(vec!["u_e".into(), "u_a".into()])
    }

    #[test]
    fn unit_is_neutral() {
        let c = z2_group_coalgebra();
        let a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into()]);
        let f = vec![SparseVec::unit(0), SparseVec::from_terms(vec![(0, Scalar::from_int(2)), (1, Scalar::from_int(3))])];
        let u = convolution_unit(&c, &a);
        assert_eq!(convolve(&c, &a, &f, &u), f);
        assert_eq!(convolve(&c, &a, &u, &f), f);
    }

    #[test]
    fn inverse_of_ideal_unit_is_itself() {
        let c = z2_group_coalgebra();
        let a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into()]);
        // f1 = f2 = e with e(u_e) = 1, e(u_a) = x.
        let e = vec![a.unit.clone(), SparseVec::unit(0)];
        let inv = inverse_in_ideal(&c, &a, &e, &e, &e).unwrap();
        assert_eq!(inv, e);
        // A scaled element of the ideal.
        let w = vec![a.unit.clone(), SparseVec::single(0, Scalar::from_int(4))];
        let inv = inverse_in_ideal(&c, &a, &w, &e, &e).unwrap();
        assert_eq!(inv[1], SparseVec::single(0, Scalar::from_rational(hp_scalars::Rational::new(1, 4))));
    }

    #[test]
    fn non_invertible_detected() {
        let c = z2_group_coalgebra();
        let a = StructuredAlgebra::diagonal(vec!["x".into(), "y".into()]);
        let u = convolution_unit(&c, &a);
        let w = vec![a.unit.clone(), SparseVec::unit(0)];
        assert!(matches!(inverse_in_ideal(&c, &a, &w, &u, &u), Err(ConvolutionError::NotInvertible(_))));
    }
}
