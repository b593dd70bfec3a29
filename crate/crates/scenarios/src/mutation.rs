//! Single-entry corruptions of a scenario, addressed as `target:op:index`.
//!
//! `index` counts the eligible entries of the target in basis order; what is
//! eligible is stated per target below. Each catalogue entry names a config
//! on which index 0 is eligible and the checks that must then fail. Failures
//! propagate, so later checks built on the corrupted entry may fail too.

use std::fmt;
use std::str::FromStr;

use hp_algebra::{HopfAlgebraData, LinMap};
use hp_cleft::CleftData;
use hp_constructors::GroupCocycleTable;
use hp_gauge::GaugePair;
use hp_partial::TwistedPartialAction;
use hp_scalars::{ExactMatrix, Scalar, SparseVec};

use crate::ScenarioError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub target: &'static str,
    pub op: &'static str,
    pub description: &'static str,
    /// Config (JSON, overriding scenario defaults) of a small run where index
    /// 0 exists and the corruption shows.
    pub config: &'static str,
    /// `section/check` names that fail there with index 0.
    pub expected: &'static [&'static str],
}

pub const CATALOGUE: [CatalogueEntry; 12] = [
    CatalogueEntry {
        target: "omega",
        op: "negate",
        description: "ω(h, l) ↦ −ω(h, l) for non-unit h, l with ω(h, l) ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["cocycle/cocycle-law", "crossed-product/criterion-cocycle-law", "crossed-product/exhaustive-associativity"],
    },
    CatalogueEntry {
        target: "omega",
        op: "spill",
        description: "ω(h, l) += e_i for the first basis element e_i not fixed by hl·1",
        config: r#"{"name": "induced-functions", "subset": ["e", "a", "b"]}"#,
        expected: &["twisted-partial/cocycle-absorbs-unit-action"],
    },
    CatalogueEntry {
        target: "action",
        op: "negate",
        description: "h·e_a ↦ −h·e_a for non-unit h with h·e_a ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["twisted-partial/action-multiplicative"],
    },
    CatalogueEntry {
        target: "cocycle-table",
        op: "negate",
        description: "γ(g, s) ↦ −γ(g, s) for non-identity g, s",
        config: r#"{"name": "klein4", "subset": ["e"]}"#,
        expected: &["group-cocycle/group-cocycle-law"],
    },
    CatalogueEntry {
        target: "cocycle-table",
        op: "scale",
        description: "γ(g, s) ↦ 2γ(g, s) for non-identity g, s",
        config: r#"{"name": "klein4", "subset": ["e"]}"#,
        expected: &["group-cocycle/group-cocycle-law"],
    },
    CatalogueEntry {
        target: "antipode",
        op: "corrupt",
        description: "S(x) ↦ 2S(x) on the acting Hopf algebra for non-unit x",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["hopf-smash/antipode-left", "hopf-smash/antipode-right"],
    },
    CatalogueEntry {
        target: "omega-prime",
        op: "negate",
        description: "ω′(h, l) ↦ −ω′(h, l) for non-unit h, l with ω′(h, l) ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["symmetric/inverse-two-sided"],
    },
    CatalogueEntry {
        target: "gamma",
        op: "scale",
        description: "γ(k) ↦ 2γ(k) for the cleaving map, non-unit k with γ(k) ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["cleft/gamma-gamma-prime", "cleft/derived/e-idempotent"],
    },
    CatalogueEntry {
        target: "gamma-prime",
        op: "zero",
        description: "γ′(k) ↦ 0 for non-unit k with γ′(k) ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["cleft/gamma-gamma-prime", "cleft/iv/expansion"],
    },
    CatalogueEntry {
        target: "u",
        op: "break",
        description: "u(h) += 1 − h·1 for h with 0 ≠ h·1 ≠ 1, breaking the absorption clause",
        config: r#"{"name": "induced-functions", "subset": ["e", "a", "b"]}"#,
        expected: &["gauge/gauge-absorbs-unit-right"],
    },
    CatalogueEntry {
        target: "v",
        op: "scale",
        description: "v(h) ↦ 2v(h) for non-unit h with v(h) ≠ 0, breaking u ∗ v = e",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["gauge/gauge-inverse", "gauge/isomorphism/psi-after-phi"],
    },
    CatalogueEntry {
        target: "sigma",
        op: "negate",
        description: "σ(h, l) ↦ −σ(h, l) in the gauge target for non-unit h, l with σ(h, l) ≠ 0",
        config: r#"{"name": "smoke-z2"}"#,
        expected: &["gauge/gauge-twists-cocycle"],
    },
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub target: String,
    pub op: String,
    pub index: usize,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.target, self.op, self.index)
    }
}

impl FromStr for Mutation {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ScenarioError::Mutation(format!("expected target:op:index, got {s:?}"));
        let mut parts = s.split(':');
        let (Some(target), Some(op), Some(index), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let index = index.parse().map_err(|_| bad())?;
        let m = Mutation { target: target.into(), op: op.into(), index };
        m.entry()?;
        Ok(m)
    }
}

fn out_of_range(m: &Mutation, n: usize) -> ScenarioError {
    ScenarioError::Mutation(format!("{m}: only {n} eligible entries"))
}

fn pick<T: Clone>(m: &Mutation, eligible: &[T]) -> Result<T, ScenarioError> {
    eligible.get(m.index).cloned().ok_or_else(|| out_of_range(m, eligible.len()))
}

fn set_column(map: &LinMap, i: usize, v: SparseVec) -> LinMap {
    let mut cols = map.columns().to_vec();
    cols[i] = v;
    LinMap::from_columns(map.sources.clone(), map.target, cols)
}

fn two() -> Scalar {
    Scalar::from_int(2)
}

impl CatalogueEntry {
    pub fn mutation(&self) -> Mutation {
        Mutation { target: self.target.into(), op: self.op.into(), index: 0 }
    }

    pub fn scenario_config(&self) -> Result<crate::ScenarioConfig, ScenarioError> {
        crate::ScenarioConfig::from_json(self.config, "smoke-z2")
    }
}

impl Mutation {
    pub fn entry(&self) -> Result<&'static CatalogueEntry, ScenarioError> {
        CATALOGUE
            .iter()
            .find(|e| e.target == self.target && e.op == self.op)
            .ok_or_else(|| ScenarioError::Mutation(format!("unknown mutation {}:{}", self.target, self.op)))
    }

    pub fn targets(&self, target: &str) -> bool {
        self.target == target
    }

    pub fn apply_table(&self, t: &GroupCocycleTable) -> Result<GroupCocycleTable, ScenarioError> {
        let g = &t.group;
        let e = g.identity;
        let eligible: Vec<(usize, usize)> =
            (0..g.order()).flat_map(|x| (0..g.order()).map(move |y| (x, y))).filter(|&(x, y)| x != e && y != e).collect();
        let at = pick(self, &eligible)?;
        let f = if self.op == "negate" { Scalar::from_int(-1) } else { two() };
        GroupCocycleTable::from_fn(g.clone(), |x, y| if (x, y) == at { t.value(x, y) * &f } else { t.value(x, y).clone() })
            .map_err(|e| ScenarioError::Mutation(e.to_string()))
    }

    pub fn apply_hopf(&self, h: &HopfAlgebraData) -> Result<HopfAlgebraData, ScenarioError> {
        let one = h.unit_index();
        let eligible: Vec<usize> = (0..h.dim()).filter(|&x| Some(x) != one && !h.antipode_of(x).is_zero()).collect();
        let x = pick(self, &eligible)?;
        let cols = (0..h.dim()).map(|i| if i == x { h.antipode_of(i).scale(&two()) } else { h.antipode_of(i).clone() }).collect();
        Ok(HopfAlgebraData::new(h.algebra.clone(), h.coalgebra.clone(), ExactMatrix::from_columns(h.dim(), cols)))
    }

    /// Non-unit pairs with a nonzero value of `w`, as column indices.
    fn pair_entries(t: &TwistedPartialAction, w: &LinMap) -> Vec<usize> {
        let dh = t.dim_h();
        let one = t.hopf.unit_index();
        (0..dh * dh)
            .filter(|&c| Some(c / dh) != one && Some(c % dh) != one && !w.columns()[c].is_zero())
            .collect()
    }

    /// `omega`, `action` and `omega-prime` targets.
    pub fn apply_tpa(&self, t: &TwistedPartialAction) -> Result<TwistedPartialAction, ScenarioError> {
        let dh = t.dim_h();
        let perr = |e: hp_partial::PartialError| ScenarioError::Mutation(e.to_string());
        match (self.target.as_str(), self.op.as_str()) {
            ("omega", "negate") => {
                let c = pick(self, &Self::pair_entries(t, t.cocycle()))?;
                t.with_cocycle(set_column(t.cocycle(), c, t.cocycle().columns()[c].neg())).map_err(perr)
            }
            ("omega", "spill") => {
                let eligible: Vec<(usize, usize)> = Self::pair_entries(t, t.cocycle())
                    .into_iter()
                    .filter_map(|c| {
                        let e = t.prod_unit(c / dh, c % dh);
                        (0..t.dim_a()).find(|&i| t.amul(&SparseVec::unit(i), &e) != SparseVec::unit(i)).map(|i| (c, i))
                    })
                    .collect();
                let (c, i) = pick(self, &eligible)?;
                t.with_cocycle(set_column(t.cocycle(), c, t.cocycle().columns()[c].add(&SparseVec::unit(i)))).map_err(perr)
            }
            ("action", "negate") => {
                let da = t.dim_a();
                let one = t.hopf.unit_index();
                let eligible: Vec<usize> =
                    (0..dh * da).filter(|&c| Some(c / da) != one && !t.action().columns()[c].is_zero()).collect();
                let c = pick(self, &eligible)?;
                let action = set_column(t.action(), c, t.action().columns()[c].neg());
                let pa = hp_partial::PartialAction::new(t.hopf.clone(), t.carrier.clone(), action).map_err(perr)?;
                let mut out = TwistedPartialAction::new(pa, t.cocycle().clone()).map_err(perr)?;
                if let Some(w) = t.inverse_cocycle() {
                    out = out.with_inverse(w.clone()).map_err(perr)?;
                }
                Ok(out)
            }
            ("omega-prime", "negate") => {
                let w = t.inverse_cocycle().ok_or_else(|| ScenarioError::Mutation("no ω′ to mutate".into()))?;
                let c = pick(self, &Self::pair_entries(t, w))?;
                t.clone().with_inverse(set_column(w, c, w.columns()[c].neg())).map_err(perr)
            }
            _ => Err(ScenarioError::Mutation(format!("{self} does not act on a twisted partial action"))),
        }
    }

    pub fn apply_cleft(&self, cd: &CleftData) -> Result<CleftData, ScenarioError> {
        let h = cd.hopf();
        let one = h.unit_index();
        let nonzero = |m: &LinMap| (0..h.dim()).filter(|&k| Some(k) != one && !m.at(&[k]).is_zero()).collect::<Vec<_>>();
        match (self.target.as_str(), self.op.as_str()) {
            ("gamma", "scale") => {
                let k = pick(self, &nonzero(&cd.gamma))?;
                Ok(cd.with_gamma(set_column(&cd.gamma, k, cd.gamma.at(&[k]).scale(&two()))))
            }
            ("gamma-prime", "zero") => {
                let k = pick(self, &nonzero(&cd.gamma_prime))?;
                Ok(cd.with_gamma_prime(set_column(&cd.gamma_prime, k, SparseVec::new())))
            }
            _ => Err(ScenarioError::Mutation(format!("{self} does not act on cleaving maps"))),
        }
    }

    pub fn apply_gauge(&self, gp: &GaugePair) -> Result<GaugePair, ScenarioError> {
        let s = &gp.source;
        let h = &s.hopf;
        let one = h.unit_index();
        let unit = &s.carrier.unit;
        match (self.target.as_str(), self.op.as_str()) {
            ("u", "break") => {
                let eligible: Vec<usize> = (0..h.dim())
                    .filter(|&k| s.unit_action(k) != unit && !s.unit_action(k).is_zero())
                    .collect();
                let k = pick(self, &eligible)?;
                let spill = gp.u.at(&[k]).add(&unit.sub(s.unit_action(k)));
                Ok(GaugePair { u: set_column(&gp.u, k, spill), ..gp.clone() })
            }
            ("v", "scale") => {
                let eligible: Vec<usize> = (0..h.dim()).filter(|&k| Some(k) != one && !gp.v.at(&[k]).is_zero()).collect();
                let k = pick(self, &eligible)?;
                Ok(GaugePair { v: set_column(&gp.v, k, gp.v.at(&[k]).scale(&two())), ..gp.clone() })
            }
            ("sigma", "negate") => {
                let t = &gp.target;
                let c = pick(self, &Self::pair_entries(t, t.cocycle()))?;
                let target = t
                    .with_cocycle(set_column(t.cocycle(), c, t.cocycle().columns()[c].neg()))
                    .map_err(|e| ScenarioError::Mutation(e.to_string()))?;
                Ok(GaugePair { target, ..gp.clone() })
            }
            _ => Err(ScenarioError::Mutation(format!("{self} does not act on a gauge pair"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let m: Mutation = "omega:negate:3".parse().unwrap();
        assert_eq!(m.index, 3);
        assert_eq!(m.to_string(), "omega:negate:3");
        assert!("omega:negate".parse::<Mutation>().is_err());
        assert!("omega:frobnicate:0".parse::<Mutation>().is_err());
        assert!("omega:negate:x".parse::<Mutation>().is_err());
    }

    #[test]
    fn catalogue_is_unique() {
        for (i, a) in CATALOGUE.iter().enumerate() {
            assert!(CATALOGUE[i + 1..].iter().all(|b| (a.target, a.op) != (b.target, b.op)));
        }
    }
}
