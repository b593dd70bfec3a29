//! Scenario configuration, read from JSON with per-scenario defaults.

use hp_constructors::{FiniteGroup, GroupCocycleTable, GroupSubset};
use serde::{Deserialize, Serialize};

use crate::ScenarioError;

pub const SCENARIOS: [&str; 4] = ["klein4", "smoke-z2", "induced-functions", "group-dictionary"];

/// Every field may be omitted in JSON; missing fields take the defaults of
/// the scenario named by `name`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    /// Group preset (`z2`, `klein4`, `c3`, ...), acting through its regular permutation representation.
    pub group: String,
    /// Order of the cyclic truncation of the circle.
    pub m: u32,
    /// Tensor arity, equal to the degree of the permutation representation.
    pub n: usize,
    pub subset: Vec<String>,
    /// `klein4` or `trivial`.
    pub cocycle: String,
    pub seed: u64,
    pub sample_count: usize,
    /// Order N of the cyclotomic field Q(ζ_N) the scenario computes in.
    pub field_order: u32,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Partial {
    name: Option<String>,
    group: Option<String>,
    m: Option<u32>,
    n: Option<usize>,
    subset: Option<Vec<String>>,
    cocycle: Option<String>,
    seed: Option<u64>,
    sample_count: Option<usize>,
    field_order: Option<u32>,
}

impl ScenarioConfig {
    pub fn default_for(name: &str) -> Result<Self, ScenarioError> {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let base = |group: &str, n, subset, cocycle: &str| ScenarioConfig {
            name: name.to_string(),
            group: group.into(),
            m: 2,
            n,
            subset,
            cocycle: cocycle.into(),
            seed: 0,
            sample_count: 10_000,
            field_order: 2,
        };
        match name {
            "klein4" => Ok(base("klein4", 4, s(&["e", "a", "b"]), "klein4")),
            "smoke-z2" => Ok(base("z2", 2, s(&["a"]), "trivial")),
            "induced-functions" => Ok(base("klein4", 4, s(&["e", "a"]), "klein4")),
            "group-dictionary" => Ok(base("z2", 2, s(&["a"]), "trivial")),
            other => Err(ScenarioError::UnknownScenario(other.to_string())),
        }
    }

    /// Fields present in `json` override the defaults of the scenario it
    /// names, or of `fallback` when it names none.
    pub fn from_json(json: &str, fallback: &str) -> Result<Self, ScenarioError> {
        let p: Partial = serde_json::from_str(json).map_err(|e| ScenarioError::Config(e.to_string()))?;
        let mut c = ScenarioConfig::default_for(p.name.as_deref().unwrap_or(fallback))?;
        if let Some(v) = p.group {
            c.group = v;
        }
        if let Some(v) = p.m {
            c.m = v;
        }
        if let Some(v) = p.n {
            c.n = v;
        }
        if let Some(v) = p.subset {
            c.subset = v;
        }
        if let Some(v) = p.cocycle {
            c.cocycle = v;
        }
        if let Some(v) = p.seed {
            c.seed = v;
        }
        if let Some(v) = p.sample_count {
            c.sample_count = v;
        }
        if let Some(v) = p.field_order {
            c.field_order = v;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        let bad = |m: String| Err(ScenarioError::Config(m));
        let group = self.group()?;
        if self.subset.is_empty() {
            return bad("subset must be nonempty".into());
        }
        GroupSubset::from_names(&group, &self.subset).map_err(|e| ScenarioError::Config(e.to_string()))?;
        if self.m == 0 {
            return bad("m must be positive".into());
        }
        if self.n != group.order() {
            return bad(format!("n = {} but the regular representation of {} has degree {}", self.n, self.group, group.order()));
        }
        if self.field_order == 0 || self.field_order % self.m != 0 {
            return bad(format!("field order {} is not divisible by m = {}", self.field_order, self.m));
        }
        self.cocycle_table(&group)?;
        if self.name == "group-dictionary" && self.group != "z2" {
            return bad("group-dictionary is defined for z2 only".into());
        }
        Ok(())
    }

    pub fn group(&self) -> Result<FiniteGroup, ScenarioError> {
        FiniteGroup::preset(&self.group).map_err(|e| ScenarioError::Config(e.to_string()))
    }

    pub fn cocycle_table(&self, group: &FiniteGroup) -> Result<GroupCocycleTable, ScenarioError> {
        match self.cocycle.as_str() {
            "trivial" => Ok(GroupCocycleTable::trivial(group.clone())),
            "klein4" if *group == FiniteGroup::klein4() => {
                Ok(GroupCocycleTable::klein4_table())
            }
            "klein4" => Err(ScenarioError::Config("the klein4 cocycle needs the klein4 group".into())),
            other => Err(ScenarioError::Config(format!("unknown cocycle table {other:?}"))),
        }
    }

    pub fn subset(&self, group: &FiniteGroup) -> Result<GroupSubset, ScenarioError> {
        GroupSubset::from_names(group, &self.subset).map_err(|e| ScenarioError::Config(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for s in SCENARIOS {
            ScenarioConfig::default_for(s).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn partial_json_overrides() {
        let c = ScenarioConfig::from_json(r#"{"seed": 7, "sample_count": 10}"#, "klein4").unwrap();
        assert_eq!((c.seed, c.sample_count, c.m), (7, 10, 2));
        assert!(ScenarioConfig::from_json(r#"{"subset": []}"#, "klein4").is_err());
        assert!(ScenarioConfig::from_json(r#"{"m": 3}"#, "klein4").is_err());
        assert!(ScenarioConfig::from_json(r#"{"bogus": 1}"#, "klein4").is_err());
        assert!(ScenarioConfig::from_json(r#"{"name": "nope"}"#, "klein4").is_err());
    }
}
