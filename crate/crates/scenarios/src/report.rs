//! Scenario reports and field-level comparison against golden files.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hp_algebra::{CheckResult, Status};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::ScenarioConfig;
use crate::ScenarioError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Deterministic given the config and seed: no timings, ordered maps only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub tool_version: String,
    pub scenario: String,
    pub config: ScenarioConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    pub facts: BTreeMap<String, String>,
    pub sections: Vec<Section>,
    pub summary: Summary,
}

impl ScenarioReport {
    pub fn new(config: &ScenarioConfig) -> Self {
        ScenarioReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            scenario: config.name.clone(),
            config: config.clone(),
            mutation: None,
            facts: BTreeMap::new(),
            sections: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.insert(key.to_string(), value.to_string());
    }

    pub fn section(&mut self, name: &str, checks: Vec<CheckResult>) {
        self.sections.push(Section { name: name.to_string(), checks });
        self.summarize();
    }

    /// A stage that could not run because an earlier one failed.
    pub fn skip(&mut self, name: &str, reason: impl ToString) {
        self.section(name, vec![CheckResult::skipped("stage", reason.to_string())]);
    }

    fn summarize(&mut self) {
        let mut s = Summary::default();
        for c in self.checks() {
            s.checks += 1;
            match c.1.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        self.summary = s;
    }

    /// `(section, check)` pairs in report order.
    pub fn checks(&self) -> impl Iterator<Item = (&str, &CheckResult)> {
        self.sections.iter().flat_map(|s| s.checks.iter().map(move |c| (s.name.as_str(), c)))
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// `section/check` for every failing check.
    pub fn failing(&self) -> Vec<String> {
        self.checks().filter(|(_, c)| c.status == Status::Fail).map(|(s, c)| format!("{s}/{}", c.name)).collect()
    }

    pub fn find(&self, section: &str, name: &str) -> Option<&CheckResult> {
        self.checks().find(|(s, c)| *s == section && c.name == name).map(|(_, c)| c)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn golden_path(dir: &Path, scenario: &str) -> PathBuf {
    dir.join(format!("{scenario}.json"))
}

/// The golden directory shipped with this crate.
pub fn default_golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

pub fn record_golden(dir: &Path, report: &ScenarioReport) -> Result<PathBuf, ScenarioError> {
    std::fs::create_dir_all(dir).map_err(|e| ScenarioError::Io(e.to_string()))?;
    let path = golden_path(dir, &report.scenario);
    std::fs::write(&path, report.to_json()).map_err(|e| ScenarioError::Io(e.to_string()))?;
    Ok(path)
}

/// Differences between the golden file and `report`, one line per field;
/// empty when they agree. A missing golden file is an error.
pub fn check_golden(dir: &Path, report: &ScenarioReport) -> Result<Vec<String>, ScenarioError> {
    let path = golden_path(dir, &report.scenario);
    let text = std::fs::read_to_string(&path).map_err(|_| ScenarioError::MissingGolden(path.display().to_string()))?;
    let golden: Value = serde_json::from_str(&text).map_err(|e| ScenarioError::Config(format!("{}: {e}", path.display())))?;
    let current = serde_json::to_value(report).expect("report serializes");
    let mut out = Vec::new();
    diff_values("", &golden, &current, &mut out);
    Ok(out)
}

pub fn diff_values(path: &str, a: &Value, b: &Value, out: &mut Vec<String>) {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            let keys: std::collections::BTreeSet<&String> = x.keys().chain(y.keys()).collect();
            for k in keys {
                let p = format!("{path}/{k}");
                match (x.get(k), y.get(k)) {
                    (Some(u), Some(v)) => diff_values(&p, u, v, out),
                    (Some(u), None) => out.push(format!("{p}: removed (was {u})")),
                    (None, Some(v)) => out.push(format!("{p}: added {v}")),
                    (None, None) => {}
                }
            }
        }
        (Value::Array(x), Value::Array(y)) => {
            for i in 0..x.len().max(y.len()) {
                let p = format!("{path}/{i}");
                match (x.get(i), y.get(i)) {
                    (Some(u), Some(v)) => diff_values(&p, u, v, out),
                    (Some(u), None) => out.push(format!("{p}: removed (was {u})")),
                    (None, Some(v)) => out.push(format!("{p}: added {v}")),
                    (None, None) => {}
                }
            }
        }
        _ if a != b => out.push(format!("{path}: {a} -> {b}")),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn field_level_diff() {
        let a = json!({"x": 1, "s": [{"n": "p", "status": "pass"}]});
        let b = json!({"x": 1, "s": [{"n": "p", "status": "fail"}], "y": true});
        let mut out = Vec::new();
        diff_values("", &a, &b, &mut out);
        assert_eq!(out, vec!["/s/0/status: \"pass\" -> \"fail\"".to_string(), "/y: added true".to_string()]);
    }
}
