//! Check results and the exhaustive-loop driver shared by every verifier.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

static FULL_WITNESSES: AtomicBool = AtomicBool::new(false);

/// Upper bound on stored witnesses per check when full lists are requested.
pub const WITNESS_CAP: usize = 1000;

/// When set, checks keep every failing witness (up to [`WITNESS_CAP`]).
pub fn set_full_witnesses(on: bool) {
    FULL_WITNESSES.store(on, Ordering::Relaxed);
}

fn full_witnesses() -> bool {
    FULL_WITNESSES.load(Ordering::Relaxed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub checked: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub all_witnesses: Vec<Vec<String>>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, checked: u64) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Pass,
            checked,
            failures: 0,
            witness: None,
            detail: None,
            all_witnesses: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Fail,
            checked: 1,
            failures: 1,
            witness: None,
            detail: Some(detail.into()),
            all_witnesses: Vec::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: Status::Skipped,
            checked: 0,
            failures: 0,
            witness: None,
            detail: Some(reason.into()),
            all_witnesses: Vec::new(),
        }
    }

    /// Single yes/no fact.
    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            CheckResult::pass(name, 1)
        } else {
            CheckResult::fail(name, detail)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Prefixes the check name with a section tag, `section/name`.
    pub fn in_section(mut self, section: &str) -> Self {
        self.name = format!("{section}/{}", self.name);
        self
    }
}

pub fn all_pass(checks: &[CheckResult]) -> bool {
    checks.iter().all(CheckResult::passed)
}

pub fn find<'a>(checks: &'a [CheckResult], name: &str) -> Option<&'a CheckResult> {
    checks.iter().find(|c| c.name == name)
}

/// Accumulates outcomes for one slice of an exhaustive loop.
#[derive(Debug, Default)]
pub struct Tally {
    checked: u64,
    failures: u64,
    witnesses: Vec<Vec<String>>,
    keep_all: bool,
}

impl Tally {
    fn new() -> Self {
        Tally { keep_all: full_witnesses(), ..Tally::default() }
    }

    /// Records one evaluated instance; `witness` is only built on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.is_empty() || (self.keep_all && self.witnesses.len() < WITNESS_CAP) {
                self.witnesses.push(witness());
            }
        }
    }
}

/// Runs `body` for every outer index (in parallel) and merges the slices in
/// index order, so the first witness and the counts are independent of the
/// number of workers.
pub fn run_check<F>(name: &str, outer: usize, body: F) -> CheckResult
where
    F: Fn(usize, &mut Tally) + Sync,
{
    let parts: Vec<Tally> = (0..outer)
        .into_par_iter()
        .map(|i| {
            let mut t = Tally::new();
            body(i, &mut t);
            t
        })
        .collect();
    merge(name, parts)
}

/// Like [`run_check`] over an explicit list of work items.
pub fn run_check_items<T, F>(name: &str, items: &[T], body: F) -> CheckResult
where
    T: Sync,
    F: Fn(&T, &mut Tally) + Sync,
{
    let parts: Vec<Tally> = items
        .par_iter()
        .with_min_len(64)
        .map(|it| {
            let mut t = Tally::new();
            body(it, &mut t);
            t
        })
        .collect();
    merge(name, parts)
}

fn merge(name: &str, parts: Vec<Tally>) -> CheckResult {
    let keep_all = full_witnesses();
    let mut checked = 0;
    let mut failures = 0;
    let mut witnesses = Vec::new();
    for p in parts {
        checked += p.checked;
        failures += p.failures;
        for w in p.witnesses {
            if witnesses.is_empty() || (keep_all && witnesses.len() < WITNESS_CAP) {
                witnesses.push(w);
            }
        }
    }
    let status = if failures == 0 { Status::Pass } else { Status::Fail };
    let witness = witnesses.first().cloned();
    CheckResult {
        name: name.to_string(),
        status,
        checked,
        failures,
        witness,
        detail: None,
        all_witnesses: if keep_all { witnesses } else { Vec::new() },
    }
}

/// Exhaustive check over all tuples of basis indices; `labels[k]` names the
/// basis of the k-th slot and fixes its size.
pub fn check_tuples<F>(name: &str, labels: &[&[String]], pred: F) -> CheckResult
where
    F: Fn(&[usize]) -> bool + Sync,
{
    let dims: Vec<usize> = labels.iter().map(|l| l.len()).collect();
    if dims.is_empty() || dims.iter().any(|&d| d == 0) {
        return CheckResult::pass(name, 0);
    }
    let label = |t: &[usize]| t.iter().zip(labels).map(|(i, l)| l[*i].clone()).collect::<Vec<_>>();
    run_check(name, dims[0], |i0, tally| {
        let mut idx = vec![0usize; dims.len()];
        idx[0] = i0;
        loop {
            let ok = pred(&idx);
            tally.record(ok, || label(&idx));
            // Odometer over the trailing slots.
            let mut k = dims.len() - 1;
            loop {
                if k == 0 {
                    return;
                }
                idx[k] += 1;
                if idx[k] < dims[k] {
                    break;
                }
                idx[k] = 0;
                k -= 1;
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn first_witness_is_canonical() {
        let l = names(5);
        let r = check_tuples("t", &[&l, &l], |t| !(t[0] >= 2 && t[1] == 3));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.checked, 25);
        assert_eq!(r.failures, 3);
        assert_eq!(r.witness, Some(vec!["e2".to_string(), "e3".to_string()]));
    }

    #[test]
    fn passing_check() {
        let l = names(3);
        let r = check_tuples("t", &[&l, &l, &l], |_| true);
        assert!(r.passed());
        assert_eq!(r.checked, 27);
    }
}
