//! Report document written by `check`.

use duplicial_core::verdict::{CheckList, Counterexample, Verdict};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub law: String,
    pub object: String,
    pub witness: Vec<usize>,
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl From<&Counterexample> for Witness {
    fn from(c: &Counterexample) -> Self {
        Witness {
            law: c.law.clone(),
            object: c.object.clone(),
            witness: c.witness.clone(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
}

/// One check: what was predicted, what happened, and a witness whenever the
/// observation is a failure or contradicts the prediction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub expected: Outcome,
    pub observed: Outcome,
    pub satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn from_verdict(name: impl Into<String>, expect_pass: bool, v: &Verdict) -> Self {
        let name = name.into();
        let observed = if v.is_pass() { Outcome::Pass } else { Outcome::Fail };
        let expected = if expect_pass { Outcome::Pass } else { Outcome::Fail };
        let witness = match v {
            Verdict::Fail(c) => Some(Witness::from(c)),
            Verdict::Pass if !expect_pass => Some(Witness {
                law: format!("{name}: predicted failure not observed"),
                object: String::new(),
                witness: vec![],
                lhs: vec![],
                rhs: vec![],
            }),
            Verdict::Pass => None,
        };
        CheckResult {
            satisfied: expected == observed,
            name,
            expected,
            observed,
            witness,
            note: None,
        }
    }

    pub fn error(name: impl Into<String>, message: impl Into<String>) -> Self {
        let name = name.into();
        CheckResult {
            witness: Some(Witness {
                law: name.clone(),
                object: String::new(),
                witness: vec![],
                lhs: vec![],
                rhs: vec![],
            }),
            name,
            expected: Outcome::Pass,
            observed: Outcome::Error,
            satisfied: false,
            note: Some(message.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub satisfied: bool,
    pub checks: Vec<CheckResult>,
    pub tables: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl SuiteReport {
    pub fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            satisfied: true,
            checks: Vec::new(),
            tables: Value::Object(Default::default()),
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, c: CheckResult) {
        self.satisfied &= c.satisfied;
        self.checks.push(c);
    }

    pub fn verdict(&mut self, name: impl Into<String>, expect_pass: bool, v: &Verdict) {
        self.push(CheckResult::from_verdict(name, expect_pass, v));
    }

    /// Every entry of a check list, all predicted to pass.
    pub fn checklist(&mut self, prefix: &str, list: &CheckList) {
        for (n, v) in &list.entries {
            self.verdict(format!("{prefix}: {n}"), true, v);
        }
    }

    pub fn table(&mut self, key: &str, value: Value) {
        if let Value::Object(m) = &mut self.tables {
            m.insert(key.to_string(), value);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub satisfied: bool,
    pub violated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub scenario: Value,
    pub level_cap: usize,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(scenario: Value, level_cap: usize, suites: Vec<SuiteReport>) -> Self {
        let violated: Vec<String> = suites.iter().filter(|s| !s.satisfied).map(|s| s.name.clone()).collect();
        Report {
            schema_version: SCHEMA_VERSION,
            scenario,
            level_cap,
            summary: Summary {
                satisfied: violated.is_empty(),
                violated,
            },
            suites,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.satisfied {
            0
        } else {
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicted_failure_is_satisfied() {
        let v = Verdict::fail("law", "X", vec![1], vec![2], vec![3]);
        let c = CheckResult::from_verdict("c", false, &v);
        assert!(c.satisfied);
        assert_eq!(c.witness.unwrap().witness, vec![1]);
    }

    #[test]
    fn unexpected_pass_carries_witness() {
        let c = CheckResult::from_verdict("c", false, &Verdict::Pass);
        assert!(!c.satisfied);
        assert!(c.witness.is_some());
    }

    #[test]
    fn failing_suite_is_reported() {
        let mut s = SuiteReport::new("x");
        s.verdict("a", true, &Verdict::fail("l", "X", vec![], vec![], vec![]));
        let r = Report::new(Value::Null, 3, vec![s]);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.summary.violated, vec!["x"]);
    }
}
