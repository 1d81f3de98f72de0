//! Scenario reports with a text and a JSON rendering carrying the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    pub values: BTreeMap<String, String>,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), ..Self::default() }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn value(mut self, key: &str, value: impl ToString) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }

    pub fn pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(scenario: &str, params: BTreeMap<String, String>, checks: Vec<Check>) -> Self {
        let failures: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        let summary = Summary { total: checks.len(), passed: checks.len() - failures.len(), failed: failures.len(), failures };
        Self { scenario: scenario.to_string(), params, checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "scenario: {}", self.scenario).unwrap();
        for (k, v) in &self.params {
            writeln!(out, "param {k} = {v}").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name).unwrap();
            for (k, v) in &c.inputs {
                writeln!(out, "    input {k} = {v}").unwrap();
            }
            for (k, v) in &c.values {
                writeln!(out, "    value {k} = {v}").unwrap();
            }
        }
        let s = &self.summary;
        writeln!(out, "summary: {} checks, {} passed, {} failed", s.total, s.passed, s.failed).unwrap();
        for f in &s.failures {
            writeln!(out, "failed: {f}").unwrap();
        }
        out
    }

    /// Inverse of `to_text`, used to compare the two renderings.
    pub fn from_text(text: &str) -> Option<Self> {
        let mut lines = text.lines();
        let scenario = lines.next()?.strip_prefix("scenario: ")?.to_string();
        let mut report = Report { scenario, ..Report::default() };
        for line in lines {
            if let Some(rest) = line.strip_prefix("param ") {
                let (k, v) = rest.split_once(" = ")?;
                report.params.insert(k.to_string(), v.to_string());
            } else if let Some(name) = line.strip_prefix("[PASS] ") {
                report.checks.push(Check::new(name).pass(true));
            } else if let Some(name) = line.strip_prefix("[FAIL] ") {
                report.checks.push(Check::new(name));
            } else if let Some(rest) = line.strip_prefix("    input ") {
                let (k, v) = rest.split_once(" = ")?;
                report.checks.last_mut()?.inputs.insert(k.to_string(), v.to_string());
            } else if let Some(rest) = line.strip_prefix("    value ") {
                let (k, v) = rest.split_once(" = ")?;
                report.checks.last_mut()?.values.insert(k.to_string(), v.to_string());
            } else if let Some(rest) = line.strip_prefix("summary: ") {
                let nums: Vec<usize> = rest.split(", ").map(|p| p.split(' ').next()?.parse().ok()).collect::<Option<_>>()?;
                let [total, passed, failed] = nums[..] else { return None };
                report.summary = Summary { total, passed, failed, failures: Vec::new() };
            } else if let Some(name) = line.strip_prefix("failed: ") {
                report.summary.failures.push(name.to_string());
            } else {
                return None;
            }
        }
        Some(report)
    }
}
