// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// A number or a symbolic quantity such as `1/720*t^6`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Number(f64),
    Text(String),
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Quantity::Number(v) => write!(f, "{v:e}"),
            Quantity::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Quantity,
    pub actual: Quantity,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes when `|actual − expected| ≤ tolerance`.
    pub fn close(name: impl Into<String>, expected: f64, actual: f64, tolerance: f64) -> Self {
        let pass = (actual - expected).abs() <= tolerance;
        Check {
            name: name.into(),
            expected: Quantity::Number(expected),
            actual: Quantity::Number(actual),
            tolerance,
            pass,
            detail: None,
        }
    }

    /// Passes when the measured error is at most `tolerance`.
    pub fn error(name: impl Into<String>, error: f64, tolerance: f64) -> Self {
        Check::close(name, 0.0, error, tolerance)
    }

    /// Passes when `actual ≤ bound`.
    pub fn at_most(name: impl Into<String>, bound: f64, actual: f64) -> Self {
        Check {
            name: name.into(),
            expected: Quantity::Number(bound),
            actual: Quantity::Number(actual),
            tolerance: 0.0,
            pass: actual <= bound,
            detail: Some("actual must not exceed expected".into()),
        }
    }

    pub fn exact(name: impl Into<String>, expected: String, actual: String, pass: bool) -> Self {
        Check {
            name: name.into(),
            expected: Quantity::Text(expected),
            actual: Quantity::Text(actual),
            tolerance: 0.0,
            pass,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Named checks; passes only if every check does.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport { checks, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(
                out,
                "{verdict}  {}: expected {}, actual {}, tolerance {:e}",
                c.name, c.expected, c.actual, c.tolerance
            );
            if let Some(d) = &c.detail {
                let _ = write!(out, " ({d})");
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {failed} failed", self.checks.len());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_flag() {
        let ok = Check::close("a", 1.0, 1.0 + 1e-9, 1e-8);
        let bad = Check::error("b", 1e-3, 1e-8);
        assert!(ok.pass && !bad.pass);
        assert!(VerificationReport::new(vec![ok.clone()]).pass);
        assert!(!VerificationReport::new(vec![ok, bad]).pass);
        assert!(VerificationReport::new(vec![]).pass);
    }

    #[test]
    fn nan_fails() {
        assert!(!Check::close("nan", 0.0, f64::NAN, 1.0).pass);
        assert!(!Check::at_most("nan", 1.0, f64::NAN).pass);
    }

    #[test]
    fn json_shape() {
        let report = VerificationReport::new(vec![Check::exact(
            "s",
            "t^2/2".into(),
            "t^2/2".into(),
            true,
        )]);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["checks"][0]["expected"], "t^2/2");
        assert_eq!(json["pass"], true);
        assert!(json["checks"][0].get("detail").is_none());
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }
}
