// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Mechanical check that involuting the closed form of level `k` yields the
//! closed form of level `k + 1`.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use super::{symbolic_involute_with_speed, tower_level, TrigPolyCurve};
use crate::error::{Error, Result};

/// A coefficient where the computed involute and the expected closed form
/// disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    /// One of `x.sin`, `x.cos`, `y.sin`, `y.cos`.
    pub component: String,
    pub degree: usize,
    pub expected: String,
    pub actual: String,
}

/// One transition `AA_from → AA_to`.
#[derive(Clone, Debug, Serialize)]
pub struct InductionStep {
    pub from_level: u32,
    pub to_level: u32,
    pub pass: bool,
    /// Arc length of `AA_from` is `arc_coeff·t^arc_degree`.
    pub arc_degree: usize,
    pub arc_coeff: String,
    /// Whether the arc length equals `t^{k+1}/(k+1)!`.
    pub arc_matches_factorial: bool,
    pub diffs: Vec<CoefficientDiff>,
    #[serde(skip)]
    pub involute: TrigPolyCurve,
}

#[derive(Clone, Debug, Serialize)]
pub struct InductionReport {
    pub max_k: u32,
    /// Involute of the base arc against the closed form of level 1.
    pub base_case: InductionStep,
    pub steps: Vec<InductionStep>,
    pub pass: bool,
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn diff_curves(expected: &TrigPolyCurve, actual: &TrigPolyCurve) -> Vec<CoefficientDiff> {
    let mut out = Vec::new();
    for ((name, e), (_, a)) in expected.components().into_iter().zip(actual.components()) {
        let len = e.coeffs().len().max(a.coeffs().len());
        for i in 0..len {
            let (ce, ca) = (e.coeff(i), a.coeff(i));
            if ce != ca {
                out.push(CoefficientDiff {
                    component: name.to_string(),
                    degree: i,
                    expected: rational_string(&ce),
                    actual: rational_string(&ca),
                });
            }
        }
    }
    out
}

/// Involutes the closed form of level `from` and compares it, coefficient by
/// coefficient, with the closed form of level `from + 1`.
pub fn verify_step(from: u32) -> Result<InductionStep> {
    let (involute, speed) = symbolic_involute_with_speed(&tower_level(from))?;
    let expected = tower_level(from + 1);
    let diffs = diff_curves(&expected, &involute);
    let (arc_degree, arc_coeff) = speed.arc_length();
    let arc_matches_factorial =
        arc_degree == from as usize + 1 && arc_coeff == super::inverse_factorial(from + 1);
    Ok(InductionStep {
        from_level: from,
        to_level: from + 1,
        pass: diffs.is_empty() && arc_matches_factorial,
        arc_degree,
        arc_coeff: rational_string(&arc_coeff),
        arc_matches_factorial,
        diffs,
        involute,
    })
}

/// Checks every transition `AA_k → AA_{k+1}` for `1 ≤ k ≤ max_k`, plus the
/// base case `AA₀ → AA₁`.
pub fn verify_induction(max_k: u32) -> Result<InductionReport> {
    if max_k == 0 {
        return Err(Error::InvalidArgument("max_k must be at least 1".into()));
    }
    let base_case = verify_step(0)?;
    let steps = (1..=max_k).map(verify_step).collect::<Result<Vec<_>>>()?;
    let pass = base_case.pass && steps.iter().all(|s| s.pass);
    Ok(InductionReport {
        max_k,
        base_case,
        steps,
        pass,
    })
}

impl InductionReport {
    /// Plain-text transcript in the style of a computer-algebra session.
    pub fn transcript(&self) -> String {
        let mut out = String::new();
        for s in std::iter::once(&self.base_case).chain(&self.steps) {
            let _ = writeln!(out, "/* involute of AA_{} */", s.from_level);
            let _ = writeln!(out, "   s(t) = {}*t^{}", s.arc_coeff, s.arc_degree);
            let _ = writeln!(out, "   ix(t) = {}", s.involute.x);
            let _ = writeln!(out, "   iy(t) = {}", s.involute.y);
            let verdict = if s.pass { "matches" } else { "DOES NOT match" };
            let _ = writeln!(out, "/* {verdict} the closed form of AA_{} */", s.to_level);
            for d in &s.diffs {
                let _ = writeln!(
                    out,
                    "/*   {} t^{}: expected {}, got {} */",
                    d.component, d.degree, d.expected, d.actual
                );
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "/* induction up to AA_{}: {} */",
            self.max_k + 1,
            if self.pass { "verified" } else { "FAILED" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_step() {
        let report = verify_induction(1).unwrap();
        assert!(report.pass);
        assert!(report.base_case.pass);
        assert_eq!(report.steps.len(), 1);
        let s = &report.steps[0];
        assert_eq!((s.from_level, s.to_level), (1, 2));
        assert_eq!((s.arc_degree, s.arc_coeff.as_str()), (2, "1/2"));
    }

    #[test]
    fn eight_steps_with_exact_factorials() {
        let report = verify_induction(8).unwrap();
        assert!(report.pass);
        assert_eq!(report.steps.last().unwrap().arc_coeff, "1/362880");
        assert_eq!(report.steps[6].arc_coeff, "1/40320");
        let top = report.steps[7].involute.x.p.coeff(8);
        assert_eq!(rational_string(&top), "1/40320");
    }

    #[test]
    fn rejects_zero() {
        assert!(verify_induction(0).is_err());
    }

    #[test]
    fn diff_lists_both_coefficients() {
        let a = tower_level(2);
        let b = tower_level(3);
        let diffs = diff_curves(&b, &a);
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0].component, "x.cos");
        assert_eq!(
            (diffs[0].expected.as_str(), diffs[0].actual.as_str()),
            ("1/6", "0")
        );
    }

    #[test]
    fn transcript_and_json() {
        let report = verify_induction(2).unwrap();
        let text = report.transcript();
        assert!(text.contains("/* involute of AA_1 */"));
        assert!(text.contains("ix(t) = sin(phi+t) - t*cos(phi+t) - (1/2)*t^2*sin(phi+t)"));
        assert!(text.contains("induction up to AA_3: verified"));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["pass"], true);
        assert_eq!(json["steps"][1]["arc_coeff"], "1/6");
    }
}
