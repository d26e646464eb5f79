// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Adaptive Simpson quadrature and cached arc-length tables.
//!
//! Every accepted Simpson panel keeps its five speed samples. Integrating the
//! quartic through those samples over the whole panel gives Boole's rule,
//! which is the Richardson-corrected Simpson value `S₂ + (S₂ − S₁)/15`.
//! Integrating the same quartic over part of a panel gives `s(t)` at any
//! interior `t` without evaluating the speed again, so nested involutes can
//! look up the arc length of their base in `O(log n)`.

use std::fmt;
use std::sync::Arc;

use super::{check_domain, speed_unchecked, PlaneCurve};
use crate::error::{Error, Result};

/// Panels are always split at least this many times (16 leaves minimum).
const MIN_DEPTH: u32 = 4;
const MAX_DEPTH: u32 = 48;

/// One accepted quadrature panel with samples at `a, a+h/4, …, b`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Leaf {
    start: f64,
    end: f64,
    samples: [f64; 5],
}

impl Leaf {
    /// Integral of the interpolating quartic from `start` to `t`.
    fn integral_to(&self, t: f64) -> f64 {
        let width = self.end - self.start;
        let sigma = (4.0 * (t - self.start) / width).clamp(0.0, 4.0);
        let [f0, f1, f2, f3, f4] = self.samples;
        let d1 = f1 - f0;
        let d2 = f2 - 2.0 * f1 + f0;
        let d3 = f3 - 3.0 * f2 + 3.0 * f1 - f0;
        let d4 = f4 - 4.0 * f3 + 6.0 * f2 - 4.0 * f1 + f0;
        let s = sigma;
        let s2 = s * s;
        let s3 = s2 * s;
        let s4 = s3 * s;
        let s5 = s4 * s;
        // Newton forward differences, integrated term by term in s = 4(t-a)/h.
        let sum = f0 * s
            + d1 * s2 / 2.0
            + d2 * (s3 / 3.0 - s2 / 2.0) / 2.0
            + d3 * (s4 / 4.0 - s3 + s2) / 6.0
            + d4 * (s5 / 5.0 - 1.5 * s4 + 11.0 * s3 / 3.0 - 3.0 * s2) / 24.0;
        sum * width / 4.0
    }

    fn integral(&self) -> f64 {
        let [f0, f1, f2, f3, f4] = self.samples;
        (self.end - self.start) / 90.0 * (7.0 * (f0 + f4) + 32.0 * (f1 + f3) + 12.0 * f2)
    }
}

struct Simpson<'a, F> {
    f: F,
    leaves: Option<&'a mut Vec<Leaf>>,
}

impl<F: FnMut(f64) -> Result<f64>> Simpson<'_, F> {
    fn eval(&mut self, u: f64) -> Result<f64> {
        let v = (self.f)(u)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { u })
        }
    }

    fn run(&mut self, a: f64, b: f64, tol: f64) -> Result<f64> {
        let fa = self.eval(a)?;
        let fm = self.eval(0.5 * (a + b))?;
        let fb = self.eval(b)?;
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        self.recurse(a, b, [fa, fm, fb], whole, tol, 0)
    }

    fn recurse(
        &mut self,
        a: f64,
        b: f64,
        [fa, fm, fb]: [f64; 3],
        whole: f64,
        eps: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(lm)?;
        let frm = self.eval(rm)?;
        let h = b - a;
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        let exhausted = depth >= MAX_DEPTH || !(a < lm && rm < b);
        if exhausted || (depth >= MIN_DEPTH && delta.abs() <= 15.0 * eps) {
            let leaf = Leaf {
                start: a,
                end: b,
                samples: [fa, flm, fm, frm, fb],
            };
            if let Some(leaves) = self.leaves.as_deref_mut() {
                leaves.push(leaf);
            }
            return Ok(leaf.integral());
        }
        let l = self.recurse(a, m, [fa, flm, fm], left, 0.5 * eps, depth + 1)?;
        let r = self.recurse(m, b, [fm, frm, fb], right, 0.5 * eps, depth + 1)?;
        Ok(l + r)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// Panels are halved until `|S_fine − S_coarse| ≤ 15·eps`, with `eps` halved
/// at each split. Returns the Richardson-corrected sum.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    let mut s = Simpson { f, leaves: None };
    s.run(a, b, tol)
}

/// Cumulative arc length `s(t)` of a curve, tabulated at the breakpoints of
/// an adaptive Simpson pass and interpolated in between.
#[derive(Clone)]
pub struct ArcLengthTable {
    source: Arc<dyn PlaneCurve>,
    leaves: Vec<Leaf>,
    cumulative: Vec<f64>,
    tolerance: f64,
}

impl fmt::Debug for ArcLengthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArcLengthTable")
            .field("domain", &self.source.domain())
            .field("panels", &self.leaves.len())
            .field("total", &self.total())
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl ArcLengthTable {
    pub fn build(source: Arc<dyn PlaneCurve>, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        let domain = source.domain();
        let mut leaves = Vec::new();
        {
            let curve = source.as_ref();
            let mut s = Simpson {
                f: |u: f64| Ok(speed_unchecked(curve, u)),
                leaves: Some(&mut leaves),
            };
            s.run(domain.start(), domain.end(), tol)?;
        }
        let mut cumulative = Vec::with_capacity(leaves.len() + 1);
        let mut acc = 0.0;
        cumulative.push(acc);
        for leaf in &leaves {
            // Speeds are nonnegative; a slightly negative Boole sum is rounding.
            acc += leaf.integral().max(0.0);
            cumulative.push(acc);
        }
        Ok(ArcLengthTable {
            source,
            leaves,
            cumulative,
            tolerance: tol,
        })
    }

    pub fn source(&self) -> &Arc<dyn PlaneCurve> {
        &self.source
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Ascending parameter values at which cumulative lengths are stored.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.leaves.iter().map(|l| l.start).collect();
        if let Some(last) = self.leaves.last() {
            out.push(last.end);
        }
        out
    }

    /// Cumulative lengths at [`breakpoints`](Self::breakpoints); first entry is 0.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn total(&self) -> f64 {
        *self.cumulative.last().unwrap_or(&0.0)
    }

    /// Arc length from the start of the domain to `t`.
    pub fn length_at(&self, t: f64) -> Result<f64> {
        check_domain(self.source.domain(), t)?;
        Ok(self.length_at_unchecked(t))
    }

    /// Arc length between two parameters, `t0 ≤ t1`.
    pub fn length_between(&self, t0: f64, t1: f64) -> Result<f64> {
        Ok(self.length_at(t1)? - self.length_at(t0)?)
    }

    pub(crate) fn length_at_unchecked(&self, t: f64) -> f64 {
        let last = self.leaves.len() - 1;
        let idx = self.leaves.partition_point(|l| l.end < t).min(last);
        let lo = self.cumulative[idx];
        let hi = self.cumulative[idx + 1];
        (lo + self.leaves[idx].integral_to(t)).clamp(lo, hi)
    }
}
