// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed forms for the involute tower.
//!
//! With `Cₙ(t) = Σ_{i=0}^{n} (−1)^i t^{2i}/(2i)!` and
//! `Sₙ(t) = Σ_{i=0}^{n−1} (−1)^i t^{2i+1}/(2i+1)!`, level `k` of the tower is
//!
//! ```text
//! x_k(t) = C_a(t)·sin(φ+t) − S_b(t)·cos(φ+t)
//! y_k(t) = C_a(t)·cos(φ+t) + S_b(t)·sin(φ+t)
//! ```
//!
//! with `a = ⌊k/2⌋` and `b = ⌈k/2⌉`. At `t = θ` the frame is the identity,
//! so the endpoint `A_k` is `(C_a(θ), S_b(θ))`.
//!
//! A few printed listings of the general `A_{2n}` coordinates carry a sign
//! exponent `n−1` on the `θ^{2n}` term and a stray index `i−1`; those do not
//! agree with the explicit points `A₂, A₃, A₄`. The definitions above do, and
//! are what this module implements.

use std::f64::consts::FRAC_PI_2;

use crate::curve::{Interval, ParametricCurve, Point2, Vec2};
use crate::error::{Error, Result};

/// `n!`, exact as an integer for `n ≤ 20` and accumulated in floating
/// point beyond.
pub fn factorial(n: u32) -> f64 {
    if n <= 20 {
        (1..=u64::from(n)).product::<u64>() as f64
    } else {
        (21..=n).fold(factorial(20), |acc, i| acc * f64::from(i))
    }
}

/// Signed series term `(−1)^{⌊j/2⌋} t^j / j!`.
fn term(j: u32, t: f64) -> f64 {
    let sign = if (j / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * t.powi(j as i32) / factorial(j)
}

/// `Cₙ(t)`: the first `n + 1` terms of the cosine series.
pub fn partial_cos(n: u32, t: f64) -> f64 {
    (0..=n).map(|i| term(2 * i, t)).sum()
}

/// `Sₙ(t)`: the first `n` terms of the sine series; `S₀ = 0`.
pub fn partial_sin(n: u32, t: f64) -> f64 {
    (0..n).map(|i| term(2 * i + 1, t)).sum()
}

/// Evaluators for `Cₙ` and `Sₙ` at a fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartialSums {
    pub n: u32,
}

impl PartialSums {
    pub fn new(n: u32) -> Self {
        PartialSums { n }
    }

    pub fn cos(&self, t: f64) -> f64 {
        partial_cos(self.n, t)
    }

    pub fn sin(&self, t: f64) -> f64 {
        partial_sin(self.n, t)
    }
}

/// Which rotating frame a tower level's velocity points along.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VelocityFrame {
    /// `(sin(φ+t), cos(φ+t))`, odd levels.
    Sine,
    /// `(cos(φ+t), −sin(φ+t))`, even levels including the base arc.
    Cosine,
}

impl VelocityFrame {
    pub fn for_level(k: u32) -> Self {
        if k % 2 == 1 {
            VelocityFrame::Sine
        } else {
            VelocityFrame::Cosine
        }
    }
}

/// Closed-form parametrization of tower level `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormInvolute {
    k: u32,
    theta: f64,
}

/// Level `k ≥ 1` of the tower with phase `φ`.
pub fn closed_form_involute(k: u32, phi: f64) -> Result<ClosedFormInvolute> {
    ClosedFormInvolute::for_arc(k, FRAC_PI_2 - phi)
}

impl ClosedFormInvolute {
    /// Level `k ≥ 1` of the tower over an arc of angle `θ`.
    pub fn for_arc(k: u32, theta: f64) -> Result<Self> {
        if k == 0 {
            return Err(Error::BaseLevel);
        }
        if !theta.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "non-finite arc angle {theta}"
            )));
        }
        Ok(ClosedFormInvolute { k, theta })
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        FRAC_PI_2 - self.theta
    }

    /// Orders `(a, b)` of the partial sums `C_a`, `S_b` in the coordinates.
    pub fn orders(&self) -> (u32, u32) {
        (self.k / 2, self.k.div_ceil(2))
    }

    pub fn eval(&self, t: f64) -> Point2 {
        let (a, b) = self.orders();
        eval_level(a, b, self.theta, t)
    }

    pub fn x(&self, t: f64) -> f64 {
        self.eval(t).x
    }

    pub fn y(&self, t: f64) -> f64 {
        self.eval(t).y
    }

    /// Velocity `±t^k/k!` along the level's [`VelocityFrame`].
    pub fn deriv(&self, t: f64) -> Vec2 {
        let m = term(self.k, t);
        // sin(φ+t) = cos(θ−t), cos(φ+t) = sin(θ−t)
        let (cos_phase, sin_phase) = (self.theta - t).sin_cos();
        match VelocityFrame::for_level(self.k) {
            VelocityFrame::Sine => Vec2::new(m * sin_phase, m * cos_phase),
            VelocityFrame::Cosine => Vec2::new(m * cos_phase, -m * sin_phase),
        }
    }

    /// As a curve over `[0, θ]`, with analytic velocity.
    pub fn to_curve(&self) -> Result<ParametricCurve> {
        let domain = Interval::new(0.0, self.theta)?;
        let (this, that) = (*self, *self);
        Ok(ParametricCurve::new(domain, move |t| this.eval(t))
            .with_derivative(move |t| that.deriv(t))
            .with_turning_rate(|_| -1.0))
    }
}

fn eval_level(a: u32, b: u32, theta: f64, t: f64) -> Point2 {
    let c = partial_cos(a, t);
    let s = partial_sin(b, t);
    // sin(φ+t) = cos(θ−t), cos(φ+t) = sin(θ−t); exact identity frame at t = θ.
    let (cos_phase, sin_phase) = (theta - t).sin_cos();
    Point2::new(c * sin_phase - s * cos_phase, c * cos_phase + s * sin_phase)
}

/// `A_k = (C_{⌊k/2⌋}(θ), S_{⌈k/2⌉}(θ))`; `A₀ = (1, 0)`.
///
/// Evaluates the level-`k` closed form at `t = θ`, so the result is
/// bit-identical to [`ClosedFormInvolute::eval`] there.
pub fn tower_endpoint(k: u32, theta: f64) -> Point2 {
    eval_level(k / 2, k.div_ceil(2), theta, theta)
}

/// `|A_{k−1}A_k| = θ^k/k!`. For `k = 0` this is `|OA₀| = 1`.
pub fn segment_length(k: u32, theta: f64) -> f64 {
    theta.powi(k as i32) / factorial(k)
}

/// `A_k − A_{k−1}`: vertical for odd `k` (sine terms), horizontal for even
/// `k` (cosine terms).
pub fn segment_vector(k: u32, theta: f64) -> Vec2 {
    let v = term(k, theta);
    if k % 2 == 1 {
        Vec2::new(0.0, v)
    } else {
        Vec2::new(v, 0.0)
    }
}

/// `2·θ^{k+1}/(k+1)!`, bounding `|A_k − (cos θ, sin θ)|` for `θ ≤ π/2`.
pub fn remainder_bound(k: u32, theta: f64) -> f64 {
    2.0 * theta.powi(k as i32 + 1) / factorial(k + 1)
}
