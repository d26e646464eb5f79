// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Plane parametric curves: derivatives, speed, unit tangents, arc length.

mod arclen;
mod point;

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::sync::Arc;

pub use arclen::{adaptive_simpson, ArcLengthTable};
pub use point::{Point2, Vec2};

use crate::error::{Error, Result};

/// Default absolute tolerance for arc-length quadrature.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;
/// Speeds at or below this are treated as zero when normalizing a tangent.
pub const SPEED_EPSILON: f64 = 1e-12;
/// Offset used to probe the one-sided tangent limit at a zero-speed point.
pub const LIMIT_EPSILON: f64 = 1e-6;

/// Closed parameter interval `[start, end]` with `start < end`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    start: f64,
    end: f64,
}

impl Interval {
    pub fn new(start: f64, end: f64) -> Result<Self> {
        if start.is_finite() && end.is_finite() && start < end {
            Ok(Interval { start, end })
        } else {
            Err(Error::InvalidArgument(format!(
                "parameter interval [{start}, {end}] must be finite with start < end"
            )))
        }
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn end(&self) -> f64 {
        self.end
    }

    #[inline]
    pub fn len(&self) -> f64 {
        self.end - self.start
    }

    #[inline]
    pub fn contains(&self, t: f64) -> bool {
        self.start <= t && t <= self.end
    }
}

/// A plane curve `t ↦ (x(t), y(t))` over a closed interval.
///
/// Only [`domain`](Self::domain) and [`eval`](Self::eval) are required. The
/// other methods fall back to finite differences; implementors that know
/// them analytically should override.
pub trait PlaneCurve: Send + Sync {
    fn domain(&self) -> Interval;

    /// Position at `t`. Callers guarantee `t` lies in the domain.
    fn eval(&self, t: f64) -> Point2;

    /// Velocity at `t`.
    fn deriv(&self, t: f64) -> Vec2 {
        numeric_derivative(self, t)
    }

    /// Rate of change of the tangent angle, `dψ/dt` (curvature times speed).
    fn turning_rate(&self, t: f64) -> f64 {
        numeric_turning_rate(self, t)
    }

    /// Analytic unit tangent, when the curve knows it independently of the
    /// derivative magnitude.
    fn tangent_direction(&self, _t: f64) -> Option<Vec2> {
        None
    }
}

/// Central difference of the position with `h = max(10⁻⁶, 10⁻⁶·|t|)`.
pub fn numeric_derivative<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> Vec2 {
    let h = (1e-6f64).max(1e-6 * t.abs());
    finite_difference(&|u| curve.eval(u).to_vec2(), curve.domain(), t, h)
}

/// `(v × a) / |v|²`, with the acceleration `a` taken from a second difference
/// of the position.
pub fn numeric_turning_rate<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> f64 {
    let v = curve.deriv(t);
    let len2 = v.dot(v);
    if len2 == 0.0 {
        return 0.0;
    }
    let h = (1e-4f64).max(1e-4 * t.abs());
    let f = |u: f64| curve.eval(u).to_vec2();
    let domain = curve.domain();
    let acc = if t - h < domain.start() {
        (f(t) * 2.0 - f(t + h) * 5.0 + f(t + 2.0 * h) * 4.0 - f(t + 3.0 * h)) * (1.0 / (h * h))
    } else if t + h > domain.end() {
        (f(t) * 2.0 - f(t - h) * 5.0 + f(t - 2.0 * h) * 4.0 - f(t - 3.0 * h)) * (1.0 / (h * h))
    } else {
        (f(t + h) - f(t) * 2.0 + f(t - h)) * (1.0 / (h * h))
    };
    v.cross(acc) / len2
}

/// Turning rate from a finite difference of an analytic derivative.
fn turning_rate_from_derivative<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> f64 {
    let v = curve.deriv(t);
    let len2 = v.dot(v);
    if len2 == 0.0 {
        return 0.0;
    }
    let h = (1e-5f64).max(1e-5 * t.abs());
    let dv = finite_difference(&|u| curve.deriv(u), curve.domain(), t, h);
    v.cross(dv) / len2
}

/// Second-order finite difference, one-sided where a central stencil would
/// leave the domain.
fn finite_difference<F: Fn(f64) -> Vec2>(f: &F, domain: Interval, t: f64, h: f64) -> Vec2 {
    if t - h < domain.start() {
        (f(t + h) * 4.0 - f(t) * 3.0 - f(t + 2.0 * h)) * (0.5 / h)
    } else if t + h > domain.end() {
        (f(t) * 3.0 - f(t - h) * 4.0 + f(t - 2.0 * h)) * (0.5 / h)
    } else {
        (f(t + h) - f(t - h)) * (0.5 / h)
    }
}

pub(crate) fn check_domain(domain: Interval, t: f64) -> Result<()> {
    if domain.contains(t) {
        Ok(())
    } else {
        Err(Error::Domain {
            t,
            a: domain.start(),
            b: domain.end(),
        })
    }
}

type PointFn = dyn Fn(f64) -> Point2 + Send + Sync;
type VecFn = dyn Fn(f64) -> Vec2 + Send + Sync;
type ScalarFn = dyn Fn(f64) -> f64 + Send + Sync;

/// A curve given by closures: a position map, and optionally its derivative
/// and turning rate.
#[derive(Clone)]
pub struct ParametricCurve {
    domain: Interval,
    position: Arc<PointFn>,
    derivative: Option<Arc<VecFn>>,
    turning_rate: Option<Arc<ScalarFn>>,
}

impl fmt::Debug for ParametricCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricCurve")
            .field("domain", &self.domain)
            .field("analytic_derivative", &self.derivative.is_some())
            .field("analytic_turning_rate", &self.turning_rate.is_some())
            .finish()
    }
}

impl ParametricCurve {
    pub fn new(domain: Interval, position: impl Fn(f64) -> Point2 + Send + Sync + 'static) -> Self {
        ParametricCurve {
            domain,
            position: Arc::new(position),
            derivative: None,
            turning_rate: None,
        }
    }

    pub fn with_derivative(
        mut self,
        derivative: impl Fn(f64) -> Vec2 + Send + Sync + 'static,
    ) -> Self {
        self.derivative = Some(Arc::new(derivative));
        self
    }

    pub fn with_turning_rate(mut self, rate: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.turning_rate = Some(Arc::new(rate));
        self
    }

    pub fn has_derivative(&self) -> bool {
        self.derivative.is_some()
    }

    /// `(cos t, sin t)` for `t ∈ [0, 2π]`.
    pub fn unit_circle() -> Self {
        let domain = Interval::new(0.0, TAU).expect("static interval");
        ParametricCurve::new(domain, |t| {
            let (s, c) = t.sin_cos();
            Point2::new(c, s)
        })
        .with_derivative(|t| {
            let (s, c) = t.sin_cos();
            Vec2::new(-s, c)
        })
        .with_turning_rate(|_| 1.0)
    }

    /// The unit arc from `A = (cos θ, sin θ)` to `A₀ = (1, 0)`:
    /// `x = sin(φ + t)`, `y = cos(φ + t)` with `φ = π/2 − θ`, `t ∈ [0, θ]`.
    ///
    /// Evaluated as `(cos(θ − t), sin(θ − t))` so that `t = θ` lands on
    /// `(1, 0)` exactly.
    pub fn tower_arc(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta <= FRAC_PI_2) {
            return Err(Error::InvalidArgument(format!(
                "arc angle must lie in (0, π/2], got {theta}"
            )));
        }
        let domain = Interval::new(0.0, theta)?;
        Ok(ParametricCurve::new(domain, move |t| {
            let (s, c) = (theta - t).sin_cos();
            Point2::new(c, s)
        })
        .with_derivative(move |t| {
            let (s, c) = (theta - t).sin_cos();
            Vec2::new(s, -c)
        })
        .with_turning_rate(|_| -1.0))
    }

    /// Straight line `origin + t·direction` over `domain`.
    pub fn line(origin: Point2, direction: Vec2, domain: Interval) -> Self {
        ParametricCurve::new(domain, move |t| origin + direction * t)
            .with_derivative(move |_| direction)
            .with_turning_rate(|_| 0.0)
    }
}

impl PlaneCurve for ParametricCurve {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn eval(&self, t: f64) -> Point2 {
        (self.position)(t)
    }

    fn deriv(&self, t: f64) -> Vec2 {
        match &self.derivative {
            Some(d) => d(t),
            None => numeric_derivative(self, t),
        }
    }

    fn turning_rate(&self, t: f64) -> f64 {
        match &self.turning_rate {
            Some(r) => r(t),
            None if self.derivative.is_some() => turning_rate_from_derivative(self, t),
            None => numeric_turning_rate(self, t),
        }
    }
}

/// Checked position: domain membership and finiteness.
pub fn position<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> Result<Point2> {
    check_domain(curve.domain(), t)?;
    let p = curve.eval(t);
    if p.is_finite() {
        Ok(p)
    } else {
        Err(Error::NonFinite { u: t })
    }
}

/// Checked derivative.
pub fn derivative<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> Result<Vec2> {
    check_domain(curve.domain(), t)?;
    let v = curve.deriv(t);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { u: t })
    }
}

pub(crate) fn speed_unchecked<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> f64 {
    curve.deriv(t).length()
}

/// `√(x′(t)² + y′(t)²)`.
pub fn speed<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> Result<f64> {
    derivative(curve, t).map(Vec2::length)
}

/// Unit tangent at `t`.
///
/// Where the speed is at most [`SPEED_EPSILON`] the normalized derivative at
/// `t ± LIMIT_EPSILON` (toward the interior) is returned instead. If the
/// derivative vanishes there as well the curve is degenerate.
pub fn unit_tangent<C: PlaneCurve + ?Sized>(curve: &C, t: f64) -> Result<Vec2> {
    let domain = curve.domain();
    check_domain(domain, t)?;
    if let Some(dir) = curve.tangent_direction(t) {
        return Ok(dir);
    }
    let v = curve.deriv(t);
    if !v.is_finite() {
        return Err(Error::NonFinite { u: t });
    }
    if v.length() > SPEED_EPSILON {
        return Ok(v.normalize().expect("nonzero finite vector"));
    }
    let probe = if t + LIMIT_EPSILON <= domain.end() {
        t + LIMIT_EPSILON
    } else {
        t - LIMIT_EPSILON
    };
    if !domain.contains(probe) {
        return Err(Error::DegenerateCurve { t });
    }
    curve
        .deriv(probe)
        .normalize()
        .ok_or(Error::DegenerateCurve { t })
}

/// `s(t) = ∫ₐᵗ speed(u) du` by adaptive Simpson quadrature to absolute `tol`.
pub fn arc_length<C: PlaneCurve + ?Sized>(curve: &C, t: f64, tol: f64) -> Result<f64> {
    let domain = curve.domain();
    check_domain(domain, t)?;
    adaptive_simpson(|u| Ok(speed_unchecked(curve, u)), domain.start(), t, tol)
}

/// Arc length between two parameters by direct quadrature.
pub fn arc_length_between<C: PlaneCurve + ?Sized>(
    curve: &C,
    t0: f64,
    t1: f64,
    tol: f64,
) -> Result<f64> {
    let domain = curve.domain();
    check_domain(domain, t0)?;
    check_domain(domain, t1)?;
    adaptive_simpson(|u| Ok(speed_unchecked(curve, u)), t0, t1, tol)
}
