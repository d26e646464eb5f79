// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Numeric involutes of plane curves and the iterated involute tower of a
//! unit circular arc.
//!
//! The involute of `c(t)` with the string attached at `t = a` is
//!
//! ```text
//! i(t) = c(t) − s(t)·T(t),    s(t) = ∫ₐᵗ |c′(u)| du
//! ```
//!
//! where `T` is the unit tangent of `c`. Differentiating, `i′ = −s·T′ =
//! −s·ω·N` with `ω` the turning rate of `c` and `N` its left normal. The
//! involute therefore turns at the same rate as its base, so every level of
//! a tower carries an exact velocity and turning rate without resorting to
//! nested finite differences. Arc lengths are cached per level in an
//! [`ArcLengthTable`], which keeps evaluation of level `k` at `O(k log n)`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::sync::Arc;

use crate::curve::{self, ArcLengthTable, Interval, ParametricCurve, PlaneCurve, Point2, Vec2};
use crate::error::{Error, Result};

/// Deepest tower [`build_tower`] will construct.
pub const MAX_TOWER_DEPTH: usize = 12;

/// The involute of a base curve, string attached at the start of its domain.
#[derive(Clone)]
pub struct InvoluteCurve {
    base: Arc<dyn PlaneCurve>,
    table: ArcLengthTable,
}

impl fmt::Debug for InvoluteCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvoluteCurve")
            .field("domain", &self.base.domain())
            .field("table", &self.table)
            .finish()
    }
}

/// Builds the involute of `base`, tabulating its arc length to `tol`.
pub fn involute(base: Arc<dyn PlaneCurve>, tol: f64) -> Result<InvoluteCurve> {
    let domain = base.domain();
    // Both ends must have a tangent (or a tangent limit).
    curve::unit_tangent(base.as_ref(), domain.start())?;
    curve::unit_tangent(base.as_ref(), domain.end())?;
    let table = ArcLengthTable::build(Arc::clone(&base), tol)?;
    Ok(InvoluteCurve { base, table })
}

impl InvoluteCurve {
    pub fn base(&self) -> &Arc<dyn PlaneCurve> {
        &self.base
    }

    pub fn arc_table(&self) -> &ArcLengthTable {
        &self.table
    }

    /// Unwound string length `s(t)`.
    pub fn string_length(&self, t: f64) -> Result<f64> {
        self.table.length_at(t)
    }

    /// Checked position; unlike [`PlaneCurve::eval`] this reports a
    /// degenerate base tangent as such.
    pub fn point(&self, t: f64) -> Result<Point2> {
        let s = self.table.length_at(t)?;
        let tangent = curve::unit_tangent(self.base.as_ref(), t)?;
        Ok(self.base.eval(t) - tangent * s)
    }

    /// The taut string from the base point to the involute point, `−s·T`.
    ///
    /// Mathematically this is `point(t) − base(t)`, but near the attachment
    /// point the string is far shorter than the spacing of representable
    /// coordinates, so subtracting positions loses its direction entirely.
    pub fn string_vector(&self, t: f64) -> Result<Vec2> {
        let s = self.table.length_at(t)?;
        let tangent = curve::unit_tangent(self.base.as_ref(), t)?;
        Ok(-(tangent * s))
    }

    fn base_tangent(&self, t: f64) -> Vec2 {
        curve::unit_tangent(self.base.as_ref(), t).unwrap_or(Vec2::new(f64::NAN, f64::NAN))
    }
}

impl PlaneCurve for InvoluteCurve {
    fn domain(&self) -> Interval {
        self.base.domain()
    }

    fn eval(&self, t: f64) -> Point2 {
        let s = self.table.length_at_unchecked(t);
        self.base.eval(t) - self.base_tangent(t) * s
    }

    fn deriv(&self, t: f64) -> Vec2 {
        let s = self.table.length_at_unchecked(t);
        let omega = self.base.turning_rate(t);
        self.base_tangent(t).perp() * (-s * omega)
    }

    fn turning_rate(&self, t: f64) -> f64 {
        self.base.turning_rate(t)
    }

    fn tangent_direction(&self, t: f64) -> Option<Vec2> {
        let omega = self.base.turning_rate(t);
        if omega == 0.0 || !omega.is_finite() {
            return None;
        }
        Some(self.base_tangent(t).perp() * -omega.signum())
    }
}

/// The curves `AA₀, AA₁, …, AA_depth` over a unit arc of angle `θ`, with
/// their endpoints `A₀ … A_depth` and the segments joining them.
#[derive(Clone)]
pub struct InvoluteTower {
    theta: f64,
    curves: Vec<Arc<dyn PlaneCurve>>,
    involutes: Vec<Arc<InvoluteCurve>>,
    endpoints: Vec<Point2>,
    segment_lengths: Vec<f64>,
}

impl fmt::Debug for InvoluteTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvoluteTower")
            .field("theta", &self.theta)
            .field("depth", &self.depth())
            .field("endpoints", &self.endpoints)
            .field("segment_lengths", &self.segment_lengths)
            .finish()
    }
}

/// Builds the tower with the default depth cap of [`MAX_TOWER_DEPTH`].
pub fn build_tower(theta: f64, depth: usize, tol: f64) -> Result<InvoluteTower> {
    build_tower_capped(theta, depth, tol, MAX_TOWER_DEPTH)
}

/// Builds the tower, rejecting `depth > max_depth`.
pub fn build_tower_capped(
    theta: f64,
    depth: usize,
    tol: f64,
    max_depth: usize,
) -> Result<InvoluteTower> {
    if depth > max_depth {
        return Err(Error::DepthLimit {
            depth,
            max: max_depth,
        });
    }
    if !(theta > 0.0 && theta <= FRAC_PI_2) {
        return Err(Error::InvalidArgument(format!(
            "θ must lie in (0, π/2], got {theta}"
        )));
    }
    let arc: Arc<dyn PlaneCurve> = Arc::new(ParametricCurve::tower_arc(theta)?);
    let mut curves = vec![Arc::clone(&arc)];
    let mut involutes = Vec::with_capacity(depth);
    for _ in 0..depth {
        let base = Arc::clone(curves.last().expect("tower has a base arc"));
        let next = Arc::new(involute(base, tol)?);
        curves.push(Arc::clone(&next) as Arc<dyn PlaneCurve>);
        involutes.push(next);
    }
    let endpoints: Vec<Point2> = curves
        .iter()
        .map(|c| curve::position(c.as_ref(), theta))
        .collect::<Result<_>>()?;
    let segment_lengths = endpoints.windows(2).map(|w| w[0].distance(w[1])).collect();
    Ok(InvoluteTower {
        theta,
        curves,
        involutes,
        endpoints,
        segment_lengths,
    })
}

impl InvoluteTower {
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `φ = π/2 − θ`.
    pub fn phi(&self) -> f64 {
        FRAC_PI_2 - self.theta
    }

    pub fn depth(&self) -> usize {
        self.curves.len() - 1
    }

    /// `AA₀ … AA_depth`.
    pub fn curves(&self) -> &[Arc<dyn PlaneCurve>] {
        &self.curves
    }

    pub fn curve(&self, level: usize) -> Option<&Arc<dyn PlaneCurve>> {
        self.curves.get(level)
    }

    /// Level `k ≥ 1` as an involute of level `k − 1`.
    pub fn involute(&self, level: usize) -> Option<&Arc<InvoluteCurve>> {
        level.checked_sub(1).and_then(|i| self.involutes.get(i))
    }

    /// `A₀ … A_depth`, each curve evaluated at `t = θ`.
    pub fn endpoints(&self) -> &[Point2] {
        &self.endpoints
    }

    /// `|A₀A₁|, …, |A_{depth−1}A_depth|`.
    pub fn segment_lengths(&self) -> &[f64] {
        &self.segment_lengths
    }
}

/// `n ≥ 2` points at uniform parameter spacing, both ends included.
pub fn sample<C: PlaneCurve + ?Sized>(curve: &C, n: usize) -> Result<Vec<(f64, Point2)>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    let domain = curve.domain();
    let step = domain.len() / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let t = if i == n - 1 {
                domain.end()
            } else {
                domain.start() + step * i as f64
            };
            curve::position(curve, t).map(|p| (t, p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{PI, TAU};

    use super::*;
    use crate::curve::{arc_length, speed, unit_tangent, DEFAULT_TOLERANCE};

    fn aa1(phi: f64, t: f64) -> Point2 {
        let (s, c) = (phi + t).sin_cos();
        Point2::new(s - t * c, c + t * s)
    }

    #[test]
    fn circle_involute_closed_form() {
        let circle: Arc<dyn PlaneCurve> = Arc::new(ParametricCurve::unit_circle());
        let inv = involute(circle, DEFAULT_TOLERANCE).unwrap();
        for i in 0..=64 {
            let t = TAU * i as f64 / 64.0;
            let p = inv.eval(t);
            let (s, c) = t.sin_cos();
            assert!((p.x - (c + t * s)).abs() < 1e-12, "t={t}");
            assert!((p.y - (s - t * c)).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn arc_involute_is_aa1() {
        let theta = 1.0;
        let phi = FRAC_PI_2 - theta;
        let arc: Arc<dyn PlaneCurve> = Arc::new(ParametricCurve::tower_arc(theta).unwrap());
        let inv = involute(arc, DEFAULT_TOLERANCE).unwrap();
        for i in 0..=20 {
            let t = theta * i as f64 / 20.0;
            let p = inv.eval(t);
            let q = aa1(phi, t);
            assert!(p.distance(q) < 1e-12, "t={t}");
        }
    }

    #[test]
    fn involute_starts_on_base() {
        let domain = Interval::new(0.3, 2.0).unwrap();
        let parabola: Arc<dyn PlaneCurve> = Arc::new(
            ParametricCurve::new(domain, |t| Point2::new(t, t * t / 2.0))
                .with_derivative(|t| Vec2::new(1.0, t)),
        );
        let inv = involute(Arc::clone(&parabola), DEFAULT_TOLERANCE).unwrap();
        assert_eq!(inv.eval(0.3), parabola.eval(0.3));
        assert_eq!(inv.point(0.3).unwrap(), parabola.eval(0.3));
    }

    #[test]
    fn involute_derivative_matches_finite_differences() {
        let domain = Interval::new(0.0, 2.0).unwrap();
        let parabola: Arc<dyn PlaneCurve> = Arc::new(
            ParametricCurve::new(domain, |t| Point2::new(t, t * t / 2.0))
                .with_derivative(|t| Vec2::new(1.0, t)),
        );
        let inv = involute(parabola, 1e-12).unwrap();
        for &t in &[0.2, 0.9, 1.7] {
            let h = 1e-5;
            let fd = (inv.eval(t + h) - inv.eval(t - h)) * (0.5 / h);
            let v = inv.deriv(t);
            assert!((fd - v).length() < 1e-6, "t={t} fd={fd:?} v={v:?}");
        }
    }

    #[test]
    fn tower_first_endpoints() {
        let theta = 0.8;
        let tower = build_tower(theta, 2, DEFAULT_TOLERANCE).unwrap();
        let e = tower.endpoints();
        assert_eq!(e[0], Point2::new(1.0, 0.0));
        assert!((e[1].x - 1.0).abs() < 1e-12 && (e[1].y - theta).abs() < 1e-12);
        assert!((e[2].x - (1.0 - theta * theta / 2.0)).abs() < 1e-11);
        assert!((e[2].y - theta).abs() < 1e-11);
        let seg = tower.segment_lengths();
        assert!((seg[0] - theta).abs() < 1e-12);
        assert!((seg[1] - theta * theta / 2.0).abs() < 1e-11);
    }

    #[test]
    fn depth_zero_tower() {
        let tower = build_tower(1.0, 0, DEFAULT_TOLERANCE).unwrap();
        assert_eq!(tower.depth(), 0);
        assert_eq!(tower.endpoints(), &[Point2::new(1.0, 0.0)]);
        assert!(tower.segment_lengths().is_empty());
        assert!(tower.involute(0).is_none());
    }

    #[test]
    fn tower_rejects_bad_arguments() {
        assert_eq!(
            build_tower(1.0, 13, DEFAULT_TOLERANCE).unwrap_err(),
            Error::DepthLimit { depth: 13, max: 12 }
        );
        assert!(build_tower(0.0, 2, DEFAULT_TOLERANCE).is_err());
        assert!(build_tower(1.6, 2, DEFAULT_TOLERANCE).is_err());
        assert!(build_tower(1.0, 2, 0.0).is_err());
    }

    #[test]
    fn level_speed_is_monomial() {
        let tower = build_tower(PI / 3.0, 6, DEFAULT_TOLERANCE).unwrap();
        let mut factorial = 1.0;
        for (k, c) in tower.curves().iter().enumerate() {
            if k > 0 {
                factorial *= k as f64;
            }
            for i in 0..=12 {
                let t = tower.theta() * i as f64 / 12.0;
                let want = t.powi(k as i32) / factorial;
                assert!(
                    (speed(c.as_ref(), t).unwrap() - want).abs() < 1e-7,
                    "k={k} t={t}"
                );
            }
        }
    }

    #[test]
    fn taut_string_and_tangency() {
        let tower = build_tower(1.0, 4, DEFAULT_TOLERANCE).unwrap();
        for k in 1..=4 {
            let inv = tower.involute(k).unwrap();
            let base = inv.base().as_ref();
            for i in 1..=20 {
                let t = i as f64 / 20.0;
                let string = inv.eval(t) - base.eval(t);
                let s = arc_length(base, t, DEFAULT_TOLERANCE).unwrap();
                assert!(
                    (string.length() - s).abs() <= 2.0 * DEFAULT_TOLERANCE,
                    "k={k} t={t}"
                );
                let tangent = unit_tangent(base, t).unwrap();
                let angle = string.angle_to(tangent);
                assert!(angle.min(PI - angle) < 1e-6, "k={k} t={t}");
            }
        }
    }

    #[test]
    fn aa1_tangent_limit_at_zero() {
        let theta = 1.0;
        let phi = FRAC_PI_2 - theta;
        let want = Vec2::new(phi.sin(), phi.cos());
        let tower = build_tower(theta, 1, DEFAULT_TOLERANCE).unwrap();
        let got = unit_tangent(tower.curve(1).unwrap().as_ref(), 0.0).unwrap();
        assert!((got - want).length() < 1e-12);

        // Closed-form AA₁ without a tangent hint takes the ε-probe route.
        let closed = ParametricCurve::new(Interval::new(0.0, theta).unwrap(), move |t| aa1(phi, t))
            .with_derivative(move |t| {
                let (s, c) = (phi + t).sin_cos();
                Vec2::new(t * s, t * c)
            });
        let probe = closed.deriv(1e-6).normalize().unwrap();
        let got = unit_tangent(&closed, 0.0).unwrap();
        assert_eq!(got, probe);
        assert!((got - want).length() < 1e-6);
    }

    #[test]
    fn sample_spacing() {
        let circle = ParametricCurve::unit_circle();
        let pts = sample(&circle, 5).unwrap();
        let ts: Vec<f64> = pts.iter().map(|(t, _)| *t).collect();
        assert_eq!(ts, vec![0.0, PI / 2.0, PI, 3.0 * PI / 2.0, TAU]);
        assert!(sample(&circle, 1).is_err());

        let arc = ParametricCurve::tower_arc(0.5).unwrap();
        let pts = sample(&arc, 2).unwrap();
        assert_eq!(pts[0].0, 0.0);
        assert_eq!(pts[1], (0.5, Point2::new(1.0, 0.0)));
    }

    #[test]
    fn sample_aa1_midpoint() {
        let tower = build_tower(1.0, 1, DEFAULT_TOLERANCE).unwrap();
        let pts = sample(tower.curve(1).unwrap().as_ref(), 3).unwrap();
        assert_eq!(pts[1].0, 0.5);
        assert!(pts[1].1.distance(aa1(FRAC_PI_2 - 1.0, 0.5)) < 1e-12);
    }
}
