// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! Involutes of regular polygons.
//!
//! A string wrapped around a convex polygon unwinds by pivoting about one
//! vertex at a time, so its free end traces a chain of circular arcs. Each
//! arc turns through the exterior angle `2π/n`, and each pivot adds one side
//! to the free length of string.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::curve::{Interval, PlaneCurve, Point2, Vec2};
use crate::error::{Error, Result};

/// A regular `n`-gon with its vertices listed counterclockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegularPolygon {
    n: usize,
    side: f64,
    center: Point2,
    first_angle: f64,
}

impl RegularPolygon {
    /// Centered at the origin with the first vertex at angle `π/2 − 2π/n`,
    /// which puts the second vertex straight up. For a pentagon this gives
    /// the familiar upright figure with the first vertex on the right.
    pub fn new(n: usize, side: f64) -> Result<Self> {
        let first = FRAC_PI_2 - TAU / n.max(1) as f64;
        RegularPolygon::with_placement(n, side, Point2::ORIGIN, first)
    }

    pub fn with_placement(n: usize, side: f64, center: Point2, first_angle: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "a polygon needs at least 3 vertices, got {n}"
            )));
        }
        if !(side.is_finite() && side > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "side length must be positive and finite, got {side}"
            )));
        }
        if !(center.is_finite() && first_angle.is_finite()) {
            return Err(Error::InvalidArgument(
                "polygon placement must be finite".into(),
            ));
        }
        Ok(RegularPolygon {
            n,
            side,
            center,
            first_angle,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    /// `a / (2 sin(π/n))`.
    pub fn circumradius(&self) -> f64 {
        self.side / (2.0 * (PI / self.n as f64).sin())
    }

    /// Exterior angle `2π/n`.
    pub fn exterior_angle(&self) -> f64 {
        TAU / self.n as f64
    }

    /// Vertex `i` (taken mod `n`), counterclockwise from the first.
    pub fn vertex(&self, i: usize) -> Point2 {
        let angle = self.first_angle + self.exterior_angle() * (i % self.n) as f64;
        self.center + self.circumradius() * Vec2::from_angle(angle)
    }

    pub fn vertices(&self) -> Vec<Point2> {
        (0..self.n).map(|i| self.vertex(i)).collect()
    }
}

/// Which way the string peels off the polygon.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unwind {
    #[default]
    Clockwise,
    Counterclockwise,
}

impl Unwind {
    fn sign(self) -> f64 {
        match self {
            Unwind::Clockwise => -1.0,
            Unwind::Counterclockwise => 1.0,
        }
    }
}

/// Arc of the circle about `center`, traversed from `start_angle` to
/// `end_angle`. A negative sweep runs clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircularArc {
    pub center: Point2,
    pub radius: f64,
    pub start_angle: f64,
    pub end_angle: f64,
}

impl CircularArc {
    pub fn sweep(&self) -> f64 {
        self.end_angle - self.start_angle
    }

    pub fn length(&self) -> f64 {
        self.radius * self.sweep().abs()
    }

    pub fn point_at_angle(&self, angle: f64) -> Point2 {
        self.center + self.radius * Vec2::from_angle(angle)
    }

    pub fn start_point(&self) -> Point2 {
        self.point_at_angle(self.start_angle)
    }

    pub fn end_point(&self) -> Point2 {
        self.point_at_angle(self.end_angle)
    }

    /// Unit direction of travel at `angle`.
    pub fn tangent_at_angle(&self, angle: f64) -> Vec2 {
        let radial = Vec2::from_angle(angle);
        if self.sweep() < 0.0 {
            -radial.perp()
        } else {
            radial.perp()
        }
    }
}

/// An ordered chain of circular arcs.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PiecewiseArcCurve {
    arcs: Vec<CircularArc>,
}

impl PiecewiseArcCurve {
    pub fn new(arcs: Vec<CircularArc>) -> Self {
        PiecewiseArcCurve { arcs }
    }

    pub fn arcs(&self) -> &[CircularArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn start_point(&self) -> Option<Point2> {
        self.arcs.first().map(CircularArc::start_point)
    }

    pub fn end_point(&self) -> Option<Point2> {
        self.arcs.last().map(CircularArc::end_point)
    }

    /// End point of arc `i` for every arc but the last.
    pub fn junctions(&self) -> Vec<Point2> {
        self.arcs
            .iter()
            .take(self.arcs.len().saturating_sub(1))
            .map(CircularArc::end_point)
            .collect()
    }

    /// Distance between the end of arc `i` and the start of arc `i + 1`.
    pub fn junction_gaps(&self) -> Vec<f64> {
        self.arcs
            .windows(2)
            .map(|w| w[0].end_point().distance(w[1].start_point()))
            .collect()
    }

    /// Angle in radians between the outgoing and incoming tangents at each
    /// junction.
    pub fn junction_kinks(&self) -> Vec<f64> {
        self.arcs
            .windows(2)
            .map(|w| {
                let out = w[0].tangent_at_angle(w[0].end_angle);
                let inc = w[1].tangent_at_angle(w[1].start_angle);
                out.angle_to(inc).abs()
            })
            .collect()
    }

    /// Parametrizes arc `i` over `[i, i + 1]` at constant speed.
    pub fn to_curve(&self) -> Result<ArcChainCurve> {
        let domain = Interval::new(0.0, self.arcs.len() as f64)?;
        Ok(ArcChainCurve {
            arcs: self.arcs.clone(),
            domain,
        })
    }
}

/// `Σ radius·|sweep|`.
pub fn arc_chain_length(curve: &PiecewiseArcCurve) -> f64 {
    curve.arcs.iter().map(CircularArc::length).sum()
}

/// The involute of `poly` traced by unwinding clockwise from vertex 0.
pub fn polygon_involute(poly: &RegularPolygon, turns: usize) -> PiecewiseArcCurve {
    polygon_involute_from(poly, turns, 0, Unwind::Clockwise)
}

/// The involute traced by a string attached at vertex `start` and unwound in
/// direction `dir` for `turns` full circuits.
///
/// Arc `k` (1-based) pivots about the `k`-th vertex met while unwinding, has
/// radius `k·a`, and turns through `2π/n`.
pub fn polygon_involute_from(
    poly: &RegularPolygon,
    turns: usize,
    start: usize,
    dir: Unwind,
) -> PiecewiseArcCurve {
    let n = poly.n();
    let step = dir.sign() * poly.exterior_angle();
    // Moving clockwise around a ccw vertex list means stepping backwards.
    let pivot = |k: usize| match dir {
        Unwind::Clockwise => poly.vertex(start + n - k % n),
        Unwind::Counterclockwise => poly.vertex(start + k),
    };
    let first_angle = (poly.vertex(start) - pivot(1)).atan2();
    let arcs = (1..=n * turns)
        .map(|k| {
            let start_angle = first_angle + step * (k - 1) as f64;
            CircularArc {
                center: pivot(k),
                radius: poly.side() * k as f64,
                start_angle,
                end_angle: start_angle + step,
            }
        })
        .collect();
    PiecewiseArcCurve::new(arcs)
}

/// A [`PiecewiseArcCurve`] as a [`PlaneCurve`].
#[derive(Clone, Debug)]
pub struct ArcChainCurve {
    arcs: Vec<CircularArc>,
    domain: Interval,
}

impl ArcChainCurve {
    fn locate(&self, t: f64) -> (&CircularArc, f64) {
        let last = self.arcs.len() - 1;
        let i = (t.max(0.0).floor() as usize).min(last);
        let arc = &self.arcs[i];
        (arc, arc.start_angle + (t - i as f64) * arc.sweep())
    }
}

impl PlaneCurve for ArcChainCurve {
    fn domain(&self) -> Interval {
        self.domain
    }

    fn eval(&self, t: f64) -> Point2 {
        let (arc, angle) = self.locate(t);
        arc.point_at_angle(angle)
    }

    fn deriv(&self, t: f64) -> Vec2 {
        let (arc, angle) = self.locate(t);
        arc.length() * arc.tangent_at_angle(angle)
    }

    fn turning_rate(&self, t: f64) -> f64 {
        self.locate(t).0.sweep()
    }

    fn tangent_direction(&self, t: f64) -> Option<Vec2> {
        let (arc, angle) = self.locate(t);
        Some(arc.tangent_at_angle(angle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{arc_length, unit_tangent};

    fn pentagon(a: f64) -> RegularPolygon {
        RegularPolygon::new(5, a).unwrap()
    }

    #[test]
    fn polygon_sides_are_equal() {
        for n in 3..=12 {
            let p = RegularPolygon::new(n, 1.7).unwrap();
            for i in 0..n {
                let side = p.vertex(i).distance(p.vertex(i + 1));
                assert!((side - 1.7).abs() < 1e-12, "n={n} i={i}: {side}");
            }
        }
    }

    #[test]
    fn pentagon_layout() {
        let p = pentagon(1.0);
        let deg = |v: Point2| v.to_vec2().atan2().to_degrees();
        assert!((deg(p.vertex(0)) - 18.0).abs() < 1e-12);
        assert!((deg(p.vertex(1)) - 90.0).abs() < 1e-12);
        assert!((p.vertex(1).x).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_polygons() {
        assert!(RegularPolygon::new(2, 1.0).is_err());
        assert!(RegularPolygon::new(5, 0.0).is_err());
        assert!(RegularPolygon::new(5, f64::NAN).is_err());
    }

    #[test]
    fn pentagon_arcs() {
        let a = 0.8;
        let chain = polygon_involute(&pentagon(a), 1);
        assert_eq!(chain.len(), 5);
        for (k, arc) in chain.arcs().iter().enumerate() {
            assert_eq!(arc.radius, a * (k + 1) as f64);
            assert!((arc.sweep() + 72f64.to_radians()).abs() < 1e-12);
        }
        assert!(chain.start_point().unwrap().distance(pentagon(a).vertex(0)) < 1e-12);
    }

    #[test]
    fn pivots_walk_clockwise() {
        let p = pentagon(1.0);
        let chain = polygon_involute(&p, 1);
        let expect = [4, 3, 2, 1, 0];
        for (arc, &v) in chain.arcs().iter().zip(&expect) {
            assert!(arc.center.distance(p.vertex(v)) < 1e-15);
        }
    }

    #[test]
    fn continuity() {
        for n in [3, 4, 5, 8] {
            for dir in [Unwind::Clockwise, Unwind::Counterclockwise] {
                let chain = polygon_involute_from(&RegularPolygon::new(n, 1.3).unwrap(), 2, 1, dir);
                assert_eq!(chain.len(), 2 * n);
                assert!(chain.junction_gaps().iter().all(|&g| g < 1e-12));
                assert!(chain.junction_kinks().iter().all(|&k| k < 1e-12));
            }
        }
    }

    #[test]
    fn junction_distances() {
        let a = 1.1;
        let chain = polygon_involute(&pentagon(a), 1);
        let arcs = chain.arcs();
        for (i, j) in chain.junctions().into_iter().enumerate() {
            let k = (i + 1) as f64;
            assert!((j.distance(arcs[i].center) - k * a).abs() < 1e-12);
            assert!((j.distance(arcs[i + 1].center) - (k + 1.0) * a).abs() < 1e-12);
            // The string runs straight along the side it just left.
            let along = (arcs[i].center - arcs[i + 1].center).normalize().unwrap();
            let out = (j - arcs[i].center).normalize().unwrap();
            assert!(along.cross(out).abs() < 1e-12);
        }
    }

    #[test]
    fn string_fully_unwound() {
        // After one circuit the string hangs straight off its attachment
        // vertex, continuing the first side it was wrapped along.
        let a = 2.0;
        let p = pentagon(a);
        let chain = polygon_involute(&p, 1);
        let end = chain.end_point().unwrap();
        assert!((end.distance(p.vertex(0)) - 5.0 * a).abs() < 1e-12);
        let side = (p.vertex(0) - p.vertex(4)).normalize().unwrap();
        let hang = (end - p.vertex(0)).normalize().unwrap();
        assert!((side.dot(hang) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn chain_length() {
        let a = 0.5;
        let chain = polygon_involute(&pentagon(a), 1);
        let closed = 6.0 * PI * a;
        assert!((arc_chain_length(&chain) - closed).abs() < 1e-12);
        let curve = chain.to_curve().unwrap();
        let numeric = arc_length(&curve, 5.0, 1e-12).unwrap();
        assert!((numeric - closed).abs() < 1e-9, "{numeric} vs {closed}");

        let tri = polygon_involute(&RegularPolygon::new(3, 1.0).unwrap(), 1);
        let radii: Vec<f64> = tri.arcs().iter().map(|a| a.radius).collect();
        assert_eq!(radii, [1.0, 2.0, 3.0]);
        assert!(tri
            .arcs()
            .iter()
            .all(|a| (a.sweep() + TAU / 3.0).abs() < 1e-12));

        let single = PiecewiseArcCurve::new(vec![CircularArc {
            center: Point2::ORIGIN,
            radius: 3.0,
            start_angle: 0.25,
            end_angle: 1.0,
        }]);
        assert_eq!(arc_chain_length(&single), 2.25);
        assert_eq!(arc_chain_length(&PiecewiseArcCurve::default()), 0.0);
        assert!(PiecewiseArcCurve::default().to_curve().is_err());
        assert!(polygon_involute(&pentagon(1.0), 0).is_empty());
    }

    #[test]
    fn curve_tangents_match_finite_differences() {
        let curve = polygon_involute(&pentagon(1.0), 1).to_curve().unwrap();
        for t in [0.3, 1.5, 2.9, 4.4] {
            let h = 1e-6;
            let fd = (curve.eval(t + h) - curve.eval(t - h)) * (0.5 / h);
            assert!((fd - curve.deriv(t)).length() < 1e-6);
            let u = unit_tangent(&curve, t).unwrap();
            assert!((u - fd.normalize().unwrap()).length() < 1e-9);
        }
    }
}
