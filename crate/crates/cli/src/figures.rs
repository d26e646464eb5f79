// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! SVG figures.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::sync::Arc;

use clap::ValueEnum;
use involute_core::curve::{ParametricCurve, PlaneCurve, Point2, DEFAULT_TOLERANCE};
use involute_core::involute::{build_tower, involute, sample, MAX_TOWER_DEPTH};
use involute_core::polygon::{polygon_involute, RegularPolygon};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::svg::{Rect, SvgDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FigureKind {
    /// A unit arc, its involute, and the taut string at a few positions.
    ArcString,
    /// The unit circle and one turn of its involute.
    CircleInvolute,
    /// The involute tower with its labelled segments.
    Tower,
    /// A regular polygon and its involute.
    Polygon,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureSpec {
    pub kind: FigureKind,
    pub theta: f64,
    pub depth: usize,
    pub n: usize,
    pub side: f64,
    pub samples: usize,
    pub width: f64,
    pub height: f64,
    /// World window to show; fitted to the content when absent.
    pub zoom: Option<Rect>,
}

impl Default for FigureSpec {
    fn default() -> Self {
        FigureSpec {
            kind: FigureKind::Tower,
            theta: 1.0,
            depth: 4,
            n: 5,
            side: 1.0,
            samples: 200,
            width: 800.0,
            height: 800.0,
            zoom: None,
        }
    }
}

pub(crate) fn check_theta(theta: f64) -> Result<(), CliError> {
    if theta > 0.0 && theta <= FRAC_PI_2 {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "--theta must lie in (0, pi/2], got {theta}"
        )))
    }
}

pub(crate) fn check_depth(depth: usize) -> Result<(), CliError> {
    if depth <= MAX_TOWER_DEPTH {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "--depth must be at most {MAX_TOWER_DEPTH}, got {depth}"
        )))
    }
}

pub(crate) fn check_samples(samples: usize) -> Result<(), CliError> {
    if samples >= 2 {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "--samples must be at least 2, got {samples}"
        )))
    }
}

impl FigureSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        check_samples(self.samples)?;
        if !(self.width > 0.0
            && self.width.is_finite()
            && self.height > 0.0
            && self.height.is_finite())
        {
            return Err(CliError::usage("--width and --height must be positive"));
        }
        match self.kind {
            FigureKind::ArcString => check_theta(self.theta),
            FigureKind::Tower => {
                check_theta(self.theta)?;
                check_depth(self.depth)
            }
            FigureKind::Polygon => RegularPolygon::new(self.n, self.side)
                .map(drop)
                .map_err(|e| CliError::usage(e.to_string())),
            FigureKind::CircleInvolute => Ok(()),
        }
    }
}

fn points(curve: &dyn PlaneCurve, n: usize) -> Result<Vec<Point2>, CliError> {
    Ok(sample(curve, n)?.into_iter().map(|(_, p)| p).collect())
}

/// `θ`, `θ²/2!`, `θ³/3!`, …
pub fn segment_label(k: usize) -> String {
    const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if k == 1 {
        return "θ".into();
    }
    let sup: String = k
        .to_string()
        .chars()
        .map(|c| SUP[c.to_digit(10).unwrap_or(0) as usize])
        .collect();
    format!("θ{sup}/{k}!")
}

/// Draws geometry into a document once the view is known.
struct Scene {
    bounds: Vec<Point2>,
    draw: Box<dyn FnOnce(&mut SvgDocument)>,
}

pub fn render(fig: &FigureSpec) -> Result<String, CliError> {
    fig.validate()?;
    let scene = match fig.kind {
        FigureKind::ArcString => arc_string(fig)?,
        FigureKind::CircleInvolute => circle_involute(fig)?,
        FigureKind::Tower => tower(fig)?,
        FigureKind::Polygon => polygon(fig)?,
    };
    let view = match fig.zoom {
        Some(r) => r,
        None => Rect::bounding(scene.bounds.iter().copied(), 0.08)
            .ok_or_else(|| CliError::usage("figure has no finite points"))?,
    };
    let mut doc = SvgDocument::new(fig.width, fig.height, view);
    (scene.draw)(&mut doc);
    Ok(doc.finish())
}

fn arc_string(fig: &FigureSpec) -> Result<Scene, CliError> {
    let arc: Arc<dyn PlaneCurve> = Arc::new(ParametricCurve::tower_arc(fig.theta)?);
    let inv = involute(Arc::clone(&arc), DEFAULT_TOLERANCE)?;
    let base_pts = points(arc.as_ref(), fig.samples)?;
    let inv_pts = points(&inv, fig.samples)?;
    let strings: Vec<(Point2, Point2)> = (1..=4)
        .map(|i| {
            let t = fig.theta * i as f64 / 4.0;
            Ok((arc.eval(t), inv.point(t)?))
        })
        .collect::<Result<_, CliError>>()?;
    let mut bounds = vec![Point2::ORIGIN];
    bounds.extend(&base_pts);
    bounds.extend(&inv_pts);
    let (a, a0, a1) = (base_pts[0], arc.eval(fig.theta), inv.eval(fig.theta));
    Ok(Scene {
        bounds,
        draw: Box::new(move |doc| {
            doc.line("radius", Point2::ORIGIN, a);
            doc.line("radius", Point2::ORIGIN, a0);
            doc.polyline("base", &base_pts);
            doc.polyline("involute", &inv_pts);
            for (p, q) in &strings {
                doc.line("string", *p, *q);
            }
            for p in [a, a0, a1] {
                doc.dot(p);
            }
            doc.label(a, 6.0, -6.0, "A");
            doc.label(a0, 6.0, 16.0, "A₀");
            doc.label(a1, 6.0, -6.0, "A₁");
        }),
    })
}

fn circle_involute(fig: &FigureSpec) -> Result<Scene, CliError> {
    let circle: Arc<dyn PlaneCurve> = Arc::new(ParametricCurve::unit_circle());
    let inv = involute(Arc::clone(&circle), DEFAULT_TOLERANCE)?;
    let spiral = points(&inv, fig.samples)?;
    let strings: Vec<(Point2, Point2)> = (1..=7)
        .map(|i| {
            let t = TAU * i as f64 / 8.0;
            Ok((circle.eval(t), inv.point(t)?))
        })
        .collect::<Result<_, CliError>>()?;
    let mut bounds = spiral.clone();
    bounds.extend([Point2::new(-1.0, -1.0), Point2::new(1.0, 1.0)]);
    Ok(Scene {
        bounds,
        draw: Box::new(move |doc| {
            doc.circle("base", Point2::ORIGIN, 1.0);
            doc.polyline("involute", &spiral);
            for (p, q) in &strings {
                doc.line("string", *p, *q);
            }
            doc.dot(Point2::new(1.0, 0.0));
        }),
    })
}

fn tower(fig: &FigureSpec) -> Result<Scene, CliError> {
    let tower = build_tower(fig.theta, fig.depth, DEFAULT_TOLERANCE)?;
    let curves: Vec<Vec<Point2>> = tower
        .curves()
        .iter()
        .map(|c| points(c.as_ref(), fig.samples))
        .collect::<Result<_, _>>()?;
    let endpoints = tower.endpoints().to_vec();
    let a = tower.curves()[0].eval(0.0);
    let mut bounds: Vec<Point2> = curves.iter().flatten().copied().collect();
    bounds.push(Point2::ORIGIN);
    Ok(Scene {
        bounds,
        draw: Box::new(move |doc| {
            doc.line("radius", Point2::ORIGIN, a);
            doc.line("radius", Point2::ORIGIN, endpoints[0]);
            for (k, pts) in curves.iter().enumerate() {
                doc.polyline(if k == 0 { "base" } else { "involute" }, pts);
            }
            for (k, w) in endpoints.windows(2).enumerate() {
                doc.line("segment", w[0], w[1]);
                let mid = Point2::new((w[0].x + w[1].x) / 2.0, (w[0].y + w[1].y) / 2.0);
                // Odd segments are vertical, even ones horizontal.
                let (dx, dy) = if k % 2 == 0 {
                    (6.0, 4.0)
                } else {
                    (-10.0, -6.0)
                };
                doc.label(mid, dx, dy, &segment_label(k + 1));
            }
            for (k, p) in endpoints.iter().enumerate() {
                doc.dot(*p);
                doc.label(*p, 6.0, 16.0, &format!("A{k}"));
            }
            doc.dot(a);
            doc.label(a, 6.0, -6.0, "A");
            doc.label(Point2::ORIGIN, -14.0, 16.0, "O");
        }),
    })
}

fn polygon(fig: &FigureSpec) -> Result<Scene, CliError> {
    let poly = RegularPolygon::new(fig.n, fig.side)?;
    let chain = polygon_involute(&poly, 1);
    let vertices = poly.vertices();
    let mut bounds = vertices.clone();
    for arc in chain.arcs() {
        let steps = 16;
        bounds.extend(
            (0..=steps).map(|i| {
                arc.point_at_angle(arc.start_angle + arc.sweep() * i as f64 / steps as f64)
            }),
        );
    }
    Ok(Scene {
        bounds,
        draw: Box::new(move |doc| {
            doc.polygon("outline", &vertices);
            for arc in chain.arcs() {
                doc.arc("involute", arc);
                // The string, straight from its pivot to where the arc ends.
                doc.line("string", arc.center, arc.end_point());
            }
            for (i, v) in vertices.iter().enumerate() {
                doc.dot(*v);
                doc.label(*v, 6.0, -6.0, &vertex_name(i, vertices.len()));
            }
        }),
    })
}

/// Names vertices `A, B, C, …` in the order the string leaves them, i.e.
/// clockwise from the attachment vertex.
fn vertex_name(i: usize, n: usize) -> String {
    let order = (n - i) % n;
    match u8::try_from(order).ok().filter(|&o| o < 26) {
        Some(o) => char::from(b'A' + o).to_string(),
        None => format!("V{order}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(segment_label(1), "θ");
        assert_eq!(segment_label(2), "θ²/2!");
        assert_eq!(segment_label(12), "θ¹²/12!");
    }

    #[test]
    fn pentagon_names() {
        let names: Vec<String> = (0..5).map(|i| vertex_name(i, 5)).collect();
        assert_eq!(names, ["A", "E", "D", "C", "B"]);
    }

    #[test]
    fn validation() {
        let bad = FigureSpec {
            theta: 0.0,
            ..FigureSpec::default()
        };
        assert!(matches!(render(&bad), Err(CliError::Usage(_))));
        let bad = FigureSpec {
            samples: 1,
            ..FigureSpec::default()
        };
        assert!(matches!(render(&bad), Err(CliError::Usage(_))));
        let bad = FigureSpec {
            kind: FigureKind::Polygon,
            n: 2,
            ..FigureSpec::default()
        };
        assert!(matches!(render(&bad), Err(CliError::Usage(_))));
        // θ is irrelevant to the circle and polygon figures.
        let ok = FigureSpec {
            kind: FigureKind::CircleInvolute,
            theta: 0.0,
            ..FigureSpec::default()
        };
        assert!(render(&ok).is_ok());
    }
}
