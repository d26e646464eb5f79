// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! The data behind each subcommand, independent of argument parsing.

use std::f64::consts::TAU;
use std::sync::Arc;

use involute_core::curve::{ParametricCurve, Point2, Vec2, DEFAULT_TOLERANCE};
use involute_core::involute::{build_tower, involute, sample, InvoluteTower};
use involute_core::polygon::{
    arc_chain_length, polygon_involute_from, CircularArc, RegularPolygon, Unwind,
};
use involute_core::series::{remainder_bound, segment_length, tower_endpoint, ClosedFormInvolute};
use involute_core::symbolic::{inverse_factorial, verify_induction, verify_step, InductionStep};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::figures::{check_depth, check_samples, check_theta};
use crate::report::{Check, VerificationReport};

/// Endpoint agreement between the numeric tower and the closed forms.
pub const ENDPOINT_TOLERANCE: f64 = 1e-7;
/// Numeric segment lengths against `θ^k/k!`.
pub const SEGMENT_TOLERANCE: f64 = 1e-6;
/// Circle involute against its closed form.
pub const CIRCLE_TOLERANCE: f64 = 1e-8;
/// Continuity of polygon involutes.
pub const JUNCTION_TOLERANCE: f64 = 1e-12;

fn check_tol(tol: f64, flag: &str) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::usage(format!(
            "{flag} must be positive, got {tol}"
        )))
    }
}

fn xy(p: Point2) -> [f64; 2] {
    [p.x, p.y]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TowerJson {
    pub theta: f64,
    pub depth: usize,
    /// `A₀ … A_depth` from the numeric tower.
    pub endpoints: Vec<[f64; 2]>,
    /// `θ^k/k!` for `k = 1 … depth`.
    pub segment_lengths: Vec<f64>,
    /// `2θ^{k+1}/(k+1)!` for `k = 0 … depth`.
    pub remainder_bounds: Vec<f64>,
    pub checks: Vec<crate::report::Check>,
}

impl TowerJson {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn build_checked_tower(theta: f64, depth: usize, tol: f64) -> Result<InvoluteTower, CliError> {
    check_theta(theta)?;
    check_depth(depth)?;
    check_tol(tol, "--tol")?;
    Ok(build_tower(theta, depth, tol)?)
}

pub fn tower_json(tower: &InvoluteTower) -> TowerJson {
    let theta = tower.theta();
    let depth = tower.depth();
    let target = Point2::new(theta.cos(), theta.sin());
    let mut checks = Vec::new();
    for (k, &p) in tower.endpoints().iter().enumerate() {
        let exact = tower_endpoint(k as u32, theta);
        checks.push(Check::error(
            format!("A{k} numeric vs closed form"),
            p.distance(exact),
            ENDPOINT_TOLERANCE,
        ));
        checks.push(Check::at_most(
            format!("|A{k} - A| within remainder bound"),
            remainder_bound(k as u32, theta),
            p.distance(target),
        ));
    }
    for (i, &len) in tower.segment_lengths().iter().enumerate() {
        let k = i + 1;
        checks.push(Check::close(
            format!("|A{}A{k}| numeric vs theta^{k}/{k}!", k - 1),
            segment_length(k as u32, theta),
            len,
            SEGMENT_TOLERANCE,
        ));
    }
    TowerJson {
        theta,
        depth,
        endpoints: tower.endpoints().iter().copied().map(xy).collect(),
        segment_lengths: (1..=depth)
            .map(|k| segment_length(k as u32, theta))
            .collect(),
        remainder_bounds: (0..=depth)
            .map(|k| remainder_bound(k as u32, theta))
            .collect(),
        checks,
    }
}

/// One CSV row.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelSample {
    pub level: usize,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

pub fn tower_samples(tower: &InvoluteTower, samples: usize) -> Result<Vec<LevelSample>, CliError> {
    check_samples(samples)?;
    let mut rows = Vec::with_capacity(samples * (tower.depth() + 1));
    for (level, curve) in tower.curves().iter().enumerate() {
        for (t, p) in sample(curve.as_ref(), samples)? {
            rows.push(LevelSample {
                level,
                t,
                x: p.x,
                y: p.y,
            });
        }
    }
    Ok(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum BaseCurve {
    /// `(cos t, sin t)` over `[0, 2π]`.
    Circle,
    /// The tower's unit arc over `[0, θ]`.
    Arc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvoluteJson {
    pub curve: BaseCurve,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// `[t, x, y]`.
    pub points: Vec<[f64; 3]>,
    pub checks: Vec<Check>,
}

/// Samples the numeric involute of `curve` and compares it with its closed
/// form.
pub fn involute_json(
    curve: BaseCurve,
    theta: f64,
    samples: usize,
    tol: f64,
) -> Result<InvoluteJson, CliError> {
    check_samples(samples)?;
    check_tol(tol, "--tol")?;
    let (base, exact): (ParametricCurve, Box<dyn Fn(f64) -> Point2>) = match curve {
        BaseCurve::Circle => (
            ParametricCurve::unit_circle(),
            Box::new(|t: f64| {
                let (s, c) = t.sin_cos();
                Point2::new(c + t * s, s - t * c)
            }),
        ),
        BaseCurve::Arc => {
            check_theta(theta)?;
            let closed = ClosedFormInvolute::for_arc(1, theta)?;
            (
                ParametricCurve::tower_arc(theta)?,
                Box::new(move |t| closed.eval(t)),
            )
        }
    };
    let inv = involute(Arc::new(base), tol)?;
    let pts = sample(&inv, samples)?;
    let err = pts
        .iter()
        .map(|&(t, p)| p.distance(exact(t)))
        .fold(0.0, f64::max);
    let name = match curve {
        BaseCurve::Circle => "max distance to (cos t + t sin t, sin t - t cos t)",
        BaseCurve::Arc => "max distance to the closed form of AA1",
    };
    Ok(InvoluteJson {
        curve,
        theta: (curve == BaseCurve::Arc).then_some(theta),
        points: pts.into_iter().map(|(t, p)| [t, p.x, p.y]).collect(),
        checks: vec![Check::error(name, err, CIRCLE_TOLERANCE)],
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub n: usize,
    pub side: f64,
    pub circumradius: f64,
    pub vertices: Vec<[f64; 2]>,
    pub arcs: Vec<CircularArc>,
    pub total_length: f64,
    pub checks: Vec<Check>,
}

pub fn polygon_json(
    n: usize,
    side: f64,
    turns: usize,
    dir: Unwind,
) -> Result<PolygonJson, CliError> {
    let poly = RegularPolygon::new(n, side).map_err(|e| CliError::usage(e.to_string()))?;
    if turns == 0 {
        return Err(CliError::usage("--turns must be at least 1"));
    }
    let chain = polygon_involute_from(&poly, turns, 0, dir);
    let mut checks = Vec::new();
    let max_gap = chain.junction_gaps().into_iter().fold(0.0, f64::max);
    let max_kink = chain.junction_kinks().into_iter().fold(0.0, f64::max);
    checks.push(Check::error(
        "max junction gap",
        max_gap,
        JUNCTION_TOLERANCE,
    ));
    checks.push(Check::error(
        "max junction kink (rad)",
        max_kink,
        JUNCTION_TOLERANCE,
    ));
    let radius_err = chain
        .arcs()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.radius - side * (i + 1) as f64).abs())
        .fold(0.0, f64::max);
    checks.push(Check::error("max |radius_k - k*a|", radius_err, 0.0));
    let total = arc_chain_length(&chain);
    let m = (n * turns) as f64;
    // Σ k·a·(2π/n) over k = 1 … n·turns.
    let closed = TAU / n as f64 * side * m * (m + 1.0) / 2.0;
    checks.push(Check::close("total length", closed, total, 1e-12 * closed));
    if let Some(end) = chain.end_point() {
        checks.push(Check::close(
            "|A A'|",
            m * side,
            end.distance(poly.vertex(0)),
            1e-12 * m * side,
        ));
    }
    Ok(PolygonJson {
        n,
        side,
        circumradius: poly.circumradius(),
        vertices: poly.vertices().into_iter().map(xy).collect(),
        arcs: chain.arcs().to_vec(),
        total_length: total,
        checks,
    })
}

/// One CSV row of a sampled polygon involute.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcSample {
    pub arc: usize,
    pub angle: f64,
    pub x: f64,
    pub y: f64,
}

pub fn polygon_samples(json: &PolygonJson, samples: usize) -> Result<Vec<ArcSample>, CliError> {
    check_samples(samples)?;
    let mut rows = Vec::new();
    for (i, arc) in json.arcs.iter().enumerate() {
        for j in 0..samples {
            let angle = if j + 1 == samples {
                arc.end_angle
            } else {
                arc.start_angle + arc.sweep() * j as f64 / (samples - 1) as f64
            };
            let p = arc.point_at_angle(angle);
            rows.push(ArcSample {
                arc: i + 1,
                angle,
                x: p.x,
                y: p.y,
            });
        }
    }
    Ok(rows)
}

/// Settings for [`verify`].
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub max_depth: usize,
    pub thetas: Vec<f64>,
    pub tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_depth: 6,
            thetas: vec![0.3, 1.0, std::f64::consts::FRAC_PI_3],
            tol: 1e-7,
        }
    }
}

/// Points sampled per tower level when comparing against closed forms.
const COMPARISON_SAMPLES: usize = 50;
/// Points sampled per tower level for the taut-string checks.
const STRING_SAMPLES: usize = 100;

fn step_check(step: &InductionStep) -> Check {
    let k = step.from_level;
    let want = format!("{}*t^{}", rational_text(k + 1), k + 1);
    let got = format!("{}*t^{}", step.arc_coeff, step.arc_degree);
    let mut check = Check::exact(
        format!("symbolic involute of AA{k} is AA{}", k + 1),
        format!("s = {want}"),
        format!("s = {got}"),
        step.pass,
    );
    if !step.diffs.is_empty() {
        let diffs: Vec<String> = step
            .diffs
            .iter()
            .map(|d| {
                format!(
                    "{} t^{}: expected {}, got {}",
                    d.component, d.degree, d.expected, d.actual
                )
            })
            .collect();
        check = check.with_detail(diffs.join("; "));
    }
    check
}

fn rational_text(k: u32) -> String {
    let r = inverse_factorial(k);
    if r.denom() == &1.into() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn angle_between(a: Vec2, b: Vec2) -> f64 {
    let angle = a.angle_to(b).abs();
    angle.min(std::f64::consts::PI - angle)
}

/// Runs the symbolic, closed-form, segment and taut-string checks.
pub fn verify(opts: &VerifyOptions) -> Result<VerificationReport, CliError> {
    if !(1..=involute_core::involute::MAX_TOWER_DEPTH).contains(&opts.max_depth) {
        return Err(CliError::usage(format!(
            "--max-depth must lie in 1..={}, got {}",
            involute_core::involute::MAX_TOWER_DEPTH,
            opts.max_depth
        )));
    }
    if opts.thetas.is_empty() {
        return Err(CliError::usage("--thetas must not be empty"));
    }
    for &theta in &opts.thetas {
        check_theta(theta)?;
    }
    check_tol(opts.tol, "--tol")?;
    let tol = opts.tol;
    let mut checks = Vec::new();

    // Exact: the involute of level k is level k + 1.
    if opts.max_depth >= 2 {
        let report = verify_induction(opts.max_depth as u32 - 1)?;
        checks.push(step_check(&report.base_case));
        checks.extend(report.steps.iter().map(step_check));
    } else {
        checks.push(step_check(&verify_step(0)?));
    }

    for &theta in &opts.thetas {
        let tower = build_tower(theta, opts.max_depth, DEFAULT_TOLERANCE)?;
        for k in 1..=opts.max_depth {
            let curve = tower.curves()[k].as_ref();
            let closed = ClosedFormInvolute::for_arc(k as u32, theta)?;
            let err = sample(curve, COMPARISON_SAMPLES)?
                .into_iter()
                .map(|(t, p)| p.distance(closed.eval(t)))
                .fold(0.0, f64::max);
            checks.push(Check::error(
                format!("theta={theta} AA{k} numeric vs closed form"),
                err,
                tol,
            ));
            let a = tower.endpoints()[k];
            checks.push(Check::error(
                format!("theta={theta} A{k} numeric vs partial sums"),
                a.distance(tower_endpoint(k as u32, theta)),
                tol,
            ));
            checks.push(Check::close(
                format!("theta={theta} |A{}A{k}| numeric", k - 1),
                segment_length(k as u32, theta),
                tower.segment_lengths()[k - 1],
                tol,
            ));
            let exact_seg =
                tower_endpoint(k as u32, theta).distance(tower_endpoint(k as u32 - 1, theta));
            checks.push(Check::close(
                format!("theta={theta} |A{}A{k}| closed form", k - 1),
                segment_length(k as u32, theta),
                exact_seg,
                tol,
            ));

            // The string from level k − 1 to level k.
            let inv = tower.involute(k).expect("level k ≥ 1 is an involute");
            let base_tangent = |t: f64| -> Option<Vec2> {
                if k == 1 {
                    tower.curves()[0].deriv(t).normalize()
                } else {
                    ClosedFormInvolute::for_arc(k as u32 - 1, theta)
                        .ok()?
                        .deriv(t)
                        .normalize()
                }
            };
            let mut length_err: f64 = 0.0;
            let mut angle_err: f64 = 0.0;
            for i in 1..=STRING_SAMPLES {
                let t = theta * i as f64 / STRING_SAMPLES as f64;
                let string = inv.point(t)? - inv.base().eval(t);
                length_err = length_err.max((string.length() - segment_length(k as u32, t)).abs());
                let angle = match base_tangent(t) {
                    Some(tan) => angle_between(inv.string_vector(t)?, tan),
                    None => f64::INFINITY,
                };
                angle_err = angle_err.max(angle);
            }
            checks.push(
                Check::error(
                    format!("theta={theta} level {k} string length"),
                    length_err,
                    tol,
                )
                .with_detail(format!(
                    "max over {STRING_SAMPLES} samples of ||AA{k}(t) - AA{}(t)| - t^{k}/{k}!|",
                    k - 1
                )),
            );
            checks.push(
                Check::error(
                    format!("theta={theta} level {k} string tangency (rad)"),
                    angle_err,
                    tol,
                )
                .with_detail(format!(
                    "angle between the string and the closed-form tangent of AA{}",
                    k - 1
                )),
            );
        }
    }
    Ok(VerificationReport::new(checks))
}
