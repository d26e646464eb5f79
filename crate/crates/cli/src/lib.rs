// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! The `involute` command-line tool.

pub mod angle;
pub mod commands;
pub mod error;
pub mod figures;
pub mod report;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use involute_core::curve::DEFAULT_TOLERANCE;
use involute_core::polygon::Unwind;
use serde::Serialize;

use crate::angle::parse_angle;
use crate::commands::BaseCurve;
pub use crate::error::CliError;
use crate::figures::{FigureKind, FigureSpec};
use crate::svg::{parse_rect, Rect};

#[derive(Debug, Parser)]
#[command(
    name = "involute",
    version,
    about = "Involutes, involute towers, and the sine and cosine partial sums they trace"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the involute tower of a unit arc.
    Tower(TowerArgs),
    /// Sample the involute of a circle or of the tower's base arc.
    Involute(InvoluteArgs),
    /// Involute of a regular polygon.
    Polygon(PolygonArgs),
    /// Draw a figure as SVG.
    Render(RenderArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// Arc angle in (0, pi/2]: decimal radians, pi, pi/INT, INT*pi/INT.
    #[arg(long, value_parser = parse_angle, default_value = "1.0")]
    pub theta: f64,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Points per level for csv and svg output.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Arc-length quadrature tolerance.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct InvoluteArgs {
    #[arg(long, value_enum, default_value = "circle")]
    pub curve: BaseCurve,
    /// Arc angle, for `--curve arc`.
    #[arg(long, value_parser = parse_angle, default_value = "1.0")]
    pub theta: f64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Cw,
    Ccw,
}

#[derive(Debug, Args)]
pub struct PolygonArgs {
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub side: f64,
    /// Full circuits of the polygon.
    #[arg(long, default_value_t = 1)]
    pub turns: usize,
    #[arg(long, value_enum, default_value = "cw")]
    pub direction: Direction,
    /// Points per arc for csv output.
    #[arg(long, default_value_t = 50)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    pub kind: FigureKind,
    #[arg(long, value_parser = parse_angle, default_value = "1.0")]
    pub theta: f64,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub side: f64,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// World window `x0,y0,x1,y1`.
    #[arg(long, value_parser = parse_rect, allow_hyphen_values = true)]
    pub zoom: Option<Rect>,
    #[arg(long, default_value_t = 800.0)]
    pub width: f64,
    #[arg(long, default_value_t = 800.0)]
    pub height: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_depth: usize,
    /// Comma-separated arc angles.
    #[arg(long, value_parser = parse_angle, value_delimiter = ',', default_value = "0.3,1.0,pi/3")]
    pub thetas: Vec<f64>,
    #[arg(long, default_value_t = 1e-7)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Whether every check behind the written artifact passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
}

fn unsupported(cmd: &str, format: Format) -> CliError {
    let name = format
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    CliError::usage(format!("`{cmd}` does not support --format {name}"))
}

fn write_output(out: Option<&PathBuf>, body: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body)
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut body = serde_json::to_vec_pretty(value)?;
    body.push(b'\n');
    Ok(body)
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<Vec<u8>, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row)?;
    }
    writer.into_inner().map_err(|e| CliError::Io {
        path: "<csv buffer>".into(),
        source: e.into_error(),
    })
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Tower(args) => {
            let tower = commands::build_checked_tower(args.theta, args.depth, args.tol)?;
            let json = commands::tower_json(&tower);
            let body = match args.format {
                Format::Json => to_json(&json)?,
                Format::Csv => to_csv(&commands::tower_samples(&tower, args.samples)?)?,
                Format::Svg => figures::render(&FigureSpec {
                    kind: FigureKind::Tower,
                    theta: args.theta,
                    depth: args.depth,
                    samples: args.samples,
                    ..FigureSpec::default()
                })?
                .into_bytes(),
                f => return Err(unsupported("tower", f)),
            };
            write_output(args.out.as_ref(), &body)?;
            Ok(Outcome { pass: json.pass() })
        }
        Command::Involute(args) => {
            let json = commands::involute_json(args.curve, args.theta, args.samples, args.tol)?;
            let body = match args.format {
                Format::Json => to_json(&json)?,
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(Vec::new());
                    writer.write_record(["t", "x", "y"])?;
                    for row in &json.points {
                        writer.serialize(row)?;
                    }
                    writer.into_inner().map_err(|e| CliError::Io {
                        path: "<csv buffer>".into(),
                        source: e.into_error(),
                    })?
                }
                f => return Err(unsupported("involute", f)),
            };
            write_output(args.out.as_ref(), &body)?;
            Ok(Outcome {
                pass: json.checks.iter().all(|c| c.pass),
            })
        }
        Command::Polygon(args) => {
            let dir = match args.direction {
                Direction::Cw => Unwind::Clockwise,
                Direction::Ccw => Unwind::Counterclockwise,
            };
            let json = commands::polygon_json(args.n, args.side, args.turns, dir)?;
            let body = match args.format {
                Format::Json => to_json(&json)?,
                Format::Csv => to_csv(&commands::polygon_samples(&json, args.samples)?)?,
                Format::Svg if args.turns == 1 && dir == Unwind::Clockwise => {
                    figures::render(&FigureSpec {
                        kind: FigureKind::Polygon,
                        n: args.n,
                        side: args.side,
                        ..FigureSpec::default()
                    })?
                    .into_bytes()
                }
                Format::Svg => {
                    return Err(CliError::usage(
                        "svg output draws one clockwise turn; use `render --kind polygon`",
                    ))
                }
                f => return Err(unsupported("polygon", f)),
            };
            write_output(args.out.as_ref(), &body)?;
            Ok(Outcome {
                pass: json.checks.iter().all(|c| c.pass),
            })
        }
        Command::Render(args) => {
            let fig = FigureSpec {
                kind: args.kind,
                theta: args.theta,
                depth: args.depth,
                n: args.n,
                side: args.side,
                samples: args.samples,
                width: args.width,
                height: args.height,
                zoom: args.zoom,
            };
            let svg = figures::render(&fig)?;
            write_output(args.out.as_ref(), svg.as_bytes())?;
            Ok(Outcome { pass: true })
        }
        Command::Verify(args) => {
            let opts = commands::VerifyOptions {
                max_depth: args.max_depth,
                thetas: args.thetas,
                tol: args.tol,
            };
            let report = commands::verify(&opts)?;
            let body = match args.format {
                Format::Json => to_json(&report)?,
                Format::Text => {
                    let induction = if opts.max_depth >= 2 {
                        involute_core::symbolic::verify_induction(opts.max_depth as u32 - 1)?
                            .transcript()
                    } else {
                        String::new()
                    };
                    format!("{induction}{}", report.to_text()).into_bytes()
                }
                f => return Err(unsupported("verify", f)),
            };
            write_output(args.out.as_ref(), &body)?;
            Ok(Outcome { pass: report.pass })
        }
    }
}
