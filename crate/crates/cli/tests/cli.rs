// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::FRAC_PI_3;
use std::process::{Command, Output};

use involute_cli::commands::{tower_json, tower_samples, LevelSample, TowerJson};
use involute_core::curve::DEFAULT_TOLERANCE;
use involute_core::involute::build_tower;

fn involute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_involute"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn sig15(v: f64) -> String {
    format!("{v:.14e}")
}

fn count(svg: &str, tag: &str) -> usize {
    let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
    assert!(doc.root_element().has_tag_name("svg"));
    assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
    doc.descendants().filter(|n| n.has_tag_name(tag)).count()
}

#[test]
fn tower_json_round_trips() {
    let out = involute(&["tower", "--theta", "pi/3", "--depth", "6"]);
    assert!(out.status.success());
    let parsed: TowerJson = serde_json::from_str(&stdout(&out)).unwrap();
    let tower = build_tower(FRAC_PI_3, 6, DEFAULT_TOLERANCE).unwrap();
    let direct = tower_json(&tower);
    assert_eq!(parsed.endpoints.len(), 7);
    for (a, b) in parsed.endpoints.iter().zip(&direct.endpoints) {
        assert_eq!(sig15(a[0]), sig15(b[0]));
        assert_eq!(sig15(a[1]), sig15(b[1]));
    }
    assert_eq!(parsed, direct);
    assert_eq!(parsed.remainder_bounds.len(), 7);
    assert!(parsed.checks.iter().all(|c| c.pass));
}

#[test]
fn tower_csv_round_trips_and_converges() {
    let out = involute(&[
        "tower",
        "--theta",
        "pi/3",
        "--depth",
        "6",
        "--format",
        "csv",
        "--samples",
        "25",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("level,t,x,y\n"));
    let rows: Vec<LevelSample> = csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    let tower = build_tower(FRAC_PI_3, 6, DEFAULT_TOLERANCE).unwrap();
    let direct = tower_samples(&tower, 25).unwrap();
    assert_eq!(rows.len(), 7 * 25);
    for (a, b) in rows.iter().zip(&direct) {
        assert_eq!(a.level, b.level);
        for (u, v) in [(a.t, b.t), (a.x, b.x), (a.y, b.y)] {
            assert_eq!(sig15(u), sig15(v));
        }
    }
    // Last row: A₆ at t = θ, within the remainder bound of (cos θ, sin θ).
    let last = rows.last().unwrap();
    assert_eq!((last.level, last.t), (6, FRAC_PI_3));
    let d = ((last.x - 0.5).powi(2) + (last.y - 3f64.sqrt() / 2.0).powi(2)).sqrt();
    let bound = 2.0 * FRAC_PI_3.powi(7) / 5040.0;
    assert!(d <= bound, "{d} > {bound}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tower", "--theta", "0.7", "--depth", "5"][..],
        &["tower", "--theta", "0.7", "--depth", "5", "--format", "csv"],
        &["verify", "--max-depth", "3"],
        &["polygon", "--n", "7", "--format", "csv"],
        &["render", "--kind", "tower"],
    ] {
        let a = involute(args);
        let b = involute(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tower.json");
    let out = involute(&["tower", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(json["depth"], 4);
}

#[test]
fn exit_codes() {
    assert_eq!(involute(&["tower", "--theta", "0"]).status.code(), Some(2));
    assert_eq!(involute(&["tower", "--theta", "2"]).status.code(), Some(2));
    assert_eq!(involute(&["tower", "--depth", "13"]).status.code(), Some(2));
    assert_eq!(
        involute(&["tower", "--theta", "pie"]).status.code(),
        Some(2)
    );
    assert_eq!(
        involute(&["tower", "--format", "text"]).status.code(),
        Some(2)
    );
    assert_eq!(
        involute(&["render", "--kind", "polygon", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        involute(&["render", "--kind", "tower", "--zoom", "1,1,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        involute(&["verify", "--max-depth", "13"]).status.code(),
        Some(2)
    );
    assert_eq!(involute(&["nonsense"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.json");
    let out = involute(&["tower", "--out", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_defaults_and_tiny_tolerance() {
    let out = involute(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], true);

    let out = involute(&["verify", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["pass"], false);
    let checks = report["checks"].as_array().unwrap();
    let symbolic: Vec<_> = checks
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("symbolic"))
        .collect();
    assert_eq!(symbolic.len(), 6);
    assert!(symbolic.iter().all(|c| c["pass"] == true));
    assert!(checks.iter().any(|c| c["pass"] == false));
}

#[test]
fn verify_depth_one_is_the_base_case() {
    let out = involute(&["verify", "--max-depth", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|c| c["name"].as_str())
        .filter(|n| n.starts_with("symbolic"))
        .collect();
    assert_eq!(names, ["symbolic involute of AA0 is AA1"]);
}

#[test]
fn verify_text_has_transcript() {
    let out = involute(&[
        "verify",
        "--max-depth",
        "3",
        "--thetas",
        "1.0",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("s(t) = 1/6*t^3"));
    assert!(text.contains("induction up to AA_3: verified"));
    assert!(text.contains("0 failed"));
}

#[test]
fn polygon_figure_structure() {
    for n in [3, 5, 8] {
        let out = involute(&[
            "render",
            "--kind",
            "polygon",
            "--n",
            &n.to_string(),
            "--side",
            "0.5",
        ]);
        assert!(out.status.success());
        let svg = stdout(&out);
        assert_eq!(count(&svg, "path"), n);
        assert_eq!(count(&svg, "polygon"), 1);
        let doc = roxmltree::Document::parse(&svg).unwrap();
        let dashed = doc
            .descendants()
            .filter(|e| e.has_tag_name("line") && e.attribute("class") == Some("string"))
            .count();
        assert_eq!(dashed, n);
    }
}

#[test]
fn tower_figure_structure() {
    let out = involute(&[
        "render", "--kind", "tower", "--theta", "1.2", "--depth", "5",
    ]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert_eq!(count(&svg, "path"), 6);
    for label in ["θ", "θ²/2!", "θ³/3!", "θ⁴/4!", "θ⁵/5!"] {
        assert!(svg.contains(&format!(">{label}<")), "{label}");
    }
    // The same figure through `tower --format svg`.
    let via_tower = involute(&[
        "tower",
        "--theta",
        "1.2",
        "--depth",
        "5",
        "--format",
        "svg",
        "--samples",
        "200",
    ]);
    assert_eq!(via_tower.stdout, out.stdout);
}

#[test]
fn zoom_sets_the_window() {
    let out = involute(&[
        "render",
        "--kind",
        "tower",
        "--theta",
        "1.2",
        "--depth",
        "5",
        "--zoom",
        "0.2,0.8,0.6,1.2",
        "--width",
        "400",
        "--height",
        "400",
    ]);
    assert!(out.status.success());
    let svg = stdout(&out);
    // 400 px across a 0.4-wide window: scale 1000, and x = 0.2 lands on 0.
    assert!(
        svg.contains(r#"transform="matrix(1000 0 0 -1000 -200 1200)""#),
        "{svg}"
    );
}

#[test]
fn other_figures() {
    let svg = stdout(&involute(&[
        "render",
        "--kind",
        "circle-involute",
        "--samples",
        "50",
    ]));
    assert_eq!(count(&svg, "path"), 1);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let d = doc
        .descendants()
        .find(|e| e.has_tag_name("path"))
        .unwrap()
        .attribute("d")
        .unwrap();
    let coords: Vec<f64> = d
        .split(|c: char| c == 'M' || c == 'L' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(coords.len(), 100);
    for (i, xy) in coords.chunks(2).enumerate() {
        let t = std::f64::consts::TAU * i as f64 / 49.0;
        let (s, c) = t.sin_cos();
        assert!((xy[0] - (c + t * s)).abs() < 1e-6 && (xy[1] - (s - t * c)).abs() < 1e-6);
    }

    let svg = stdout(&involute(&[
        "render",
        "--kind",
        "arc-string",
        "--theta",
        "pi/3",
    ]));
    assert_eq!(count(&svg, "path"), 2);
}

#[test]
fn involute_command() {
    let out = involute(&["involute", "--curve", "circle"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["points"].as_array().unwrap().len(), 1000);
    assert_eq!(json["checks"][0]["pass"], true);

    let out = involute(&[
        "involute",
        "--curve",
        "arc",
        "--theta",
        "0.5",
        "--format",
        "csv",
        "--samples",
        "11",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    let last: Vec<f64> = text
        .lines()
        .last()
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_eq!(last[0], 0.5);
    assert!((last[1] - 1.0).abs() < 1e-12 && (last[2] - 0.5).abs() < 1e-12);
}

#[test]
fn polygon_command() {
    let out = involute(&["polygon", "--n", "5", "--side", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let radii: Vec<f64> = json["arcs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["radius"].as_f64().unwrap())
        .collect();
    assert_eq!(radii, [2.0, 4.0, 6.0, 8.0, 10.0]);
    assert!((json["total_length"].as_f64().unwrap() - 12.0 * std::f64::consts::PI).abs() < 1e-12);

    let out = involute(&["polygon", "--n", "4", "--turns", "2", "--direction", "ccw"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["arcs"].as_array().unwrap().len(), 8);
    assert!(json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));

    assert_eq!(
        involute(&["polygon", "--turns", "0"]).status.code(),
        Some(2)
    );
}
