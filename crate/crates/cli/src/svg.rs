// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

//! A small SVG 1.1 writer.
//!
//! Geometry is emitted in world coordinates (y up) inside a single group
//! whose transform maps the view window onto the canvas and flips y. Text is
//! placed outside that group so it is not mirrored.

use std::fmt::Write as _;

use involute_core::curve::Point2;
use involute_core::polygon::CircularArc;

/// An axis-aligned world-space rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Option<Self> {
        let ok = [x0, y0, x1, y1].iter().all(|v| v.is_finite()) && x0 < x1 && y0 < y1;
        ok.then_some(Rect { x0, y0, x1, y1 })
    }

    /// Smallest rectangle containing `points`, padded by `margin` of its
    /// larger side. `None` for an empty set.
    pub fn bounding(points: impl IntoIterator<Item = Point2>, margin: f64) -> Option<Self> {
        let mut it = points.into_iter().filter(|p| p.is_finite());
        let first = it.next()?;
        let (mut x0, mut y0, mut x1, mut y1) = (first.x, first.y, first.x, first.y);
        for p in it {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let pad = margin * (x1 - x0).max(y1 - y0).max(1e-9);
        Rect::new(x0 - pad, y0 - pad, x1 + pad, y1 + pad)
    }
}

/// `x0,y0,x1,y1`.
pub fn parse_rect(input: &str) -> Result<Rect, String> {
    let parts: Vec<f64> = input
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("invalid window `{input}`: {e}"))?;
    match parts[..] {
        [x0, y0, x1, y1] => Rect::new(x0, y0, x1, y1)
            .ok_or_else(|| format!("invalid window `{input}`: need x0 < x1 and y0 < y1")),
        _ => Err(format!("invalid window `{input}`: expected x0,y0,x1,y1")),
    }
}

/// Fixed-point with at most six decimals, trailing zeros trimmed.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub struct SvgDocument {
    width: f64,
    height: f64,
    scale: f64,
    tx: f64,
    ty: f64,
    geometry: String,
    labels: String,
}

impl SvgDocument {
    /// A `width × height` canvas showing `view`, uniformly scaled and
    /// centered.
    pub fn new(width: f64, height: f64, view: Rect) -> Self {
        let scale = (width / (view.x1 - view.x0)).min(height / (view.y1 - view.y0));
        let tx = width / 2.0 - scale * (view.x0 + view.x1) / 2.0;
        let ty = height / 2.0 + scale * (view.y0 + view.y1) / 2.0;
        SvgDocument {
            width,
            height,
            scale,
            tx,
            ty,
            geometry: String::new(),
            labels: String::new(),
        }
    }

    /// World → canvas.
    pub fn to_canvas(&self, p: Point2) -> (f64, f64) {
        (self.scale * p.x + self.tx, -self.scale * p.y + self.ty)
    }

    /// A canvas length expressed in world units.
    fn px(&self, v: f64) -> f64 {
        v / self.scale
    }

    pub fn polyline(&mut self, class: &str, points: &[Point2]) {
        let mut d = String::new();
        for (i, p) in points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{}{} {} ", cmd, num(p.x), num(p.y));
        }
        let _ = writeln!(
            self.geometry,
            r#"    <path class="{class}" d="{}"/>"#,
            d.trim_end()
        );
    }

    pub fn arc(&mut self, class: &str, arc: &CircularArc) {
        let (p0, p1) = (arc.start_point(), arc.end_point());
        let sweep = arc.sweep();
        let large = u8::from(sweep.abs() > std::f64::consts::PI);
        // Inside the flipped group, a positive sweep flag is counterclockwise
        // in world coordinates.
        let dir = u8::from(sweep > 0.0);
        let r = num(arc.radius);
        let _ = writeln!(
            self.geometry,
            r#"    <path class="{class}" d="M{} {} A{r} {r} 0 {large} {dir} {} {}"/>"#,
            num(p0.x),
            num(p0.y),
            num(p1.x),
            num(p1.y)
        );
    }

    pub fn line(&mut self, class: &str, a: Point2, b: Point2) {
        let _ = writeln!(
            self.geometry,
            r#"    <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(a.x),
            num(a.y),
            num(b.x),
            num(b.y)
        );
    }

    pub fn circle(&mut self, class: &str, center: Point2, radius: f64) {
        let _ = writeln!(
            self.geometry,
            r#"    <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            num(center.x),
            num(center.y),
            num(radius)
        );
    }

    /// A dot of fixed canvas size.
    pub fn dot(&mut self, center: Point2) {
        self.circle("dot", center, self.px(2.5));
    }

    pub fn polygon(&mut self, class: &str, points: &[Point2]) {
        let pts: Vec<String> = points
            .iter()
            .map(|p| format!("{},{}", num(p.x), num(p.y)))
            .collect();
        let _ = writeln!(
            self.geometry,
            r#"    <polygon class="{class}" points="{}"/>"#,
            pts.join(" ")
        );
    }

    /// Text anchored at a world point, shifted by `(dx, dy)` canvas pixels.
    pub fn label(&mut self, at: Point2, dx: f64, dy: f64, text: &str) {
        let (x, y) = self.to_canvas(at);
        let _ = writeln!(
            self.labels,
            r#"    <text x="{}" y="{}">{}</text>"#,
            num(x + dx),
            num(y + dy),
            escape(text)
        );
    }

    pub fn finish(self) -> String {
        let stroke = num(self.px(1.5));
        let thin = num(self.px(1.0));
        let dash = num(self.px(5.0));
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
        );
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = num(self.width),
            h = num(self.height)
        );
        let _ = writeln!(out, "  <defs>");
        let _ = writeln!(
            out,
            r#"    <clipPath id="view"><rect x="0" y="0" width="{}" height="{}"/></clipPath>"#,
            num(self.width),
            num(self.height)
        );
        let _ = writeln!(out, r#"    <style type="text/css"><![CDATA["#);
        let _ = writeln!(out, "      path, line, polygon, circle {{ fill: none; stroke: black; stroke-width: {stroke}; }}");
        let _ = writeln!(out, "      .base {{ stroke: #1f5fbf; }}");
        let _ = writeln!(out, "      .string {{ stroke: #888888; stroke-width: {thin}; stroke-dasharray: {dash} {dash}; }}");
        let _ = writeln!(out, "      .segment {{ stroke: #c0392b; }}");
        let _ = writeln!(
            out,
            "      .radius {{ stroke: #888888; stroke-width: {thin}; }}"
        );
        let _ = writeln!(out, "      .dot {{ fill: black; stroke: none; }}");
        let _ = writeln!(out, "      text {{ font-family: serif; font-size: 14px; }}");
        let _ = writeln!(out, "    ]]></style>");
        let _ = writeln!(out, "  </defs>");
        let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(out, r#"  <g clip-path="url(#view)">"#);
        let _ = writeln!(
            out,
            r#"   <g transform="matrix({} 0 0 {} {} {})">"#,
            num(self.scale),
            num(-self.scale),
            num(self.tx),
            num(self.ty)
        );
        out.push_str(&self.geometry);
        let _ = writeln!(out, "   </g>");
        out.push_str(&self.labels);
        let _ = writeln!(out, "  </g>");
        let _ = writeln!(out, "</svg>");
        out
    }
}
