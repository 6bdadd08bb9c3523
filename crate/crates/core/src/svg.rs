//! Deterministic SVG drawings of `A_i`.
//!
//! Geometry stays exact; coordinates are converted to two-decimal screen
//! positions only when the markup is written.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::construction::{ConfigurationFamily, ConstructionError};
use crate::geometry::{line_through, PlanePoint, Rational};
use crate::label::Label;

pub const WIDTH: u32 = 640;
pub const HEIGHT: u32 = 480;
const MARGIN: f64 = 40.0;

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn fit(points: &[(Label, PlanePoint)]) -> Frame {
        let xs = points.iter().map(|(_, p)| to_f64(&p.x));
        let ys = points.iter().map(|(_, p)| to_f64(&p.y));
        let (min_x, max_x) = xs.fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let (min_y, max_y) = ys.fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
        let span_x = (max_x - min_x).max(1e-9);
        let span_y = (max_y - min_y).max(1e-9);
        let scale =
            ((WIDTH as f64 - 2.0 * MARGIN) / span_x).min((HEIGHT as f64 - 2.0 * MARGIN) / span_y);
        Frame {
            min_x,
            max_y,
            scale,
        }
    }

    fn map(&self, p: &PlanePoint) -> (String, String) {
        let x = MARGIN + (to_f64(&p.x) - self.min_x) * self.scale;
        let y = MARGIN + (self.max_y - to_f64(&p.y)) * self.scale;
        (format!("{x:.2}"), format!("{y:.2}"))
    }
}

/// Label triples whose lines appear in the drawing of `A_level`.
fn construction_lines(family: &ConfigurationFamily, level: u32) -> Vec<[Label; 3]> {
    let mut lines = vec![
        [Label::Alpha, Label::Gamma, Label::Beta],
        [Label::Omega, Label::Gamma, Label::Gamma],
        [Label::Omega, Label::Beta, Label::Beta],
    ];
    lines.extend(
        family
            .incidence_triples()
            .into_iter()
            .filter(|(n, _)| *n <= level)
            .map(|(_, t)| t),
    );
    lines
}

/// SVG of `A_level` with every construction line drawn between its extreme
/// points and every point labelled.
pub fn emit_figure(family: &ConfigurationFamily, level: u32) -> Result<String, ConstructionError> {
    if level > family.depth() {
        return Err(ConstructionError::IndexOutOfRange {
            index: level,
            depth: family.depth(),
        });
    }
    let points = family.points_at(level);
    let frame = Frame::fit(&points);

    let mut seen: BTreeSet<(BigInt, BigInt, BigInt)> = BTreeSet::new();
    let mut segments = Vec::new();
    for [p, q, _] in construction_lines(family, level) {
        let get = |l: Label| family.point(l).expect("label in family");
        let line = line_through(get(p), get(q))?;
        let (a, b, c) = line.coefficients();
        if !seen.insert((a.clone(), b.clone(), c.clone())) {
            continue;
        }
        let on_line: Vec<&PlanePoint> = points
            .iter()
            .map(|(_, pt)| pt)
            .filter(|pt| line.contains(pt))
            .collect();
        let lo = on_line.iter().min().expect("line has points");
        let hi = on_line.iter().max().expect("line has points");
        segments.push((frame.map(lo), frame.map(hi)));
    }

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(out, r#"<title>A{level}</title>"#).unwrap();
    writeln!(
        out,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    )
    .unwrap();
    writeln!(out, r#"<g stroke="gray" stroke-width="1">"#).unwrap();
    for ((x1, y1), (x2, y2)) in &segments {
        writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g font-family="serif" font-size="14">"#).unwrap();
    for (label, p) in &points {
        let (x, y) = frame.map(p);
        writeln!(
            out,
            r#"<circle cx="{x}" cy="{y}" r="3" fill="black"/><text x="{x}" y="{y}" dx="5" dy="-5">{label}</text>"#
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
