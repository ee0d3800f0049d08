//! Static SVG renderings of curve families, arrangements and colored
//! L-shape families.

use std::fmt::Write;

use crate::arrangement::Arrangement;
use crate::geometry::{Color, Curve};
use crate::lshape_cf::GroundedFamily;

struct Canvas {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
    body: String,
}

impl Canvas {
    fn new(points: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut c = Canvas {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
            body: String::new(),
        };
        for (x, y) in points {
            c.min_x = c.min_x.min(x);
            c.max_x = c.max_x.max(x);
            c.min_y = c.min_y.min(y);
            c.max_y = c.max_y.max(y);
        }
        if !c.min_x.is_finite() {
            (c.min_x, c.max_x, c.min_y, c.max_y) = (0.0, 1.0, 0.0, 1.0);
        }
        c
    }

    fn stroke_width(&self) -> f64 {
        (self.max_x - self.min_x)
            .max(self.max_y - self.min_y)
            .max(1.0)
            / 400.0
    }

    fn points_attr(pts: &[(f64, f64)]) -> String {
        pts.iter()
            .map(|(x, y)| format!("{x},{}", -y))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, dash: bool) {
        let w = self.stroke_width();
        let dash = if dash {
            format!(" stroke-dasharray=\"{} {}\"", 3.0 * w, 2.0 * w)
        } else {
            String::new()
        };
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{w}\"{dash}/>",
            Self::points_attr(pts)
        );
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str) {
        let _ = writeln!(
            self.body,
            "<polygon points=\"{}\" fill=\"{fill}\" fill-opacity=\"0.25\" stroke=\"none\"/>",
            Self::points_attr(pts)
        );
    }

    fn finish(self) -> String {
        let pad = (self.max_x - self.min_x)
            .max(self.max_y - self.min_y)
            .max(1.0)
            * 0.05;
        let (x, y) = (self.min_x - pad, -self.max_y - pad);
        let (w, h) = (
            self.max_x - self.min_x + 2.0 * pad,
            self.max_y - self.min_y + 2.0 * pad,
        );
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x} {y} {w} {h}\" width=\"800\" height=\"{}\">\n<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n{}</svg>\n",
            (800.0 * h / w).round(),
            self.body
        )
    }
}

fn stroke_of(color: Color) -> &'static str {
    match color {
        Color::Red => "#c0392b",
        Color::Blue => "#2962b0",
        Color::Neutral => "#333333",
    }
}

fn hue(i: usize) -> String {
    format!("hsl({}, 65%, 50%)", (i * 137) % 360)
}

fn curve_points(c: &Curve) -> Vec<(f64, f64)> {
    c.vertices().iter().map(|p| p.to_f64()).collect()
}

/// Shapes stroked by color, connectors dashed.
pub fn render_curves(shapes: &[Curve], connectors: &[Curve]) -> String {
    let mut canvas = Canvas::new(shapes.iter().chain(connectors).flat_map(curve_points));
    for c in shapes {
        canvas.polyline(&curve_points(c), stroke_of(c.color()), false);
    }
    for c in connectors {
        canvas.polyline(&curve_points(c), stroke_of(Color::Neutral), true);
    }
    canvas.finish()
}

/// The arrangement's curves, with bounded faces optionally shaded.
pub fn render_arrangement(arr: &Arrangement, shade_faces: bool) -> String {
    let mut canvas = Canvas::new(arr.curves().iter().flat_map(curve_points));
    if shade_faces {
        for face in arr.faces().iter().filter(|f| !f.is_unbounded()) {
            if let Some(w) = face.outer {
                let pts: Vec<(f64, f64)> = arr.walks()[w]
                    .half_edges
                    .iter()
                    .map(|&h| arr.nodes()[arr.origin(h)].point.to_f64())
                    .collect();
                canvas.polygon(&pts, &hue(face.id));
            }
        }
    }
    for c in arr.curves() {
        canvas.polyline(&curve_points(c), stroke_of(c.color()), false);
    }
    canvas.finish()
}

/// Grounded L-shapes stroked in a hue per color class.
pub fn render_colored_lshapes(family: &GroundedFamily, colors: &[u32]) -> String {
    let shapes: Vec<Vec<(f64, f64)>> = family
        .shapes
        .iter()
        .map(|g| {
            vec![
                (g.x as f64, 0.0),
                (g.x as f64, -(g.depth as f64)),
                (g.right as f64, -(g.depth as f64)),
            ]
        })
        .collect();
    let mut canvas = Canvas::new(shapes.iter().flatten().copied());
    for (pts, &c) in shapes.iter().zip(colors) {
        canvas.polyline(pts, &hue(c as usize), false);
    }
    canvas.finish()
}
