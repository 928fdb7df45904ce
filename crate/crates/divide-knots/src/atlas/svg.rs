//! Deterministic SVG rendering of a placed region together with its
//! divide curve.

use std::fmt::Write;

use crate::trace::{trace_curve, PlacedRegion, TraceError};

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Corner rounding radius for curve vertices, in lattice units.
const CORNER_RADIUS: f64 = 0.3;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Pixels per lattice unit.
    pub scale: f64,
    /// Outer padding in pixels.
    pub margin: f64,
    /// Draw circles at the double points.
    pub markers: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            scale: 20.0,
            margin: 20.0,
            markers: true,
        }
    }
}

struct Frame {
    min_x: i64,
    max_y: i64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.margin + (x - self.min_x as f64) * self.scale,
            self.margin + (self.max_y as f64 - y) * self.scale,
        )
    }
}

fn push_point(d: &mut String, cmd: char, frame: &Frame, x: f64, y: f64) {
    let (px, py) = frame.map(x, y);
    let _ = write!(d, "{cmd}{px:.2} {py:.2} ");
}

fn rounded_path(points: &[(i64, i64)], closed: bool, frame: &Frame) -> String {
    let mut d = String::new();
    let n = points.len();
    if n < 2 {
        return d;
    }
    let at = |i: usize| {
        let (x, y) = points[i % n];
        (x as f64, y as f64)
    };
    let corner = |d: &mut String, prev: (f64, f64), v: (f64, f64), next: (f64, f64)| {
        let shrink = |from: (f64, f64), to: (f64, f64)| {
            let (dx, dy) = (to.0 - from.0, to.1 - from.1);
            let len = (dx * dx + dy * dy).sqrt();
            (to.0 - dx / len * CORNER_RADIUS, to.1 - dy / len * CORNER_RADIUS)
        };
        let inward = shrink(prev, v);
        let outward = shrink(next, v);
        push_point(d, 'L', frame, inward.0, inward.1);
        let (cx, cy) = frame.map(v.0, v.1);
        let _ = write!(d, "Q{cx:.2} {cy:.2} ");
        push_point(d, ' ', frame, outward.0, outward.1);
    };
    if closed {
        let start = {
            let (ax, ay) = at(0);
            let (bx, by) = at(1);
            ((ax + bx) / 2.0, (ay + by) / 2.0)
        };
        push_point(&mut d, 'M', frame, start.0, start.1);
        for i in 1..=n {
            corner(&mut d, at(i - 1), at(i), at(i + 1));
        }
        d.push('Z');
    } else {
        let first = at(0);
        push_point(&mut d, 'M', frame, first.0, first.1);
        for i in 1..n - 1 {
            corner(&mut d, at(i - 1), at(i), at(i + 1));
        }
        let last = at(n - 1);
        push_point(&mut d, 'L', frame, last.0, last.1);
    }
    d.trim_end().to_string()
}

/// Render the region outline, the divide curve and optional double-point
/// markers. Output bytes depend only on the inputs.
pub fn render_svg(placed: &PlacedRegion, options: &SvgOptions) -> Result<String, TraceError> {
    let curve = trace_curve(placed)?;
    let corners = placed.corners();
    let min_x = corners.iter().map(|c| c.0).min().unwrap_or(0);
    let max_x = corners.iter().map(|c| c.0).max().unwrap_or(0);
    let min_y = corners.iter().map(|c| c.1).min().unwrap_or(0);
    let max_y = corners.iter().map(|c| c.1).max().unwrap_or(0);
    let frame = Frame {
        min_x,
        max_y,
        scale: options.scale,
        margin: options.margin,
    };
    let width = (max_x - min_x) as f64 * options.scale + 2.0 * options.margin;
    let height = (max_y - min_y) as f64 * options.scale + 2.0 * options.margin;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">"
    );

    let mut outline = String::new();
    for (i, &(x, y)) in corners.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        push_point(&mut outline, cmd, &frame, x as f64, y as f64);
    }
    let _ = writeln!(
        svg,
        "  <path d=\"{}Z\" fill=\"#f5f5f0\" stroke=\"#888888\" stroke-width=\"1\"/>",
        outline
    );

    for (i, path) in curve.paths.iter().enumerate() {
        let d = rounded_path(path, curve.closed[i], &frame);
        if d.is_empty() {
            continue;
        }
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            svg,
            "  <path d=\"{d}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" stroke-linecap=\"round\"/>"
        );
    }

    if options.markers {
        let r = options.scale * 0.14;
        for &(x, y) in &curve.crossings {
            let (cx, cy) = frame.map(x as f64, y as f64);
            let _ = writeln!(
                svg,
                "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r:.2}\" fill=\"#ffffff\" stroke=\"#333333\" stroke-width=\"1.5\"/>"
            );
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lshape::{LRegion, Rect};
    use crate::trace::{place, place_rect};

    #[test]
    fn pretzel_region_renders_with_one_arc_and_five_markers() {
        let region = LRegion::new(3, 5, 3, 4).unwrap();
        let svg = render_svg(&place(&region), &SvgOptions::default()).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<circle").count(), 5);
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains("stroke=\"#1f77b4\""));
    }

    #[test]
    fn torus_rectangle_marker_count_follows_the_formula() {
        let svg = render_svg(&place_rect(&Rect::new(6, 5).unwrap()), &SvgOptions::default())
            .unwrap();
        assert_eq!(svg.matches("<circle").count(), 10);
    }

    #[test]
    fn marker_layer_can_be_switched_off() {
        let region = LRegion::new(3, 5, 3, 4).unwrap();
        let options = SvgOptions {
            markers: false,
            ..SvgOptions::default()
        };
        let svg = render_svg(&place(&region), &options).unwrap();
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn rendering_is_deterministic() {
        let region = LRegion::new(2, 7, 3, 8).unwrap();
        let a = render_svg(&place(&region), &SvgOptions::default()).unwrap();
        let b = render_svg(&place(&region), &SvgOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closed_components_emit_closed_subpaths() {
        let svg = render_svg(&place_rect(&Rect::new(3, 3).unwrap()), &SvgOptions::default())
            .unwrap();
        assert_eq!(svg.matches("stroke-linecap").count(), 2);
        assert_eq!(svg.matches('Z').count(), 2);
        assert!(svg.contains("stroke=\"#d62728\""));
    }
}
