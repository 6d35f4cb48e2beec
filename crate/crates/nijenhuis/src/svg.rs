//! Level-line plots as standalone SVG.
//!
//! Layers, in order: background, complex-eigenvalue region, masked nodes,
//! one `<path>` per polyline. The grid rectangle maps onto a fixed
//! 1000x1000 viewBox with `y` pointing up. Output is a pure function of the
//! inputs.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use nijenhuis_core::numeric::{ContourSet, EigenBranch, EigenField, GridSpec, Region};

const SIZE: f64 = 1000.0;

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn new(grid: &GridSpec) -> Self {
        let (x0, x1) = grid.x_range();
        let (y0, y1) = grid.y_range();
        Frame { x0, x1, y0, y1 }
    }

    fn px(&self, x: f64) -> f64 {
        (x - self.x0) / (self.x1 - self.x0) * SIZE
    }

    fn py(&self, y: f64) -> f64 {
        (self.y1 - y) / (self.y1 - self.y0) * SIZE
    }
}

/// Three decimals, with `-0.000` folded into `0.000`.
fn coord(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn branch_color(branch: EigenBranch) -> &'static str {
    match branch {
        EigenBranch::Plus => "#1f4e9c",
        EigenBranch::Minus => "#b5401d",
    }
}

/// Node `(i, j)` owns the cell of half a step around it, clipped to the
/// grid. Runs of equal tags along a row merge into one rectangle.
fn region_rects(field: &EigenField, frame: &Frame, want: Region) -> String {
    let grid = &field.grid;
    let (nx, ny) = (grid.nx(), grid.ny());
    let (hx, hy) = (grid.dx() / 2.0, grid.dy() / 2.0);
    let clip_x = |v: f64| v.clamp(frame.x0, frame.x1);
    let clip_y = |v: f64| v.clamp(frame.y0, frame.y1);
    let mut out = String::new();
    for j in 0..ny {
        let y = grid.y(j);
        let top = frame.py(clip_y(y + hy));
        let bottom = frame.py(clip_y(y - hy));
        let mut i = 0;
        while i < nx {
            if field.node(i, j).region != want {
                i += 1;
                continue;
            }
            let start = i;
            while i < nx && field.node(i, j).region == want {
                i += 1;
            }
            let left = frame.px(clip_x(grid.x(start) - hx));
            let right = frame.px(clip_x(grid.x(i - 1) + hx));
            let _ = writeln!(
                out,
                "    <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
                coord(left),
                coord(top),
                coord(right - left),
                coord(bottom - top)
            );
        }
    }
    out
}

pub fn render_svg(field: &EigenField, contours: &ContourSet, description: &[String]) -> String {
    let frame = Frame::new(&field.grid);
    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n",
    );
    if !description.is_empty() {
        let _ = writeln!(out, "  <desc>{}</desc>", escape(&description.join("\n")));
    }
    out.push_str("  <rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n");
    out.push_str("  <g id=\"complex-region\" fill=\"#d9d9d9\" stroke=\"none\">\n");
    out.push_str(&region_rects(field, &frame, Region::Complex));
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"masked\" fill=\"#7a7a7a\" stroke=\"none\">\n");
    out.push_str(&region_rects(field, &frame, Region::Masked));
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"level-lines\" fill=\"none\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n");
    for line in &contours.polylines {
        if line.points.len() < 2 {
            continue;
        }
        let mut d = String::new();
        for (k, &(x, y)) in line.points.iter().enumerate() {
            let _ = write!(
                d,
                "{}{},{}",
                if k == 0 { "M" } else { " L" },
                coord(frame.px(x)),
                coord(frame.py(y))
            );
        }
        if line.closed {
            d.push_str(" Z");
        }
        let _ = writeln!(
            out,
            "    <path data-branch=\"{}\" data-level=\"{:.6e}\" stroke=\"{}\" d=\"{}\"/>",
            line.branch.as_str(),
            line.level,
            branch_color(line.branch),
            d
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

pub fn write_svg(field: &EigenField, contours: &ContourSet, description: &[String], path: &Path) -> io::Result<()> {
    std::fs::write(path, render_svg(field, contours, description))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nijenhuis_core::numeric::{eval_eigenfield, extract_levels};
    use nijenhuis_core::parse_operator;

    #[test]
    fn empty_contours_still_give_region_layer() {
        let op = parse_operator(["x", "-2*y", "y/2", "0"]).unwrap();
        let grid = GridSpec::unit_square(21).unwrap();
        let field = eval_eigenfield(&op, &grid).unwrap();
        let svg = render_svg(&field, &ContourSet { polylines: Vec::new() }, &[]);
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert!(svg.contains("id=\"complex-region\""));
        assert!(!svg.contains("<path"));
        assert!(svg.contains("<rect x="));
    }

    #[test]
    fn one_path_per_polyline() {
        let op = parse_operator(["x", "2*y", "y/2", "0"]).unwrap();
        let grid = GridSpec::unit_square(31).unwrap();
        let field = eval_eigenfield(&op, &grid).unwrap();
        let levels = field.default_levels(7);
        let contours = extract_levels(&field, &levels);
        let svg = render_svg(&field, &contours, &["a < b & c".to_string()]);
        let drawn = contours.polylines.iter().filter(|l| l.points.len() >= 2).count();
        assert_eq!(svg.matches("<path ").count(), drawn);
        assert!(svg.contains("<desc>a &lt; b &amp; c</desc>"));
        assert_eq!(svg, render_svg(&field, &contours, &["a < b & c".to_string()]));
    }

    #[test]
    fn frame_maps_corners() {
        let grid = GridSpec::new((-1.0, 3.0), (0.0, 2.0), 3, 3).unwrap();
        let f = Frame::new(&grid);
        assert_eq!((f.px(-1.0), f.py(2.0)), (0.0, 0.0));
        assert_eq!((f.px(3.0), f.py(0.0)), (1000.0, 1000.0));
        assert_eq!(coord(-0.0001), "0.000");
    }
}
