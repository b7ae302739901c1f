//! The `plot` subcommand: draw an instance's doubled point set as SVG.
//!
//! The drawing shows both parabolas as sampled polylines, the outer lifts
//! (filled) and inner lifts (hollow), every tangent segment, the hull
//! boundary, and, for every witnessing pair, the triangle that hides the
//! inner lift. Styling is class-based so the classification is machine
//! readable from the markup.

use super::files::read_instance_file;
use super::CliError;
use crate::hull::{compute_hull, PointClass};
use crate::numeric::Rational;
use crate::reductions::{build_construction, Instance};
use std::fmt::Write as _;
use std::path::Path;

const WIDTH: f64 = 900.0;
const HEIGHT: f64 = 640.0;
const PARABOLA_SEGMENTS: usize = 128;

struct Viewport {
    min_x: f64,
    min_y: f64,
    scale_x: f64,
    scale_y: f64,
}

impl Viewport {
    /// Fits the data bounding box into the canvas with a 10% margin on each
    /// side; y is flipped so the parabolas open upward on screen.
    fn fit(min_x: f64, max_x: f64, min_y: f64, max_y: f64) -> Viewport {
        let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
        let margin_x = 0.1 * span(min_x, max_x);
        let margin_y = 0.1 * span(min_y, max_y);
        let lo_x = min_x - margin_x;
        let lo_y = min_y - margin_y;
        Viewport {
            min_x: lo_x,
            min_y: lo_y,
            scale_x: WIDTH / (span(min_x, max_x) + 2.0 * margin_x),
            scale_y: HEIGHT / (span(min_y, max_y) + 2.0 * margin_y),
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.min_x) * self.scale_x,
            HEIGHT - (y - self.min_y) * self.scale_y,
        )
    }

    fn x_range(&self) -> (f64, f64) {
        (self.min_x, self.min_x + WIDTH / self.scale_x)
    }
}

fn class_name(class: PointClass) -> &'static str {
    match class {
        PointClass::ExtremeVertex => "point-extreme",
        PointClass::BoundaryNonExtreme => "point-boundary",
        PointClass::Interior => "point-interior",
    }
}

fn polyline_points(viewport: &Viewport, f: impl Fn(f64) -> f64) -> String {
    let (lo, hi) = viewport.x_range();
    let mut rendered = String::new();
    for step in 0..=PARABOLA_SEGMENTS {
        let x = lo + (hi - lo) * step as f64 / PARABOLA_SEGMENTS as f64;
        let (px, py) = viewport.map(x, f(x));
        if step > 0 {
            rendered.push(' ');
        }
        write!(rendered, "{px:.2},{py:.2}").unwrap();
    }
    rendered
}

pub fn render_svg(inst: &Instance) -> String {
    let construction = build_construction(inst);
    let points = construction.point_set();
    let report = compute_hull(&points).expect("doubled point set is never empty");
    let n = inst.len();

    // Fit lifts and tangent anchors so the whole tangent segments show.
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for p in points.iter().chain(construction.right_anchors()) {
        let (x, y) = (p.x.to_f64_lossy(), p.y.to_f64_lossy());
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let viewport = Viewport::fit(min_x, max_x, min_y, max_y);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    )
    .unwrap();
    svg.push_str(concat!(
        "<style>\n",
        ".parabola-outer { fill: none; stroke: #999; stroke-width: 1; }\n",
        ".parabola-inner { fill: none; stroke: #bbb; stroke-width: 1; stroke-dasharray: 5 4; }\n",
        ".tangent { stroke: #8888c0; stroke-width: 0.8; }\n",
        ".hull { fill: none; stroke: #222; stroke-width: 1.8; }\n",
        ".witness-triangle { fill: #d9534f22; stroke: #c0392b; stroke-width: 1; }\n",
        ".point-l { fill: #1f5fa8; stroke: #1f5fa8; }\n",
        ".point-t { fill: #ffffff; stroke: #1f5fa8; stroke-width: 1.5; }\n",
        ".point-boundary { stroke: #e08a00; }\n",
        ".point-interior { fill: #d9534f; stroke: #d9534f; }\n",
        "</style>\n",
    ));

    // The two parabolas, sampled across the visible x range.
    let inner_offset = (&inst.eps().square() * &Rational::from_ratio(1, 4)).to_f64_lossy();
    writeln!(
        svg,
        "<polyline class=\"parabola-outer\" points=\"{}\"/>",
        polyline_points(&viewport, |x| x * x)
    )
    .unwrap();
    writeln!(
        svg,
        "<polyline class=\"parabola-inner\" points=\"{}\"/>",
        polyline_points(&viewport, |x| x * x + inner_offset)
    )
    .unwrap();

    // Tangent segments, from each outer lift to its right anchor.
    for (outer, anchor) in construction
        .outer_lifts()
        .iter()
        .zip(construction.right_anchors())
    {
        let (x1, y1) = viewport.map(outer.x.to_f64_lossy(), outer.y.to_f64_lossy());
        let (x2, y2) = viewport.map(anchor.x.to_f64_lossy(), anchor.y.to_f64_lossy());
        writeln!(
            svg,
            "<line class=\"tangent\" x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>"
        )
        .unwrap();
    }

    // One outlined triangle per witnessing pair.
    let values = inst.values();
    for i in 0..n {
        let window_end = &values[i] + inst.eps();
        for j in 0..n {
            if values[j] > values[i] && values[j] < window_end {
                let corners = [
                    &construction.outer_lifts()[i],
                    &construction.outer_lifts()[j],
                    &construction.inner_lifts()[j],
                ];
                let rendered: Vec<String> = corners
                    .iter()
                    .map(|p| {
                        let (x, y) = viewport.map(p.x.to_f64_lossy(), p.y.to_f64_lossy());
                        format!("{x:.2},{y:.2}")
                    })
                    .collect();
                writeln!(
                    svg,
                    "<polygon class=\"witness-triangle\" points=\"{}\"/>",
                    rendered.join(" ")
                )
                .unwrap();
            }
        }
    }

    // Hull boundary: a polygon when it has area, a polyline when degenerate.
    let hull_rendered: Vec<String> = report
        .hull_vertices
        .iter()
        .map(|p| {
            let (x, y) = viewport.map(p.x.to_f64_lossy(), p.y.to_f64_lossy());
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let hull_tag = if report.hull_vertices.len() >= 3 {
        "polygon"
    } else {
        "polyline"
    };
    writeln!(
        svg,
        "<{hull_tag} class=\"hull\" points=\"{}\"/>",
        hull_rendered.join(" ")
    )
    .unwrap();

    // The points themselves, outer lifts then inner lifts, on top.
    for (k, p) in points.iter().enumerate() {
        let kind = if k < n { "point-l" } else { "point-t" };
        let (cx, cy) = viewport.map(p.x.to_f64_lossy(), p.y.to_f64_lossy());
        writeln!(
            svg,
            "<circle class=\"{kind} {}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4.5\">\
             <title>{} {}</title></circle>",
            class_name(report.classes[k]),
            construction.point_label(k),
            p
        )
        .unwrap();
    }

    svg.push_str("</svg>\n");
    svg
}

pub fn run_plot(input: &Path, svg_path: &Path) -> Result<(), CliError> {
    let inst = read_instance_file(input)?;
    let svg = render_svg(&inst);
    std::fs::write(svg_path, svg).map_err(|err| CliError::Io {
        path: svg_path.display().to_string(),
        message: err.to_string(),
    })
}
