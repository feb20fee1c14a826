//! Minimal SVG emission for complex-plane curves: one polyline per curve,
//! optional axes, no external dependencies, no timestamps. Output is
//! deterministic for a fixed spec.

use num_complex::Complex64;

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// A labelled polyline in the complex plane.
#[derive(Debug, Clone)]
pub struct Curve {
    pub label: String,
    pub points: Vec<Complex64>,
}

/// Plot layout: curves, pixel dimensions, stroke width. The view box is
/// computed from the data with a 5% margin on each side.
#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub curves: Vec<Curve>,
    pub width: u32,
    pub height: u32,
    pub stroke_width_px: f64,
}

impl PlotSpec {
    pub fn new(curves: Vec<Curve>) -> Self {
        PlotSpec { curves, width: 640, height: 640, stroke_width_px: 1.5 }
    }
}

struct Frame {
    u0: f64,
    v0: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    // y axis flipped so the complex plane reads conventionally
    fn map(&self, w: Complex64) -> (f64, f64) {
        (
            (w.re - self.u0) * self.scale,
            self.height - (w.im - self.v0) * self.scale,
        )
    }
}

/// Renders the spec as a standalone SVG document (svg, polyline, line and
/// text elements only).
pub fn emit_svg(spec: &PlotSpec) -> String {
    let pts: Vec<Complex64> = spec.curves.iter().flat_map(|c| c.points.iter().copied()).collect();
    let (mut umin, mut umax, mut vmin, mut vmax) = (-1.0f64, 1.0f64, -1.0f64, 1.0f64);
    if !pts.is_empty() {
        umin = pts.iter().map(|p| p.re).fold(f64::INFINITY, f64::min);
        umax = pts.iter().map(|p| p.re).fold(f64::NEG_INFINITY, f64::max);
        vmin = pts.iter().map(|p| p.im).fold(f64::INFINITY, f64::min);
        vmax = pts.iter().map(|p| p.im).fold(f64::NEG_INFINITY, f64::max);
    }
    // 5% margin, guarding against degenerate extents
    let du = (umax - umin).max(1e-9);
    let dv = (vmax - vmin).max(1e-9);
    umin -= 0.05 * du;
    umax += 0.05 * du;
    vmin -= 0.05 * dv;
    vmax += 0.05 * dv;

    let width = spec.width as f64;
    let height = spec.height as f64;
    // equal data scale on both axes, centered
    let scale = (width / (umax - umin)).min(height / (vmax - vmin));
    let frame = Frame {
        u0: (umin + umax) / 2.0 - width / (2.0 * scale),
        v0: (vmin + vmax) / 2.0 - height / (2.0 * scale),
        scale,
        height,
    };

    let mut doc = String::new();
    doc.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        spec.width, spec.height, spec.width, spec.height
    ));

    // axes, where the origin lines fall inside the frame
    let (x0, y0) = frame.map(Complex64::new(0.0, 0.0));
    if x0 >= 0.0 && x0 <= width {
        doc.push_str(&format!(
            "  <line x1=\"{:.3}\" y1=\"0\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            x0, x0, height
        ));
    }
    if y0 >= 0.0 && y0 <= height {
        doc.push_str(&format!(
            "  <line x1=\"0\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n",
            y0, width, y0
        ));
    }

    for (i, curve) in spec.curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut coords = String::new();
        for (j, &p) in curve.points.iter().enumerate() {
            let (x, y) = frame.map(p);
            if j > 0 {
                coords.push(' ');
            }
            coords.push_str(&format!("{x:.3},{y:.3}"));
        }
        doc.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.3}\"/>\n",
            coords, color, spec.stroke_width_px
        ));
        if let Some(&p) = curve.points.first() {
            let (x, y) = frame.map(p);
            doc.push_str(&format!(
                "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\" fill=\"{}\">{}</text>\n",
                x + 4.0,
                y - 4.0,
                color,
                xml_escape(&curve.label)
            ));
        }
    }

    doc.push_str("</svg>\n");
    doc
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_plot_is_valid_svg_with_axes() {
        let svg = emit_svg(&PlotSpec::new(vec![]));
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line").count(), 2);
        assert!(!svg.contains("<polyline"));
    }

    #[test]
    fn output_is_deterministic() {
        let curve = Curve {
            label: "loop".into(),
            points: (0..64)
                .map(|k| {
                    Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / 64.0)
                })
                .collect(),
        };
        let spec = PlotSpec::new(vec![curve]);
        assert_eq!(emit_svg(&spec), emit_svg(&spec));
    }

    #[test]
    fn labels_are_escaped() {
        let spec = PlotSpec::new(vec![Curve {
            label: "a<b&c".into(),
            points: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 1.0)],
        }]);
        let svg = emit_svg(&spec);
        assert!(svg.contains("a&lt;b&amp;c"));
    }
}
