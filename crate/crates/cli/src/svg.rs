//! Deterministic SVG rendering of confidence regions: fixed 600x600
//! viewport, fixed decimal formatting, no timestamps, so output is stable
//! enough for golden-file comparison.
//!
//! Markers follow the convention: true value as a filled dot, region center
//! as an open circle when every drawn region contains the truth (or when no
//! truth is given), as an open square otherwise. Interval regions draw with
//! a dashed border to set them apart from the square region.

use cauchydisc_core::regions::Region;
use cauchydisc_core::Complex64;

use crate::doc::sig6;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;
const SPAN: f64 = SIZE - 2.0 * MARGIN;

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl Frame {
    fn x(&self, wx: f64) -> f64 {
        MARGIN + (wx - self.x0) * self.scale
    }

    fn y(&self, wy: f64) -> f64 {
        SIZE - MARGIN - (wy - self.y0) * self.scale
    }
}

fn px(v: f64) -> String {
    format!("{v:.2}")
}

fn region_extent(region: &Region) -> (f64, f64, f64, f64) {
    match region {
        Region::Disc(d) => (
            d.center.re - d.radius,
            d.center.re + d.radius,
            d.center.im - d.radius,
            d.center.im + d.radius,
        ),
        Region::Square(s) => (
            s.center.re - s.half_side,
            s.center.re + s.half_side,
            s.center.im - s.half_side,
            s.center.im + s.half_side,
        ),
        Region::Intervals(i) => (i.mu.0, i.mu.1, i.sigma.0, i.sigma.1),
    }
}

fn stroke(region: &Region) -> (&'static str, &'static str) {
    match region {
        Region::Disc(_) => ("#1f77b4", ""),
        Region::Square(_) => ("#d62728", ""),
        Region::Intervals(_) => ("#2ca02c", " stroke-dasharray=\"6 4\""),
    }
}

/// Renders regions around `center`, optionally marking the true parameter.
pub fn render(
    regions: &[Region],
    center: Complex64,
    truth: Option<Complex64>,
    title: &str,
) -> String {
    let mut xmin = center.re;
    let mut xmax = center.re;
    let mut ymin = center.im;
    let mut ymax = center.im;
    let mut grow = |lo_x: f64, hi_x: f64, lo_y: f64, hi_y: f64| {
        xmin = xmin.min(lo_x);
        xmax = xmax.max(hi_x);
        ymin = ymin.min(lo_y);
        ymax = ymax.max(hi_y);
    };
    for region in regions {
        let (a, b, c, d) = region_extent(region);
        grow(a, b, c, d);
    }
    if let Some(t) = truth {
        grow(t.re, t.re, t.im, t.im);
    }
    let cx = (xmin + xmax) / 2.0;
    let cy = (ymin + ymax) / 2.0;
    let mut half = 0.575 * (xmax - xmin).max(ymax - ymin);
    if half <= 0.0 {
        half = 1.0;
    }
    let frame = Frame {
        x0: cx - half,
        y0: cy - half,
        scale: SPAN / (2.0 * half),
    };

    let mut out = String::new();
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n",
    );
    out.push_str("<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"#ffffff\"/>\n");
    out.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#999999\"/>\n",
        px(MARGIN),
        px(MARGIN),
        px(SPAN),
        px(SPAN)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"24\" font-family=\"monospace\" font-size=\"13\">{}</text>\n",
        px(MARGIN),
        title
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\">{}</text>\n",
        px(MARGIN),
        px(SIZE - 18.0),
        sig6(frame.x0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        px(SIZE - MARGIN),
        px(SIZE - 18.0),
        sig6(cx + half)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        px(MARGIN - 4.0),
        px(SIZE - MARGIN),
        sig6(frame.y0)
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        px(MARGIN - 4.0),
        px(MARGIN + 4.0),
        sig6(cy + half)
    ));

    for region in regions {
        let (color, dash) = stroke(region);
        match region {
            Region::Disc(d) => out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                px(frame.x(d.center.re)),
                px(frame.y(d.center.im)),
                px(d.radius * frame.scale),
                color,
                dash
            )),
            Region::Square(s) => out.push_str(&format!(
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                px(frame.x(s.center.re - s.half_side)),
                px(frame.y(s.center.im + s.half_side)),
                px(2.0 * s.half_side * frame.scale),
                px(2.0 * s.half_side * frame.scale),
                color,
                dash
            )),
            Region::Intervals(i) => out.push_str(&format!(
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                px(frame.x(i.mu.0)),
                px(frame.y(i.sigma.1)),
                px((i.mu.1 - i.mu.0) * frame.scale),
                px((i.sigma.1 - i.sigma.0) * frame.scale),
                color,
                dash
            )),
        }
    }

    let covered = truth.map(|t| regions.iter().all(|r| r.contains(t)));
    if let Some(t) = truth {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#000000\"/>\n",
            px(frame.x(t.re)),
            px(frame.y(t.im))
        ));
    }
    match covered {
        Some(false) => out.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
            px(frame.x(center.re) - 5.0),
            px(frame.y(center.im) - 5.0)
        )),
        _ => out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
            px(frame.x(center.re)),
            px(frame.y(center.im))
        )),
    }
    out.push_str("</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cauchydisc_core::regions::{ConfidenceDisc, ConfidenceIntervals, ConfidenceSquare};

    fn disc(cx: f64, cy: f64, r: f64) -> Region {
        Region::Disc(ConfidenceDisc {
            center: Complex64::new(cx, cy),
            radius: r,
            alpha: 0.05,
        })
    }

    #[test]
    fn render_is_deterministic_and_well_formed() {
        let regions = [
            disc(0.1, 1.0, 0.3),
            Region::Square(ConfidenceSquare {
                center: Complex64::new(0.1, 1.0),
                half_side: 0.25,
                alpha: 0.05,
            }),
            Region::Intervals(ConfidenceIntervals {
                mu: (-0.1, 0.3),
                sigma: (0.8, 1.2),
                alpha: 0.05,
            }),
        ];
        let center = Complex64::new(0.1, 1.0);
        let a = render(&regions, center, Some(Complex64::new(0.0, 1.0)), "t");
        let b = render(&regions, center, Some(Complex64::new(0.0, 1.0)), "t");
        assert_eq!(a, b);
        assert!(a.starts_with("<svg "));
        assert!(a.ends_with("</svg>"));
        assert_eq!(a.matches("<circle").count(), 3);
        assert_eq!(a.matches("<rect").count(), 4);
        assert_eq!(a.matches("stroke-dasharray").count(), 1);
    }

    #[test]
    fn truth_outside_every_region_switches_the_center_marker_to_a_square() {
        let regions = [disc(0.0, 1.0, 0.2)];
        let hit = render(
            &regions,
            Complex64::new(0.0, 1.0),
            Some(Complex64::new(0.1, 1.0)),
            "t",
        );
        let miss = render(
            &regions,
            Complex64::new(0.0, 1.0),
            Some(Complex64::new(3.0, 1.0)),
            "t",
        );
        let none = render(&regions, Complex64::new(0.0, 1.0), None, "t");
        assert!(hit.contains("r=\"5\""));
        assert!(!hit.contains("width=\"10\""));
        assert!(miss.contains("width=\"10\""));
        assert!(none.contains("r=\"5\""));
        assert!(!none.contains("r=\"4\""));
    }

    #[test]
    fn zero_size_regions_still_produce_a_finite_viewport() {
        let regions = [disc(2.0, 0.0, 0.0)];
        let svg = render(&regions, Complex64::new(2.0, 0.0), None, "t");
        assert!(!svg.contains("NaN"));
        assert!(!svg.contains("inf"));
        assert!(svg.contains("r=\"0.00\""));
    }
}
