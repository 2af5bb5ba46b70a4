//! Minimal static SVG line plots, written by hand.
//!
//! Nothing fancy: one plot per file, linear or log10 axes, a fixed palette
//! and a legend. Enough to eyeball energy drift and log-log slope fits
//! without pulling in a plotting stack.

use anyhow::{Context, Result};
use std::fmt::Write as _;
use std::path::Path;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN_L: f64 = 70.0;
const MARGIN_R: f64 = 150.0;
const MARGIN_T: f64 = 40.0;
const MARGIN_B: f64 = 50.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

pub struct PlotSpec {
    pub title: String,
    pub log_x: bool,
    pub log_y: bool,
}

fn map(v: f64, log: bool) -> Option<f64> {
    if log {
        if v > 0.0 {
            Some(v.log10())
        } else {
            None
        }
    } else {
        Some(v)
    }
}

pub fn line_plot(path: &Path, spec: &PlotSpec, series: &[Series]) -> Result<()> {
    // collect the mapped points and the data window
    let mut mapped: Vec<(usize, Vec<(f64, f64)>)> = Vec::new();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for (si, s) in series.iter().enumerate() {
        let pts: Vec<(f64, f64)> = s
            .points
            .iter()
            .filter_map(|&(x, y)| Some((map(x, spec.log_x)?, map(y, spec.log_y)?)))
            .collect();
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        mapped.push((si, pts));
    }
    if !x0.is_finite() {
        // nothing plottable (all points filtered out); emit an empty frame
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if x1 - x0 < 1e-300 {
        x1 = x0 + 1.0;
    }
    if y1 - y0 < 1e-300 {
        y1 = y0 + 1.0;
    }
    let px = |x: f64| MARGIN_L + (x - x0) / (x1 - x0) * (WIDTH - MARGIN_L - MARGIN_R);
    let py = |y: f64| HEIGHT - MARGIN_B - (y - y0) / (y1 - y0) * (HEIGHT - MARGIN_T - MARGIN_B);

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"monospace\" font-size=\"12\">\n"
    );
    let _ = write!(
        svg,
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        (MARGIN_L + WIDTH - MARGIN_R) / 2.0,
        xml_escape(&spec.title)
    );
    // frame and tick labels at the four data corners
    let _ = write!(
        svg,
        "<rect x=\"{MARGIN_L}\" y=\"{MARGIN_T}\" width=\"{}\" height=\"{}\" \
         fill=\"none\" stroke=\"black\"/>\n",
        WIDTH - MARGIN_L - MARGIN_R,
        HEIGHT - MARGIN_T - MARGIN_B
    );
    let fmt_tick = |v: f64, log: bool| {
        if log {
            format!("1e{v:.1}")
        } else {
            format!("{v:.3}")
        }
    };
    let _ = write!(
        svg,
        "<text x=\"{MARGIN_L}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n\
         <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n\
         <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n\
         <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
        HEIGHT - MARGIN_B + 18.0,
        fmt_tick(x0, spec.log_x),
        WIDTH - MARGIN_R,
        HEIGHT - MARGIN_B + 18.0,
        fmt_tick(x1, spec.log_x),
        MARGIN_L - 6.0,
        HEIGHT - MARGIN_B,
        fmt_tick(y0, spec.log_y),
        MARGIN_L - 6.0,
        MARGIN_T + 12.0,
        fmt_tick(y1, spec.log_y),
    );
    for (si, pts) in &mapped {
        if pts.is_empty() {
            continue;
        }
        let color = PALETTE[si % PALETTE.len()];
        let mut d = String::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.2},{:.2} ", if i == 0 { "M" } else { "L" }, px(x), py(y));
        }
        let _ = write!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            d.trim_end()
        );
        let ly = MARGIN_T + 16.0 * (*si as f64 + 1.0);
        let _ = write!(
            svg,
            "<line x1=\"{}\" y1=\"{ly}\" x2=\"{}\" y2=\"{ly}\" stroke=\"{color}\" stroke-width=\"2\"/>\n\
             <text x=\"{}\" y=\"{}\">{}</text>\n",
            WIDTH - MARGIN_R + 10.0,
            WIDTH - MARGIN_R + 34.0,
            WIDTH - MARGIN_R + 40.0,
            ly + 4.0,
            xml_escape(&series[*si].label)
        );
    }
    svg.push_str("</svg>\n");
    std::fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
