//! Minimal SVG line-chart emitter.

use std::fmt::Write as _;
use std::io::{self, Write};

use crate::csv::format_value;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

/// One labelled polyline in data coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub opacity: f64,
}

impl Series {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
            opacity: 1.0,
        }
    }

    pub fn from_columns(label: impl Into<String>, xs: &[f64], ys: &[f64]) -> Self {
        Self::new(label, xs.iter().copied().zip(ys.iter().copied()).collect())
    }

    pub fn with_opacity(mut self, opacity: f64) -> Self {
        self.opacity = opacity;
        self
    }
}

/// A single line chart.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgPlot {
    pub width: u32,
    pub height: u32,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<Series>,
    /// Point marks (drawn as circles) in data coordinates.
    pub markers: Vec<(f64, f64)>,
}

impl SvgPlot {
    pub fn new(
        title: impl Into<String>,
        x_label: impl Into<String>,
        y_label: impl Into<String>,
    ) -> Self {
        Self {
            width: 800,
            height: 600,
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            series: Vec::new(),
            markers: Vec::new(),
        }
    }

    pub fn with_series(mut self, series: Series) -> Self {
        self.series.push(series);
        self
    }

    fn validate(&self) -> io::Result<()> {
        let bad = |msg: &str| Err(io::Error::new(io::ErrorKind::InvalidInput, msg.to_string()));
        if self.series.is_empty() {
            return bad("plot needs at least one series");
        }
        let all_finite = self
            .series
            .iter()
            .flat_map(|s| s.points.iter())
            .chain(&self.markers)
            .all(|(x, y)| x.is_finite() && y.is_finite());
        if !all_finite {
            return bad("plot coordinates must be finite");
        }
        if self.width < 300 || self.height < 200 {
            return bad("plot must be at least 300x200 pixels");
        }
        Ok(())
    }

    fn data_range(&self) -> ((f64, f64), (f64, f64)) {
        let pts = self
            .series
            .iter()
            .flat_map(|s| s.points.iter())
            .chain(&self.markers);
        let mut xr = (f64::INFINITY, f64::NEG_INFINITY);
        let mut yr = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in pts {
            xr = (xr.0.min(x), xr.1.max(x));
            yr = (yr.0.min(y), yr.1.max(y));
        }
        (pad_range(xr), pad_range(yr))
    }
}

/// Empty or degenerate ranges are widened, then 5% margin is added each side.
fn pad_range((lo, hi): (f64, f64)) -> (f64, f64) {
    // `!(lo <= hi)` also catches NaN bounds
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    let (lo, hi) = if !(lo <= hi) {
        (0.0, 1.0)
    } else if hi - lo <= 1e-12 * lo.abs().max(hi.abs()) || hi == lo {
        let half = if lo == 0.0 { 1.0 } else { 0.5 * lo.abs() };
        (lo - half, hi + half)
    } else {
        (lo, hi)
    };
    let m = 0.05 * (hi - lo);
    (lo - m, hi + m)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    xr: (f64, f64),
    yr: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        self.x0 + (x - self.xr.0) / (self.xr.1 - self.xr.0) * (self.x1 - self.x0)
    }

    fn py(&self, y: f64) -> f64 {
        self.y1 - (y - self.yr.0) / (self.yr.1 - self.yr.0) * (self.y1 - self.y0)
    }
}

/// Body of one plot, positioned at vertical offset `dy`.
fn render_plot(plot: &SvgPlot, dy: f64, out: &mut String) {
    let (w, h) = (plot.width as f64, plot.height as f64);
    let (xr, yr) = plot.data_range();
    let fr = Frame {
        x0: MARGIN_LEFT,
        x1: w - MARGIN_RIGHT,
        y0: MARGIN_TOP,
        y1: h - MARGIN_BOTTOM,
        xr,
        yr,
    };
    let _ = writeln!(out, r#"<g transform="translate(0,{dy})">"#);
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
        0.5 * (fr.x0 + fr.x1),
        escape(&plot.title)
    );
    let _ = writeln!(
        out,
        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        fr.x0,
        fr.y0,
        fr.x1 - fr.x0,
        fr.y1 - fr.y0
    );

    let _ = writeln!(
        out,
        r#"<g class="ticks" font-family="sans-serif" font-size="11">"#
    );
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let xv = xr.0 + f * (xr.1 - xr.0);
        let yv = yr.0 + f * (yr.1 - yr.0);
        let (px, py) = (fr.px(xv), fr.py(yv));
        let _ = writeln!(
            out,
            r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            fr.y1,
            fr.y1 + 5.0,
            fr.y1 + 18.0,
            format_value(xv, 4)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            fr.x0 - 5.0,
            fr.x0,
            fr.x0 - 8.0,
            py + 4.0,
            format_value(yv, 4)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13">{}</text>"#,
        0.5 * (fr.x0 + fr.x1),
        h - 15.0,
        escape(&plot.x_label)
    );
    let _ = writeln!(
        out,
        r#"<text x="20" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 20 {:.2})">{}</text>"#,
        0.5 * (fr.y0 + fr.y1),
        0.5 * (fr.y0 + fr.y1),
        escape(&plot.y_label)
    );

    for (i, s) in plot.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", fr.px(x), fr.py(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline class="series" fill="none" stroke="{color}" stroke-width="1.5" stroke-opacity="{}" points="{}"/>"#,
            format_value(s.opacity, 3),
            pts.join(" ")
        );
    }
    for &(x, y) in &plot.markers {
        let _ = writeln!(
            out,
            r#"<circle class="marker" cx="{:.2}" cy="{:.2}" r="4" fill="red"/>"#,
            fr.px(x),
            fr.py(y)
        );
    }

    let _ = writeln!(
        out,
        r#"<g class="legend" font-family="sans-serif" font-size="12">"#
    );
    for (i, s) in plot.series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = fr.y0 + 10.0 + 18.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<g class="legend-entry"><line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text></g>"#,
            fr.x1 + 10.0,
            fr.x1 + 30.0,
            fr.x1 + 35.0,
            y + 4.0,
            escape(&s.label)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</g>");
}

/// Renders one or more plots stacked vertically into a standalone document.
pub fn render_panels(plots: &[SvgPlot]) -> io::Result<String> {
    if plots.is_empty() {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "no plots to render",
        ));
    }
    for p in plots {
        p.validate()?;
    }
    let width = plots.iter().map(|p| p.width).max().unwrap_or(800);
    let height: u32 = plots.iter().map(|p| p.height).sum();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let mut dy = 0.0;
    for p in plots {
        render_plot(p, dy, &mut out);
        dy += p.height as f64;
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Writes a single plot; returns bytes written.
pub fn write_svg<W: Write + ?Sized>(plot: &SvgPlot, sink: &mut W) -> io::Result<usize> {
    write_svg_panels(std::slice::from_ref(plot), sink)
}

/// Writes several plots stacked in one document; returns bytes written.
pub fn write_svg_panels<W: Write + ?Sized>(plots: &[SvgPlot], sink: &mut W) -> io::Result<usize> {
    let doc = render_panels(plots)?;
    sink.write_all(doc.as_bytes())?;
    Ok(doc.len())
}
