//! Minimal self-contained SVG line charts.
//!
//! The plots are documentation artifacts, not the acceptance mechanism,
//! so this sticks to what a spectrum needs: a fixed 960×540 viewport,
//! linear axes with ticks, optional shaded x-bands (stop bands), and a
//! handful of polyline series with a legend. Output is deterministic:
//! coordinates are formatted with fixed precision.

use std::fmt::Write;

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 540.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 24.0;
const BOTTOM: f64 = 56.0;

/// One polyline with its legend entry.
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub dashed: bool,
    pub points: Vec<(f64, f64)>,
}

/// A complete chart description.
pub struct Chart {
    pub x_label: String,
    pub y_label: String,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    /// x-intervals to shade behind the data (stop bands).
    pub shaded: Vec<(f64, f64)>,
    pub series: Vec<Series>,
}

impl Chart {
    pub fn render(&self) -> String {
        let plot_w = WIDTH - LEFT - RIGHT;
        let plot_h = HEIGHT - TOP - BOTTOM;
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        let px = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
        let py = |y: f64| TOP + plot_h - (y.clamp(y0, y1) - y0) / (y1 - y0) * plot_h;

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r##"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="system-ui, sans-serif">"##
        );
        let _ = writeln!(svg, r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##);

        for &(lo, hi) in &self.shaded {
            let (a, b) = (px(lo.max(x0)), px(hi.min(x1)));
            if b > a {
                let _ = writeln!(
                    svg,
                    r##"<rect x="{:.2}" y="{TOP}" width="{:.2}" height="{plot_h}" fill="#dbe4f0"/>"##,
                    a,
                    b - a
                );
            }
        }

        // Grid, axes, ticks.
        for i in 0..=5 {
            let fx = x0 + (x1 - x0) * i as f64 / 5.0;
            let fy = y0 + (y1 - y0) * i as f64 / 5.0;
            let gx = px(fx);
            let gy = py(fy);
            let _ = writeln!(
                svg,
                r##"<line x1="{gx:.2}" y1="{TOP}" x2="{gx:.2}" y2="{:.2}" stroke="#e4e4e4"/>"##,
                TOP + plot_h
            );
            let _ = writeln!(
                svg,
                r##"<line x1="{LEFT}" y1="{gy:.2}" x2="{:.2}" y2="{gy:.2}" stroke="#e4e4e4"/>"##,
                LEFT + plot_w
            );
            let _ = writeln!(
                svg,
                r##"<text x="{gx:.2}" y="{:.2}" font-size="12" fill="#333" text-anchor="middle">{fx:.2}</text>"##,
                TOP + plot_h + 18.0
            );
            let _ = writeln!(
                svg,
                r##"<text x="{:.2}" y="{:.2}" font-size="12" fill="#333" text-anchor="end">{fy:.2}</text>"##,
                LEFT - 8.0,
                gy + 4.0
            );
        }
        let _ = writeln!(
            svg,
            r##"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#333"/>"##
        );
        let _ = writeln!(
            svg,
            r##"<text x="{:.2}" y="{:.2}" font-size="14" fill="#111" text-anchor="middle">{}</text>"##,
            LEFT + plot_w / 2.0,
            HEIGHT - 12.0,
            self.x_label
        );
        let _ = writeln!(
            svg,
            r##"<text x="18" y="{:.2}" font-size="14" fill="#111" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"##,
            TOP + plot_h / 2.0,
            TOP + plot_h / 2.0,
            self.y_label
        );

        for series in &self.series {
            let mut path = String::new();
            for (i, &(x, y)) in series.points.iter().filter(|(x, y)| x.is_finite() && y.is_finite()).enumerate() {
                let _ = write!(path, "{}{:.2},{:.2} ", if i == 0 { "M" } else { "L" }, px(x), py(y));
            }
            let dash = if series.dashed { r##" stroke-dasharray="7 4""## } else { "" };
            let _ = writeln!(
                svg,
                r##"<path d="{}" fill="none" stroke="{}" stroke-width="1.6" stroke-linejoin="round"{dash}/>"##,
                path.trim_end(),
                series.color
            );
        }

        // Legend, top-right, inside the plot frame.
        let legend_x = LEFT + plot_w - 220.0;
        let legend_y = TOP + 12.0;
        let _ = writeln!(
            svg,
            r##"<rect x="{legend_x:.2}" y="{legend_y:.2}" width="208" height="{}" fill="#ffffff" stroke="#ccc"/>"##,
            10 + 20 * self.series.len()
        );
        for (i, series) in self.series.iter().enumerate() {
            let row_y = legend_y + 18.0 + 20.0 * i as f64;
            let dash = if series.dashed { r##" stroke-dasharray="7 4""## } else { "" };
            let _ = writeln!(
                svg,
                r##"<line x1="{:.2}" y1="{row_y:.2}" x2="{:.2}" y2="{row_y:.2}" stroke="{}" stroke-width="1.6"{dash}/>"##,
                legend_x + 10.0,
                legend_x + 40.0,
                series.color
            );
            let _ = writeln!(
                svg,
                r##"<text x="{:.2}" y="{:.2}" font-size="12" fill="#333">{}</text>"##,
                legend_x + 48.0,
                row_y + 4.0,
                series.label
            );
        }

        svg.push_str("</svg>\n");
        svg
    }
}
