//! Static SVG line chart of the two mask counts over time.
//!
//! Output is a pure function of the trajectory: coordinates are printed with
//! fixed precision and nothing depends on locale, time or randomness.

use std::fmt::Write as _;
use std::path::Path;

use crate::integrator::Trajectory;

use super::csv::render_csv;
use super::write_atomic;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 60.0;
const TICKS: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChartSeries {
    pub label: &'static str,
    pub color: &'static str,
    pub points: Vec<(f64, f64)>,
}

impl ChartSeries {
    /// Point with the largest value (earliest on ties).
    pub fn max(&self) -> (f64, f64) {
        self.points
            .iter()
            .copied()
            .fold((f64::NAN, f64::NEG_INFINITY), |best, p| {
                if p.1 > best.1 {
                    p
                } else {
                    best
                }
            })
    }

    /// Point with the smallest value (earliest on ties).
    pub fn min(&self) -> (f64, f64) {
        self.points
            .iter()
            .copied()
            .fold((f64::NAN, f64::INFINITY), |best, p| {
                if p.1 < best.1 {
                    p
                } else {
                    best
                }
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineChart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<ChartSeries>,
}

impl LineChart {
    pub fn from_trajectory(traj: &Trajectory) -> Self {
        let kn95 = traj.samples.iter().map(|s| (s.t, s.x)).collect();
        let disposable = traj.samples.iter().map(|s| (s.t, s.y)).collect();
        Self {
            title: "Evolution of the number of two types of masks".into(),
            x_label: "time".into(),
            y_label: "count (10^4 masks)".into(),
            series: vec![
                ChartSeries {
                    label: "KN95 (x)",
                    color: "#d62728",
                    points: kn95,
                },
                ChartSeries {
                    label: "disposable (y)",
                    color: "#1f77b4",
                    points: disposable,
                },
            ],
        }
    }

    fn bounds(&self) -> (f64, f64, f64, f64) {
        let all = self.series.iter().flat_map(|s| s.points.iter());
        let (mut t0, mut t1, mut v0, mut v1) =
            (f64::INFINITY, f64::NEG_INFINITY, 0f64, f64::NEG_INFINITY);
        for &(t, v) in all {
            t0 = t0.min(t);
            t1 = t1.max(t);
            v0 = v0.min(v);
            v1 = v1.max(v);
        }
        if !t0.is_finite() {
            (t0, t1) = (0.0, 1.0);
        }
        if t1 <= t0 {
            t1 = t0 + 1.0;
        }
        if v1.is_nan() || v1 <= v0 {
            v1 = v0 + 1.0;
        }
        let step = nice_step((v1 - v0) / TICKS);
        (
            t0,
            t1,
            (v0 / step).floor() * step,
            (v1 / step).ceil() * step,
        )
    }

    pub fn to_svg(&self) -> String {
        let (t0, t1, v0, v1) = self.bounds();
        let pw = WIDTH - LEFT - RIGHT;
        let ph = HEIGHT - TOP - BOTTOM;
        let px = |t: f64| LEFT + (t - t0) / (t1 - t0) * pw;
        let py = |v: f64| TOP + ph - (v - v0) / (v1 - v0) * ph;

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(
            s,
            r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="28" text-anchor="middle" font-size="15">{}</text>"#,
            LEFT + pw / 2.0,
            escape(&self.title)
        );

        // grid and tick labels
        let t_step = nice_step((t1 - t0) / TICKS);
        let v_step = nice_step((v1 - v0) / TICKS);
        for (i, v) in ticks(v0, v1, v_step).into_iter().enumerate() {
            let y = py(v);
            let stroke = if i == 0 { "#000" } else { "#ddd" };
            let _ = writeln!(
                s,
                r#"<line x1="{LEFT:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{stroke}"/>"#,
                LEFT + pw
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 6.0,
                y + 4.0,
                tick_label(v, v_step)
            );
        }
        for (i, t) in ticks(t0, t1, t_step).into_iter().enumerate() {
            let x = px(t);
            let stroke = if i == 0 { "#000" } else { "#ddd" };
            let _ = writeln!(
                s,
                r#"<line x1="{x:.2}" y1="{TOP:.2}" x2="{x:.2}" y2="{:.2}" stroke="{stroke}"/>"#,
                TOP + ph
            );
            let _ = writeln!(
                s,
                r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                TOP + ph + 18.0,
                tick_label(t, t_step)
            );
        }
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + pw / 2.0,
            HEIGHT - 16.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            s,
            r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
            TOP + ph / 2.0,
            TOP + ph / 2.0,
            escape(&self.y_label)
        );

        for (i, series) in self.series.iter().enumerate() {
            let pts: Vec<String> = series
                .points
                .iter()
                .map(|&(t, v)| format!("{:.2},{:.2}", px(t), py(v)))
                .collect();
            if series.points.len() == 1 {
                let (t, v) = series.points[0];
                let _ = writeln!(
                    s,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="{}"/>"#,
                    px(t),
                    py(v),
                    series.color
                );
            } else {
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>"#,
                    series.color,
                    pts.join(" ")
                );
            }
            // legend
            let ly = TOP + 10.0 + 20.0 * i as f64;
            let lx = LEFT + pw + 16.0;
            let _ = writeln!(
                s,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{}" stroke-width="2"/>"#,
                lx + 24.0,
                series.color
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
                lx + 30.0,
                ly + 4.0,
                escape(series.label)
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

fn nice_step(raw: f64) -> f64 {
    if !raw.is_finite() || raw <= 0.0 {
        return 1.0;
    }
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let factor = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    };
    factor * mag
}

fn ticks(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let first = (lo / step).ceil() as i64;
    let last = (hi / step + 1e-9).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn tick_label(v: f64, step: f64) -> String {
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    super::fixed(v, decimals)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Writes the chart (SVG) or plot-ready columns (CSV) to `path`.
pub fn emit_plot(traj: &Trajectory, path: &Path, format: PlotFormat) -> std::io::Result<()> {
    let body = match format {
        PlotFormat::Svg => LineChart::from_trajectory(traj).to_svg(),
        PlotFormat::Csv => render_csv(traj),
    };
    write_atomic(path, body.as_bytes())
}
