//! `key: value` analysis reports.

use crate::analysis::ScenarioReport;
use crate::scenarios::ComparisonReport;

use super::fixed;

fn opt(value: Option<f64>) -> String {
    value.map_or_else(|| "none".to_string(), |v| fixed(v, 6))
}

pub fn render_report(name: &str, report: &ScenarioReport) -> String {
    let fs = &report.final_state;
    let share = report.final_share();
    let lines = [
        ("scenario", name.to_string()),
        ("outcome", report.outcome.label().to_string()),
        ("crossover", opt(report.crossover_t)),
        ("y-peak-t", fixed(report.y_peak.t, 6)),
        ("y-peak", fixed(report.y_peak.value, 6)),
        ("saturation-fraction", fixed(report.saturation_fraction, 6)),
        ("saturation", opt(report.saturation_t)),
        ("final-t", fixed(fs.t, 6)),
        ("final-x", fixed(fs.x, 6)),
        ("final-y", fixed(fs.y, 6)),
        ("final-share-kn95", opt(share)),
        ("final-share-disposable", opt(share.map(|s| 1.0 - s))),
    ];
    lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

pub fn render_comparison(cmp: &ComparisonReport) -> String {
    let mut out = String::new();
    for e in &cmp.entries {
        let r = &e.report;
        out.push_str(&format!(
            "{}: outcome={} crossover={} saturation={} y-peak={} final-share-kn95={}\n",
            e.name,
            r.outcome,
            opt(r.crossover_t),
            opt(r.saturation_t),
            fixed(r.y_peak.value, 6),
            opt(r.final_share()),
        ));
    }
    out.push_str(&format!("ordering: {}\n", cmp.ordering.join(",")));
    out.push_str(&format!(
        "fastest-saturation: {}\n",
        cmp.fastest_saturation().unwrap_or("none")
    ));
    out
}
