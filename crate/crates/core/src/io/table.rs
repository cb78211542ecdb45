//! Pipe-separated table with counts rounded to 3 decimals.

use crate::integrator::Trajectory;

use super::fixed;

pub const TABLE_HEADER: &str = "Evolution Time | Number of KN95 | Number of disposable masks";

/// Fewest decimals (at least one) that print every sample time exactly.
fn time_decimals(traj: &Trajectory) -> usize {
    (1..=6)
        .find(|&d| {
            let scale = 10f64.powi(d as i32);
            traj.samples
                .iter()
                .all(|s| ((s.t * scale).round() - s.t * scale).abs() < 1e-6)
        })
        .unwrap_or(6)
}

pub fn render_table(traj: &Trajectory) -> String {
    let td = time_decimals(traj);
    let mut out = String::with_capacity(64 * (traj.len() + 1));
    out.push_str(TABLE_HEADER);
    out.push('\n');
    for s in &traj.samples {
        out.push_str(&format!(
            "{} | {} | {}\n",
            fixed(s.t, td),
            fixed(s.x, 3),
            fixed(s.y, 3)
        ));
    }
    out
}
