// Runs the three built-in industry-capability situations side by side and
// ranks them by how fast KN95 output saturates.
//
//     cargo run --example situations

use std::error::Error;
use std::fmt::Write;

use compete_sim::io::report::{render_comparison, render_report};
use compete_sim::scenarios::{builtin_scenario, compare, Situation};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let scenarios = Situation::ALL.map(builtin_scenario);
    let cmp = compare(&scenarios)?;
    let mut out = String::new();
    for entry in &cmp.entries {
        writeln!(
            out,
            "== {} (r1 = {})",
            entry.name, entry.trajectory.params.r1
        )?;
        out.push_str(&render_report(&entry.name, &entry.report));
        writeln!(out)?;
    }
    out.push_str(&render_comparison(&cmp));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
