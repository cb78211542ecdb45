// Parses a key=value scenario description and analyses it. Pass a path to
// use your own file; otherwise an inline weak-competition scenario is used.
//
//     cargo run --example scenario_file -- my.scn

use std::error::Error;

use compete_sim::io::report::render_report;
use compete_sim::io::scenario_file::parse_scenario;
use compete_sim::scenarios::run_scenario;

const INLINE: &str = "\
# counts in units of 10^4 masks
name = weak-competition
s1 = 0.5
s2 = 0.5
t_end = 20
";

pub fn run_with(text: &str, default_name: &str) -> Result<String, Box<dyn Error>> {
    let sc = parse_scenario(text, default_name)?;
    let (_, report) = run_scenario(&sc)?;
    Ok(render_report(&sc.name, &report))
}

pub fn run_example() -> Result<String, Box<dyn Error>> {
    run_with(INLINE, "inline")
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let out = match std::env::args().nth(1) {
        Some(path) => run_with(&std::fs::read_to_string(&path)?, "file")?,
        None => run_example()?,
    };
    print!("{out}");
    Ok(())
}
