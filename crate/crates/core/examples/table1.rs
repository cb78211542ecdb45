// Integrates the base case over one time unit with RK4 (h = 0.1) and prints
// the time / KN95 / disposable table.
//
//     cargo run --example table1

use std::error::Error;

use compete_sim::integrator::integrate;
use compete_sim::io::table::render_table;
use compete_sim::scenarios::{builtin_scenario, Situation};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut sc = builtin_scenario(Situation::Situation1);
    sc.solver.t_end = 1.0;
    let traj = integrate(&sc.params, &sc.initial, &sc.solver)?;
    Ok(render_table(&traj))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
