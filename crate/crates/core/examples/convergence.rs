// Self-convergence study: observed order of RK4 and forward Euler at t = 1
// for a range of coarse step sizes.
//
//     cargo run --example convergence

use std::error::Error;
use std::fmt::Write;

use compete_sim::integrator::{convergence_order, Method};
use compete_sim::model::State;
use compete_sim::scenarios::{builtin_scenario, Situation};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let p = builtin_scenario(Situation::Situation1).params;
    let s0 = State::new(0.0, 30.0, 60.0);
    let mut out = String::from("method  h_coarse  order_x  order_y\n");
    for method in [Method::Rk4, Method::Euler] {
        for h in [0.2, 0.1, 0.05] {
            let est = convergence_order(&p, &s0, 1.0, h, method)?;
            writeln!(
                out,
                "{:<7} {:<9} {:7.3}  {:7.3}",
                method.name(),
                h,
                est.x,
                est.y
            )?;
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    print!("{}", run_example()?);
    Ok(())
}
