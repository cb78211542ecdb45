// Lists the equilibria and the predicted competition outcome for a few
// consumption-magnification pairs, then checks the prediction by integrating
// to a late time.
//
//     cargo run --example equilibria

use std::error::Error;
use std::fmt::Write;

use compete_sim::integrator::{integrate, Method, SolverConfig};
use compete_sim::model::{classify_outcome, equilibria, ModelError, ModelParams, State};

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let mut out = String::new();
    let cases = [
        (0.27, 3.75),
        (3.75, 0.27),
        (0.5, 0.5),
        (2.0, 3.0),
        (2.0, 0.5),
    ];
    for (s1, s2) in cases {
        let p = ModelParams::new(1.0, 3.0, 900.0, 900.0, s1, s2)?;
        writeln!(out, "s1 = {s1}, s2 = {s2}: {}", classify_outcome(&p))?;
        let points = match equilibria(&p) {
            Ok(points) => points,
            Err(ModelError::DegenerateParameters { boundary, .. }) => {
                writeln!(out, "  interior system singular (s1·s2 = 1)")?;
                boundary
            }
            Err(e) => return Err(e.into()),
        };
        for e in &points {
            writeln!(
                out,
                "  {:<16} ({:8.3}, {:8.3})  residual {:.1e}",
                e.kind.to_string(),
                e.x_star,
                e.y_star,
                e.residual(&p)
            )?;
        }
        let cfg = SolverConfig::new(Method::Rk4, 0.05, 200.0, usize::MAX)?;
        for start in [State::new(0.0, 30.0, 60.0), State::new(0.0, 600.0, 20.0)] {
            let end = *integrate(&p, &start, &cfg)?.last();
            writeln!(
                out,
                "  from ({:.0}, {:.0}) -> ({:.3}, {:.3}) at t = 200",
                start.x, start.y, end.x, end.y
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
