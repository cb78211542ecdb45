// Writes SVG line charts of x(t) and y(t) for the three built-in situations.
//
//     cargo run --example plot -- out-dir

use std::error::Error;
use std::path::{Path, PathBuf};

use compete_sim::io::plot::{emit_plot, PlotFormat};
use compete_sim::scenarios::{builtin_scenario, run_scenario, Situation};

pub fn write_charts(dir: &Path) -> Result<Vec<PathBuf>, Box<dyn Error>> {
    let mut written = Vec::new();
    for sit in Situation::ALL {
        let (traj, _) = run_scenario(&builtin_scenario(sit))?;
        let path = dir.join(format!("{sit}.svg"));
        emit_plot(&traj, &path, PlotFormat::Svg)?;
        written.push(path);
    }
    Ok(written)
}

pub fn run_example() -> Result<String, Box<dyn Error>> {
    let dir = tempfile::tempdir()?;
    let files = write_charts(dir.path())?;
    Ok(format!("wrote {} charts\n", files.len()))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    for path in write_charts(&dir)? {
        println!("{}", path.display());
    }
    Ok(())
}
