//! `compete-sim (simulate|table|analyze|compare)` command-line front end.
//!
//! Exit codes: 0 success, 1 runtime failure (non-finite state, output I/O),
//! 2 usage error (bad flags, unknown scenario, invalid parameters).

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::integrator::Method;
use crate::scenarios::{
    builtin_scenario, compare, run_scenario, Scenario, ScenarioError, Situation,
};

use super::csv::render_csv;
use super::plot::LineChart;
use super::report::{render_comparison, render_report};
use super::scenario_file::parse_scenario;
use super::table::render_table;
use super::write_atomic;

pub const NO_COLOR_ENV: &str = "COMPETE_SIM_NO_COLOR";

#[derive(Debug, Parser)]
#[command(
    name = "compete-sim",
    version,
    about = "KN95 vs disposable mask competition simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integrate one scenario and emit its trajectory.
    Simulate(RunArgs),
    /// Print the time/KN95/disposable table rounded to 3 decimals.
    Table(RunArgs),
    /// Print the outcome class and event times of one scenario.
    Analyze(RunArgs),
    /// Run several scenarios and rank them by saturation time.
    Compare(RunArgs),
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Built-in scenario name (situation1, situation2, situation3).
    #[arg(long = "scenario", value_name = "NAME")]
    scenarios: Vec<String>,
    /// Scenario file in key=value format.
    #[arg(long = "file", value_name = "PATH")]
    files: Vec<PathBuf>,
    /// Step size override.
    #[arg(long, value_name = "F")]
    h: Option<f64>,
    /// Horizon override.
    #[arg(long = "t-end", value_name = "F")]
    t_end: Option<f64>,
    #[arg(long, value_name = "rk4|euler")]
    method: Option<Method>,
    #[arg(long = "saturation-fraction", value_name = "F")]
    saturation_fraction: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output path (written atomically). Defaults to stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Report,
    Svg,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<ScenarioError> for CliError {
    fn from(e: ScenarioError) -> Self {
        if e.is_usage() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Runtime(e.to_string())
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Runtime(format!("cannot write {}: {e}", path.display()))
}

/// True unless styling is disabled or stderr is not a terminal.
pub fn color_enabled() -> bool {
    std::env::var(NO_COLOR_ENV).map_or(true, |v| v != "1") && std::io::stderr().is_terminal()
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };

    let result = match cli.command {
        Command::Simulate(a) => cmd_simulate(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Analyze(a) => cmd_analyze(&a, out),
        Command::Compare(a) => cmd_compare(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let (code, msg) = match e {
                CliError::Usage(m) => (2, m),
                CliError::Runtime(m) => (1, m),
            };
            let prefix = if color {
                "\x1b[31merror:\x1b[0m"
            } else {
                "error:"
            };
            let _ = writeln!(err, "{prefix} {msg}");
            code
        }
    }
}

impl RunArgs {
    /// Scenarios named on the command line, builtins first, with overrides
    /// applied.
    fn resolve(&self) -> Result<Vec<Scenario>, CliError> {
        let mut list = Vec::new();
        for name in &self.scenarios {
            let sit: Situation = name.parse().map_err(CliError::Usage)?;
            list.push(builtin_scenario(sit));
        }
        for path in &self.files {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("scenario");
            let sc = parse_scenario(&text, stem)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            list.push(sc);
        }
        for sc in &mut list {
            if let Some(h) = self.h {
                sc.solver.h = h;
            }
            if let Some(t_end) = self.t_end {
                sc.solver.t_end = t_end;
            }
            if let Some(m) = self.method {
                sc.solver.method = m;
            }
            if let Some(f) = self.saturation_fraction {
                sc.saturation_fraction = f;
            }
            sc.validate()?;
        }
        Ok(list)
    }

    fn single(&self) -> Result<Scenario, CliError> {
        let mut list = self.resolve()?;
        match list.len() {
            1 => Ok(list.remove(0)),
            0 => Err(CliError::Usage(format!(
                "a scenario is required (--scenario NAME or --file PATH); builtin scenarios are: {}",
                Situation::ALL.map(|s| s.name()).join(", ")
            ))),
            n => Err(CliError::Usage(format!("expected one scenario, got {n}"))),
        }
    }

    fn emit(&self, body: &str, out: &mut dyn Write) -> Result<(), CliError> {
        match &self.out {
            Some(path) => write_atomic(path, body.as_bytes()).map_err(|e| io_error(path, e)),
            None => out
                .write_all(body.as_bytes())
                .map_err(|e| CliError::Runtime(format!("cannot write output: {e}"))),
        }
    }
}

fn cmd_simulate(a: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let sc = a.single()?;
    let (traj, report) = run_scenario(&sc)?;
    let body = match a.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Table => render_table(&traj),
        OutputFormat::Csv => render_csv(&traj),
        OutputFormat::Report => render_report(&sc.name, &report),
        OutputFormat::Svg => LineChart::from_trajectory(&traj).to_svg(),
    };
    a.emit(&body, out)
}

fn cmd_table(a: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.format.is_some_and(|f| f != OutputFormat::Table) {
        return Err(CliError::Usage("table only supports --format table".into()));
    }
    let mut sc = if a.scenarios.is_empty() && a.files.is_empty() {
        builtin_scenario(Situation::Situation1)
    } else {
        a.single()?
    };
    sc.solver.t_end = a.t_end.unwrap_or(1.0);
    if let Some(h) = a.h {
        sc.solver.h = h;
    }
    if let Some(m) = a.method {
        sc.solver.method = m;
    }
    let (traj, _) = run_scenario(&sc)?;
    a.emit(&render_table(&traj), out)
}

fn cmd_analyze(a: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.format.is_some_and(|f| f != OutputFormat::Report) {
        return Err(CliError::Usage(
            "analyze only supports --format report".into(),
        ));
    }
    let sc = a.single()?;
    let (_, report) = run_scenario(&sc)?;
    a.emit(&render_report(&sc.name, &report), out)
}

/// `dir/stem_name.ext` for per-scenario outputs of `compare`.
fn suffixed(base: &Path, name: &str, ext: &str) -> PathBuf {
    let stem = base
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("trajectory");
    base.with_file_name(format!("{stem}_{name}.{ext}"))
}

fn cmd_compare(a: &RunArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let list = a.resolve()?;
    if list.len() < 2 {
        return Err(CliError::Usage(format!(
            "compare needs at least 2 scenarios (got {})",
            list.len()
        )));
    }
    let format = a.format.unwrap_or(OutputFormat::Report);
    let cmp = compare(&list)?;
    match format {
        OutputFormat::Report => a.emit(&render_comparison(&cmp), out),
        OutputFormat::Csv | OutputFormat::Svg => {
            let base = a.out.as_ref().ok_or_else(|| {
                CliError::Usage("compare with csv/svg output needs --out PATH".into())
            })?;
            for e in &cmp.entries {
                let (ext, body) = if format == OutputFormat::Csv {
                    ("csv", render_csv(&e.trajectory))
                } else {
                    ("svg", LineChart::from_trajectory(&e.trajectory).to_svg())
                };
                let path = suffixed(base, &e.name, ext);
                write_atomic(&path, body.as_bytes()).map_err(|err| io_error(&path, err))?;
            }
            out.write_all(render_comparison(&cmp).as_bytes())
                .map_err(|e| CliError::Runtime(format!("cannot write output: {e}")))
        }
        OutputFormat::Table => Err(CliError::Usage(
            "compare does not support --format table".into(),
        )),
    }
}
