//! Named scenarios and the end-to-end run/compare pipeline.
//!
//! The three built-in situations share the base case (n1 = n2 = 900,
//! s1 = 0.27, s2 = 3.75, initial stock 30/60, RK4 with h = 0.1) and differ
//! only in the KN95 production efficiency `r1` and the horizon.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::analysis::{analyze, AnalysisError, ScenarioReport, DEFAULT_SATURATION_FRACTION};
use crate::integrator::{integrate, IntegrateError, Method, SolverConfig, Trajectory};
use crate::model::{ModelError, ModelParams, State};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioError {
    #[error("scenario name must not be empty")]
    EmptyName,
    #[error("initial state must be finite and nonnegative at t = 0")]
    InvalidInitialState,
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("comparison needs at least 2 scenarios (got {0})")]
    TooFew(usize),
    #[error("duplicate scenario name '{0}'")]
    DuplicateName(String),
    #[error("scenario '{name}': {source}")]
    InScenario {
        name: String,
        #[source]
        source: Box<ScenarioError>,
    },
}

impl ScenarioError {
    /// True when the error comes from the inputs rather than from running the
    /// simulation.
    pub fn is_usage(&self) -> bool {
        match self {
            ScenarioError::Integrate(IntegrateError::NonfiniteState { .. }) => false,
            ScenarioError::InScenario { source, .. } => source.is_usage(),
            _ => true,
        }
    }
}

/// The three built-in industry-capability cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Situation {
    /// Intermediate capability, r1 = 1.
    Situation1,
    /// High capability, r1 = 2.
    Situation2,
    /// Low capability, r1 = 0.5.
    Situation3,
}

impl Situation {
    pub const ALL: [Situation; 3] = [
        Situation::Situation1,
        Situation::Situation2,
        Situation::Situation3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Situation::Situation1 => "situation1",
            Situation::Situation2 => "situation2",
            Situation::Situation3 => "situation3",
        }
    }

    fn r1(&self) -> f64 {
        match self {
            Situation::Situation1 => 1.0,
            Situation::Situation2 => 2.0,
            Situation::Situation3 => 0.5,
        }
    }

    fn t_end(&self) -> f64 {
        match self {
            Situation::Situation1 => 10.0,
            Situation::Situation2 => 6.0,
            Situation::Situation3 => 20.0,
        }
    }
}

impl fmt::Display for Situation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Situation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Situation::ALL
            .into_iter()
            .find(|sit| sit.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown scenario '{s}'; builtin scenarios are: {}",
                    Situation::ALL.map(|s| s.name()).join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams,
    pub initial: State,
    pub solver: SolverConfig,
    pub saturation_fraction: f64,
}

impl Scenario {
    pub fn validate(&self) -> Result<(), ScenarioError> {
        if self.name.trim().is_empty() {
            return Err(ScenarioError::EmptyName);
        }
        self.params.validate()?;
        self.solver.validate()?;
        let s = &self.initial;
        if s.t != 0.0 || !s.is_finite() || s.x < 0.0 || s.y < 0.0 {
            return Err(ScenarioError::InvalidInitialState);
        }
        if !(self.saturation_fraction > 0.0 && self.saturation_fraction <= 1.0) {
            return Err(AnalysisError::InvalidFraction(self.saturation_fraction).into());
        }
        Ok(())
    }
}

pub fn builtin_scenario(which: Situation) -> Scenario {
    Scenario {
        name: which.name().to_string(),
        params: ModelParams {
            r1: which.r1(),
            r2: 3.0,
            n1: 900.0,
            n2: 900.0,
            s1: 0.27,
            s2: 3.75,
        },
        initial: State::new(0.0, 30.0, 60.0),
        solver: SolverConfig {
            method: Method::Rk4,
            h: 0.1,
            t_end: which.t_end(),
            record_stride: 1,
        },
        saturation_fraction: DEFAULT_SATURATION_FRACTION,
    }
}

/// Integrates then analyses one scenario.
pub fn run_scenario(sc: &Scenario) -> Result<(Trajectory, ScenarioReport), ScenarioError> {
    sc.validate()?;
    let traj = integrate(&sc.params, &sc.initial, &sc.solver)?;
    let report = analyze(&traj, sc.saturation_fraction)?;
    Ok((traj, report))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry {
    pub name: String,
    pub trajectory: Trajectory,
    pub report: ScenarioReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// In input order.
    pub entries: Vec<ComparisonEntry>,
    /// Names by ascending saturation time; absent times last, ties by name.
    pub ordering: Vec<String>,
}

impl ComparisonReport {
    pub fn entry(&self, name: &str) -> Option<&ComparisonEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// First scenario in `ordering`, if it saturates at all.
    pub fn fastest_saturation(&self) -> Option<&str> {
        let first = self.ordering.first()?;
        self.entry(first)?
            .report
            .saturation_t
            .map(|_| first.as_str())
    }
}

/// Runs every scenario (concurrently) and orders them by saturation time.
pub fn compare(scs: &[Scenario]) -> Result<ComparisonReport, ScenarioError> {
    if scs.len() < 2 {
        return Err(ScenarioError::TooFew(scs.len()));
    }
    let mut seen = HashSet::new();
    for sc in scs {
        if !seen.insert(sc.name.as_str()) {
            return Err(ScenarioError::DuplicateName(sc.name.clone()));
        }
    }

    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = scs
            .iter()
            .map(|sc| scope.spawn(move || run_scenario(sc)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario worker panicked"))
            .collect()
    });

    let mut entries = Vec::with_capacity(scs.len());
    for (sc, result) in scs.iter().zip(results) {
        let (trajectory, report) = result.map_err(|e| ScenarioError::InScenario {
            name: sc.name.clone(),
            source: Box::new(e),
        })?;
        entries.push(ComparisonEntry {
            name: sc.name.clone(),
            trajectory,
            report,
        });
    }

    let mut order: Vec<&ComparisonEntry> = entries.iter().collect();
    order.sort_by(|a, b| {
        let key = |e: &ComparisonEntry| e.report.saturation_t.unwrap_or(f64::INFINITY);
        key(a).total_cmp(&key(b)).then_with(|| a.name.cmp(&b.name))
    });
    let ordering = order.into_iter().map(|e| e.name.clone()).collect();

    Ok(ComparisonReport { entries, ordering })
}
