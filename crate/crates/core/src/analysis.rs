//! Event times and summary quantities extracted from a [`Trajectory`].
//!
//! All event times are linearly interpolated between the two recorded samples
//! that bracket the event.

use thiserror::Error;

use crate::integrator::Trajectory;
use crate::model::{classify_outcome, OutcomeClass, State};

pub const DEFAULT_SATURATION_FRACTION: f64 = 0.95;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("saturation fraction must lie in (0, 1] (got {0})")]
    InvalidFraction(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Species {
    /// KN95 masks, `x`.
    Kn95,
    /// Disposable medical masks, `y`.
    Disposable,
}

impl Species {
    fn value(&self, s: &State) -> f64 {
        match self {
            Species::Kn95 => s.x,
            Species::Disposable => s.y,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub t: f64,
    pub value: f64,
}

/// KN95 share `x/(x+y)` at one sample; `None` where `x + y = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharePoint {
    pub t: f64,
    pub share: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioReport {
    pub outcome: OutcomeClass,
    pub crossover_t: Option<f64>,
    pub y_peak: Peak,
    pub saturation_fraction: f64,
    pub saturation_t: Option<f64>,
    pub final_state: State,
    pub share_series: Vec<SharePoint>,
}

impl ScenarioReport {
    /// Final KN95 share, if defined.
    pub fn final_share(&self) -> Option<f64> {
        self.share_series.last().and_then(|p| p.share)
    }
}

/// First time `g` becomes nonnegative. Returns the first sample time if `g`
/// is already nonnegative there.
fn first_upcrossing(samples: &[State], g: impl Fn(&State) -> f64) -> Option<f64> {
    let first = samples.first()?;
    if g(first) >= 0.0 {
        return Some(first.t);
    }
    samples.windows(2).find_map(|w| {
        let (g0, g1) = (g(&w[0]), g(&w[1]));
        (g0 < 0.0 && g1 >= 0.0).then(|| w[0].t + (w[1].t - w[0].t) * (-g0) / (g1 - g0))
    })
}

/// First time the KN95 count reaches the disposable count.
pub fn crossover_time(traj: &Trajectory) -> Option<f64> {
    first_upcrossing(&traj.samples, |s| s.x - s.y)
}

/// Recorded sample maximising the chosen species; earliest wins ties.
pub fn peak(traj: &Trajectory, which: Species) -> Peak {
    let mut best = Peak {
        t: 0.0,
        value: f64::NEG_INFINITY,
    };
    for s in &traj.samples {
        let v = which.value(s);
        if v > best.value {
            best = Peak { t: s.t, value: v };
        }
    }
    if best.value == f64::NEG_INFINITY {
        best.value = 0.0;
    }
    best
}

/// First time `x ≥ fraction·n1`.
pub fn saturation_time(traj: &Trajectory, fraction: f64) -> Result<Option<f64>, AnalysisError> {
    check_fraction(fraction)?;
    let target = fraction * traj.params.n1;
    Ok(first_upcrossing(&traj.samples, |s| s.x - target))
}

pub fn market_share(traj: &Trajectory) -> Vec<SharePoint> {
    traj.samples
        .iter()
        .map(|s| {
            let total = s.x + s.y;
            SharePoint {
                t: s.t,
                share: (total != 0.0).then(|| s.x / total),
            }
        })
        .collect()
}

pub fn analyze(
    traj: &Trajectory,
    saturation_fraction: f64,
) -> Result<ScenarioReport, AnalysisError> {
    Ok(ScenarioReport {
        outcome: classify_outcome(&traj.params),
        crossover_t: crossover_time(traj),
        y_peak: peak(traj, Species::Disposable),
        saturation_fraction,
        saturation_t: saturation_time(traj, saturation_fraction)?,
        final_state: *traj.last(),
        share_series: market_share(traj),
    })
}

fn check_fraction(fraction: f64) -> Result<(), AnalysisError> {
    if fraction > 0.0 && fraction <= 1.0 {
        Ok(())
    } else {
        Err(AnalysisError::InvalidFraction(fraction))
    }
}
