//! Fixed-step integration of the competition system.
//!
//! Two one-step methods are provided: the classical fourth-order Runge–Kutta
//! scheme (the working method) and forward Euler (a first-order baseline).
//! Both advance the two components together: every RK4 stage evaluates the
//! full vector field at a shared intermediate state.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{vector_field, ModelParams, State};

/// Upper bound on `t_end / h`.
pub const MAX_STEPS: f64 = 1e8;

/// Differences below this relative size are treated as round-off.
const NOISE_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntegrateError {
    #[error("step size must be > 0 (got {0})")]
    NonPositiveStep(f64),
    #[error("t_end must be > 0 (got {0})")]
    NonPositiveEnd(f64),
    #[error("t_end must be ≥ h (t_end = {t_end}, h = {h})")]
    HorizonShorterThanStep { t_end: f64, h: f64 },
    #[error("record stride must be ≥ 1")]
    ZeroStride,
    #[error("step budget exceeded: t_end/h = {ratio} > {MAX_STEPS}")]
    StepBudgetExceeded { ratio: f64 },
    #[error("non-finite state at step {step}: x = {x}, y = {y}")]
    NonfiniteState { step: usize, x: f64, y: f64 },
    #[error("initial state must start at t = 0 with nonnegative finite counts")]
    InvalidInitialState,
    #[error("t_probe = {t_probe} is not a multiple of h/4 = {quarter}")]
    ProbeNotOnGrid { t_probe: f64, quarter: f64 },
    #[error("step-halving differences are at round-off level; use a larger h_coarse")]
    IndistinguishablePrecision,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    #[default]
    Rk4,
    Euler,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Rk4 => "rk4",
            Method::Euler => "euler",
        }
    }

    /// Advances `s` by one step of length `h`.
    pub fn step(&self, p: &ModelParams, s: &State, h: f64) -> State {
        match self {
            Method::Rk4 => rk4_step(p, s, h),
            Method::Euler => euler_step(p, s, h),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rk4" => Ok(Method::Rk4),
            "euler" => Ok(Method::Euler),
            other => Err(format!("unknown method '{other}' (expected rk4 or euler)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub method: Method,
    /// Step size in time units.
    pub h: f64,
    pub t_end: f64,
    /// Record every k-th step. The final state is always recorded.
    pub record_stride: usize,
}

impl SolverConfig {
    pub fn new(
        method: Method,
        h: f64,
        t_end: f64,
        record_stride: usize,
    ) -> Result<Self, IntegrateError> {
        let cfg = Self {
            method,
            h,
            t_end,
            record_stride,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), IntegrateError> {
        if !(self.h.is_finite() && self.h > 0.0) {
            return Err(IntegrateError::NonPositiveStep(self.h));
        }
        if !(self.t_end.is_finite() && self.t_end > 0.0) {
            return Err(IntegrateError::NonPositiveEnd(self.t_end));
        }
        if self.t_end < self.h {
            return Err(IntegrateError::HorizonShorterThanStep {
                t_end: self.t_end,
                h: self.h,
            });
        }
        if self.record_stride == 0 {
            return Err(IntegrateError::ZeroStride);
        }
        let ratio = self.t_end / self.h;
        if ratio > MAX_STEPS {
            return Err(IntegrateError::StepBudgetExceeded { ratio });
        }
        Ok(())
    }

    /// Number of full steps and the length of a trailing partial step (0 if
    /// `t_end` is a multiple of `h`).
    fn step_plan(&self) -> (usize, f64) {
        let ratio = self.t_end / self.h;
        let nearest = ratio.round();
        if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
            (nearest as usize, 0.0)
        } else {
            let full = ratio.floor();
            (full as usize, self.t_end - full * self.h)
        }
    }

    /// Total number of steps `integrate` will take.
    pub fn step_count(&self) -> usize {
        let (full, partial) = self.step_plan();
        full + usize::from(partial > 0.0)
    }
}

/// Recorded output of one integration run.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub params: ModelParams,
    pub config: SolverConfig,
    /// Strictly increasing in `t`, starting at `t = 0`.
    pub samples: Vec<State>,
}

impl Trajectory {
    pub fn first(&self) -> &State {
        &self.samples[0]
    }

    pub fn last(&self) -> &State {
        self.samples.last().expect("trajectory is never empty")
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sample recorded at time `t` (within 1e-9), if any.
    pub fn at(&self, t: f64) -> Option<&State> {
        self.samples.iter().find(|s| (s.t - t).abs() < 1e-9)
    }
}

/// Forward Euler: `u + h·f(u)`.
pub fn euler_step(p: &ModelParams, s: &State, h: f64) -> State {
    let k = vector_field(p, s);
    State::new(s.t + h, s.x + h * k.dx, s.y + h * k.dy)
}

/// Classical RK4 on the coupled system.
pub fn rk4_step(p: &ModelParams, s: &State, h: f64) -> State {
    let half = 0.5 * h;
    let k1 = vector_field(p, s);
    let k2 = vector_field(
        p,
        &State::new(s.t + half, s.x + half * k1.dx, s.y + half * k1.dy),
    );
    let k3 = vector_field(
        p,
        &State::new(s.t + half, s.x + half * k2.dx, s.y + half * k2.dy),
    );
    let k4 = vector_field(p, &State::new(s.t + h, s.x + h * k3.dx, s.y + h * k3.dy));
    let w = h / 6.0;
    State::new(
        s.t + h,
        s.x + w * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
        s.y + w * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy),
    )
}

/// Integrates from `s0` (which must sit at `t = 0`) to `cfg.t_end`.
///
/// Takes `⌈t_end/h⌉` steps. When `t_end` is not a multiple of `h` the last
/// step is shortened to land on `t_end`. Times are computed as `i·h` rather
/// than accumulated. Negative values are reported as-is.
pub fn integrate(
    p: &ModelParams,
    s0: &State,
    cfg: &SolverConfig,
) -> Result<Trajectory, IntegrateError> {
    cfg.validate()?;
    if s0.t != 0.0 || !s0.is_finite() || s0.x < 0.0 || s0.y < 0.0 {
        return Err(IntegrateError::InvalidInitialState);
    }
    let (full, partial) = cfg.step_plan();
    let total = full + usize::from(partial > 0.0);
    let mut samples = Vec::with_capacity(total / cfg.record_stride + 2);
    samples.push(*s0);

    let mut state = *s0;
    for i in 1..=total {
        let (h, t) = if i <= full {
            (cfg.h, i as f64 * cfg.h)
        } else {
            (partial, cfg.t_end)
        };
        state = cfg.method.step(p, &state, h);
        state.t = t;
        if !state.is_finite() {
            return Err(IntegrateError::NonfiniteState {
                step: i,
                x: state.x,
                y: state.y,
            });
        }
        if i % cfg.record_stride == 0 || i == total {
            samples.push(state);
        }
    }

    Ok(Trajectory {
        params: *p,
        config: *cfg,
        samples,
    })
}

/// Per-component observed order of accuracy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderEstimate {
    pub x: f64,
    pub y: f64,
}

impl OrderEstimate {
    pub fn min(&self) -> f64 {
        self.x.min(self.y)
    }

    pub fn max(&self) -> f64 {
        self.x.max(self.y)
    }
}

/// Self-convergence order estimate at `t_probe`.
///
/// Runs the method with `h`, `h/2` and `h/4` and returns
/// `log2(|u(h) − u(h/2)| / |u(h/2) − u(h/4)|)` for each component.
pub fn convergence_order(
    p: &ModelParams,
    s0: &State,
    t_probe: f64,
    h_coarse: f64,
    method: Method,
) -> Result<OrderEstimate, IntegrateError> {
    let quarter = h_coarse / 4.0;
    let ratio = t_probe / quarter;
    if !ratio.is_finite() || (ratio - ratio.round()).abs() > 1e-9 * ratio.abs().max(1.0) {
        return Err(IntegrateError::ProbeNotOnGrid { t_probe, quarter });
    }

    let end_state = |h: f64| -> Result<State, IntegrateError> {
        let cfg = SolverConfig::new(method, h, t_probe, usize::MAX)?;
        Ok(*integrate(p, s0, &cfg)?.last())
    };
    let coarse = end_state(h_coarse)?;
    let mid = end_state(h_coarse / 2.0)?;
    let fine = end_state(quarter)?;

    let order = |a: f64, b: f64, c: f64| -> Result<f64, IntegrateError> {
        let floor = NOISE_FLOOR * c.abs().max(1.0);
        let (d1, d2) = ((a - b).abs(), (b - c).abs());
        if d1 < floor || d2 < floor {
            return Err(IntegrateError::IndistinguishablePrecision);
        }
        Ok((d1 / d2).log2())
    };
    Ok(OrderEstimate {
        x: order(coarse.x, mid.x, fine.x)?,
        y: order(coarse.y, mid.y, fine.y)?,
    })
}
