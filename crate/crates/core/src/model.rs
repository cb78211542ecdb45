//! Two-species Lotka–Volterra competition system.
//!
//! `x` is the KN95 stock and `y` the disposable-mask stock, both in units of
//! 10⁴ masks. The dynamics are
//!
//! ```text
//! dx/dt = r1·x·(1 − x/n1 − s1·y/n2)
//! dy/dt = r2·y·(1 − y/n2 − s2·x/n1)
//! ```
//!
//! The system is autonomous: `State::t` is carried for reporting only.

use std::fmt;

use thiserror::Error;

/// Residual bound for fixed points, relative to `max(1, r1·n1, r2·n2)`.
pub const FIXED_POINT_TOLERANCE: f64 = 1e-12;

/// Distance from 1 below which `s1·s2` (or `s1`, `s2`) counts as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// `s1·s2 = 1`: the interior equilibrium system is singular. The boundary
    /// equilibria are still available.
    #[error("degenerate parameters: s1·s2 = {product} is 1 within tolerance")]
    DegenerateParameters {
        product: f64,
        boundary: Vec<Equilibrium>,
    },
}

/// Tolerances used by the equilibrium and classification routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub fixed_point: f64,
    pub degeneracy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            fixed_point: FIXED_POINT_TOLERANCE,
            degeneracy: DEGENERACY_TOLERANCE,
        }
    }
}

/// The six competition coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Production efficiency of x (KN95), per unit time.
    pub r1: f64,
    /// Production efficiency of y (disposable), per unit time.
    pub r2: f64,
    /// Carrying capacity of x, 10⁴ masks.
    pub n1: f64,
    /// Carrying capacity of y, 10⁴ masks.
    pub n2: f64,
    /// Consumption magnification of x relative to y.
    pub s1: f64,
    /// Consumption magnification of y relative to x.
    pub s2: f64,
}

impl ModelParams {
    /// Builds a validated parameter set.
    pub fn new(r1: f64, r2: f64, n1: f64, n2: f64, s1: f64, s2: f64) -> Result<Self, ModelError> {
        let p = Self {
            r1,
            r2,
            n1,
            n2,
            s1,
            s2,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        let positive = [
            ("r1", self.r1),
            ("r2", self.r2),
            ("n1", self.n1),
            ("n2", self.n2),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(ModelError::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite and > 0",
                });
            }
        }
        for (name, value) in [("s1", self.s1), ("s2", self.s2)] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(ModelError::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite and >= 0",
                });
            }
        }
        Ok(())
    }

    /// Scale used for fixed-point residual checks.
    pub fn rate_scale(&self) -> f64 {
        1f64.max(self.r1 * self.n1).max(self.r2 * self.n2)
    }
}

/// A point `(t, x, y)` of the system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl State {
    pub const fn new(t: f64, x: f64, y: f64) -> Self {
        Self { t, x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite()
    }
}

/// Instantaneous rates `(dx/dt, dy/dt)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    pub dx: f64,
    pub dy: f64,
}

impl Rates {
    pub fn norm(&self) -> f64 {
        self.dx.hypot(self.dy)
    }
}

/// Evaluates the competition vector field at `s`. `s.t` is ignored.
pub fn vector_field(p: &ModelParams, s: &State) -> Rates {
    let u = s.x / p.n1;
    let v = s.y / p.n2;
    Rates {
        dx: p.r1 * s.x * (1.0 - u - p.s1 * v),
        dy: p.r2 * s.y * (1.0 - v - p.s2 * u),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquilibriumKind {
    ExtinctionBoth,
    XOnly,
    YOnly,
    Interior,
}

impl fmt::Display for EquilibriumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExtinctionBoth => "extinction-both",
            Self::XOnly => "x-only",
            Self::YOnly => "y-only",
            Self::Interior => "interior",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium {
    pub x_star: f64,
    pub y_star: f64,
    pub kind: EquilibriumKind,
}

impl Equilibrium {
    /// Magnitude of the vector field at this point.
    pub fn residual(&self, p: &ModelParams) -> f64 {
        vector_field(p, &State::new(0.0, self.x_star, self.y_star)).norm()
    }
}

/// All equilibria of the system, using the default tolerances.
///
/// The three boundary points are always present. The interior point is
/// included only when both of its coordinates are strictly positive.
pub fn equilibria(p: &ModelParams) -> Result<Vec<Equilibrium>, ModelError> {
    equilibria_with(p, &Tolerances::default())
}

pub fn equilibria_with(p: &ModelParams, tol: &Tolerances) -> Result<Vec<Equilibrium>, ModelError> {
    p.validate()?;
    let mut points = vec![
        Equilibrium {
            x_star: 0.0,
            y_star: 0.0,
            kind: EquilibriumKind::ExtinctionBoth,
        },
        Equilibrium {
            x_star: p.n1,
            y_star: 0.0,
            kind: EquilibriumKind::XOnly,
        },
        Equilibrium {
            x_star: 0.0,
            y_star: p.n2,
            kind: EquilibriumKind::YOnly,
        },
    ];

    let det = 1.0 - p.s1 * p.s2;
    if det.abs() < tol.degeneracy {
        return Err(ModelError::DegenerateParameters {
            product: p.s1 * p.s2,
            boundary: points,
        });
    }
    // Nullcline intersection in scaled coordinates u = x/n1, v = y/n2:
    //   u + s1·v = 1,  s2·u + v = 1
    let u = (1.0 - p.s1) / det;
    let v = (1.0 - p.s2) / det;
    if u > 0.0 && v > 0.0 {
        points.push(Equilibrium {
            x_star: u * p.n1,
            y_star: v * p.n2,
            kind: EquilibriumKind::Interior,
        });
    }
    Ok(points)
}

/// Long-run outcome of the competition, determined by `(s1, s2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeClass {
    XExcludesY,
    YExcludesX,
    StableCoexistence,
    Bistable,
    Degenerate,
}

impl OutcomeClass {
    pub fn label(&self) -> &'static str {
        match self {
            Self::XExcludesY => "x-excludes-y",
            Self::YExcludesX => "y-excludes-x",
            Self::StableCoexistence => "stable-coexistence",
            Self::Bistable => "bistable",
            Self::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_outcome(p: &ModelParams) -> OutcomeClass {
    classify_outcome_with(p, &Tolerances::default())
}

pub fn classify_outcome_with(p: &ModelParams, tol: &Tolerances) -> OutcomeClass {
    if (p.s1 - 1.0).abs() < tol.degeneracy || (p.s2 - 1.0).abs() < tol.degeneracy {
        return OutcomeClass::Degenerate;
    }
    match (p.s1 < 1.0, p.s2 < 1.0) {
        (true, false) => OutcomeClass::XExcludesY,
        (false, true) => OutcomeClass::YExcludesX,
        (true, true) => OutcomeClass::StableCoexistence,
        (false, false) => OutcomeClass::Bistable,
    }
}
