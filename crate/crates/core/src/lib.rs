//! Two-species competition dynamics for KN95 and disposable mask production.
//!
//! The crate integrates the Lotka–Volterra competition system with a
//! fixed-step RK4 scheme, classifies the long-run outcome, extracts event
//! times (crossover, peak, saturation) from trajectories and runs named
//! scenarios. The [`io`] module holds the text formats and the command-line
//! front end used by the `compete-sim` binary.

pub mod analysis;
pub mod integrator;
pub mod io;
pub mod model;
pub mod scenarios;

pub use analysis::{ScenarioReport, Species};
pub use integrator::{integrate, Method, SolverConfig, Trajectory};
pub use model::{ModelParams, OutcomeClass, State};
pub use scenarios::{Scenario, Situation};
