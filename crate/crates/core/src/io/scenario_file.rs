//! Flat `key=value` scenario files.
//!
//! ```text
//! # counts in units of 10^4 masks
//! name = fast-kn95
//! r1 = 2
//! t_end = 6
//! ```
//!
//! Keys: `name r1 r2 n1 n2 s1 s2 x0 y0 h t_end method saturation_fraction`.
//! Omitted keys inherit the situation-1 base case. Unknown or repeated keys
//! are rejected. `#` starts a comment.

use std::collections::HashSet;

use thiserror::Error;

use crate::scenarios::{builtin_scenario, Scenario, ScenarioError, Situation};

pub const KEYS: [&str; 13] = [
    "name",
    "r1",
    "r2",
    "n1",
    "n2",
    "s1",
    "s2",
    "x0",
    "y0",
    "h",
    "t_end",
    "method",
    "saturation_fraction",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScenarioFileError {
    #[error("line {line}: expected key=value")]
    Syntax { line: usize },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: key '{key}' given twice")]
    DuplicateKey { line: usize, key: String },
    #[error("line {line}: invalid value for '{key}': {message}")]
    Value {
        line: usize,
        key: String,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] ScenarioError),
}

/// Parses a scenario file. `default_name` is used when no `name` key is set.
pub fn parse_scenario(text: &str, default_name: &str) -> Result<Scenario, ScenarioFileError> {
    let mut sc = builtin_scenario(Situation::Situation1);
    sc.name = default_name.to_string();
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or(ScenarioFileError::Syntax { line })?;
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(ScenarioFileError::UnknownKey {
                line,
                key: key.to_string(),
            });
        }
        if !seen.insert(key.to_string()) {
            return Err(ScenarioFileError::DuplicateKey {
                line,
                key: key.to_string(),
            });
        }
        let bad = |message: String| ScenarioFileError::Value {
            line,
            key: key.to_string(),
            message,
        };
        let num = || value.parse::<f64>().map_err(|e| bad(e.to_string()));
        match key {
            "name" => sc.name = value.to_string(),
            "r1" => sc.params.r1 = num()?,
            "r2" => sc.params.r2 = num()?,
            "n1" => sc.params.n1 = num()?,
            "n2" => sc.params.n2 = num()?,
            "s1" => sc.params.s1 = num()?,
            "s2" => sc.params.s2 = num()?,
            "x0" => sc.initial.x = num()?,
            "y0" => sc.initial.y = num()?,
            "h" => sc.solver.h = num()?,
            "t_end" => sc.solver.t_end = num()?,
            "method" => sc.solver.method = value.parse().map_err(bad)?,
            "saturation_fraction" => sc.saturation_fraction = num()?,
            _ => unreachable!("key list checked above"),
        }
    }
    sc.validate()?;
    Ok(sc)
}

/// Serialises a scenario in the same format, all keys explicit.
pub fn render_scenario(sc: &Scenario) -> String {
    let p = &sc.params;
    format!(
        "# counts in units of 10^4 masks\n\
         name = {}\nr1 = {}\nr2 = {}\nn1 = {}\nn2 = {}\ns1 = {}\ns2 = {}\n\
         x0 = {}\ny0 = {}\nh = {}\nt_end = {}\nmethod = {}\nsaturation_fraction = {}\n",
        sc.name,
        p.r1,
        p.r2,
        p.n1,
        p.n2,
        p.s1,
        p.s2,
        sc.initial.x,
        sc.initial.y,
        sc.solver.h,
        sc.solver.t_end,
        sc.solver.method,
        sc.saturation_fraction
    )
}
