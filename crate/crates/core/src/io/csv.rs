//! Trajectory CSV: header `t,x,y,share`, six decimals, LF line endings.
//!
//! `share` is the KN95 fraction `x/(x+y)`; it is written as `nan` where
//! `x + y = 0`.

use thiserror::Error;

use crate::analysis::market_share;
use crate::integrator::Trajectory;

use super::fixed;

pub const CSV_HEADER: &str = "t,x,y,share";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CsvError {
    #[error("missing or wrong header (expected '{CSV_HEADER}')")]
    Header,
    #[error("line {line}: expected 4 fields")]
    FieldCount { line: usize },
    #[error("line {line}: invalid number '{text}'")]
    Number { line: usize, text: String },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsvRow {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub share: Option<f64>,
}

pub fn render_csv(traj: &Trajectory) -> String {
    let mut out = String::with_capacity(48 * (traj.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (s, sp) in traj.samples.iter().zip(market_share(traj)) {
        let share = sp.share.map_or_else(|| "nan".to_string(), |v| fixed(v, 6));
        out.push_str(&format!(
            "{},{},{},{}\n",
            fixed(s.t, 6),
            fixed(s.x, 6),
            fixed(s.y, 6),
            share
        ));
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>, CsvError> {
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(CsvError::Header);
    }
    let mut rows = Vec::new();
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(CsvError::FieldCount { line: line_no });
        }
        let num = |text: &str| {
            text.parse::<f64>().map_err(|_| CsvError::Number {
                line: line_no,
                text: text.to_string(),
            })
        };
        let share = num(fields[3])?;
        rows.push(CsvRow {
            t: num(fields[0])?,
            x: num(fields[1])?,
            y: num(fields[2])?,
            share: (!share.is_nan()).then_some(share),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrator::{integrate, Method, SolverConfig};
    use crate::model::{ModelParams, State};

    #[test]
    fn first_row_echoes_initial_condition() {
        let p = ModelParams::new(1.0, 3.0, 900.0, 900.0, 0.27, 3.75).unwrap();
        let cfg = SolverConfig::new(Method::Rk4, 0.1, 1.0, 1).unwrap();
        let csv = render_csv(&integrate(&p, &State::new(0.0, 30.0, 60.0), &cfg).unwrap());
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,x,y,share"));
        assert_eq!(lines.next(), Some("0.000000,30.000000,60.000000,0.333333"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn undefined_share_round_trips() {
        let p = ModelParams::new(1.0, 3.0, 900.0, 900.0, 0.27, 3.75).unwrap();
        let cfg = SolverConfig::new(Method::Rk4, 0.5, 1.0, 1).unwrap();
        let csv = render_csv(&integrate(&p, &State::new(0.0, 0.0, 0.0), &cfg).unwrap());
        let rows = parse_csv(&csv).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.share.is_none()));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_csv("a,b\n"), Err(CsvError::Header));
        assert_eq!(
            parse_csv("t,x,y,share\n1,2,3\n"),
            Err(CsvError::FieldCount { line: 2 })
        );
        assert!(matches!(
            parse_csv("t,x,y,share\n1,2,3,q\n"),
            Err(CsvError::Number { line: 2, .. })
        ));
    }
}
