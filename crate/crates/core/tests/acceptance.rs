//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line per
//! criterion (run with `--nocapture` to see them) and asserts the criterion
//! at its stated tolerance.

use compete_sim::analysis::{crossover_time, market_share, saturation_time};
use compete_sim::integrator::{convergence_order, integrate, Method, SolverConfig, Trajectory};
use compete_sim::io::csv::{parse_csv, render_csv};
use compete_sim::model::{
    classify_outcome, equilibria, vector_field, EquilibriumKind, ModelParams, OutcomeClass, State,
};
use compete_sim::scenarios::{builtin_scenario, run_scenario, Situation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Published time / KN95 / disposable rows, h = 0.1.
const PUBLISHED_TABLE: [(f64, f64, f64); 11] = [
    (0.0, 30.000, 60.000),
    (0.1, 32.972, 76.128),
    (0.2, 36.207, 95.648),
    (0.3, 39.719, 118.820),
    (0.4, 43.522, 145.711),
    (0.5, 47.626, 176.117),
    (0.6, 52.043, 209.493),
    (0.7, 56.781, 244.940),
    (0.8, 61.851, 281.242),
    (0.9, 67.261, 316.971),
    (1.0, 73.023, 350.663),
];
const TABLE_TOL: f64 = 5e-4;

/// Crossover times frozen from an independent RK4 implementation
/// (h = 0.1, horizons 10 / 6 / 20, linear interpolation).
const FROZEN_CROSSOVER: [(Situation, f64); 3] = [
    (Situation::Situation1, 2.750_319_557_132_746),
    (Situation::Situation2, 1.231_121_607_811_162),
    (Situation::Situation3, 5.443_703_738_605_038),
];
const NARRATIVE_CROSSOVER: [f64; 3] = [2.8, 1.2, 5.8];
const NARRATIVE_TOL: f64 = 0.7;
const FROZEN_TOL: f64 = 1e-6;

fn verdict(ok: bool) -> &'static str {
    if ok {
        "[PASS]"
    } else {
        "[FAIL]"
    }
}

fn situation1() -> ModelParams {
    builtin_scenario(Situation::Situation1).params
}

#[test]
fn criterion_1_published_table_golden() {
    let cfg = SolverConfig::new(Method::Rk4, 0.1, 1.0, 1).unwrap();
    let traj = integrate(&situation1(), &State::new(0.0, 30.0, 60.0), &cfg).unwrap();
    assert_eq!(traj.len(), PUBLISHED_TABLE.len());

    let mut worst: f64 = 0.0;
    for (s, &(t, x, y)) in traj.samples.iter().zip(&PUBLISHED_TABLE) {
        let (dx, dy) = ((s.x - x).abs(), (s.y - y).abs());
        worst = worst.max(dx).max(dy);
        println!(
            "  row t={t:.1}: x={:.4} (Δ {dx:.1e}) y={:.4} (Δ {dy:.1e}) {}",
            s.x,
            s.y,
            verdict(dx <= TABLE_TOL && dy <= TABLE_TOL)
        );
        assert!((s.t - t).abs() < 1e-12);
    }
    let ok = worst <= TABLE_TOL;
    println!(
        "{} C1 table golden: max |Δ| = {worst:.2e} (tol {TABLE_TOL:.0e})",
        verdict(ok)
    );
    assert!(
        ok,
        "published rows deviate by up to {worst:.3e} > {TABLE_TOL:.0e}"
    );
}

#[test]
fn criterion_2_convergence_order() {
    let p = situation1();
    let s0 = State::new(0.0, 30.0, 60.0);
    let rk4 = convergence_order(&p, &s0, 1.0, 0.1, Method::Rk4).unwrap();
    let euler = convergence_order(&p, &s0, 1.0, 0.1, Method::Euler).unwrap();
    let rk4_ok = rk4.min() >= 3.5 && rk4.max() <= 4.5;
    let euler_ok = euler.min() >= 0.7 && euler.max() <= 1.3;
    println!(
        "{} C2 convergence order: rk4 = ({:.3}, {:.3}) in [3.5, 4.5]; euler = ({:.3}, {:.3}) in [0.7, 1.3]",
        verdict(rk4_ok && euler_ok),
        rk4.x,
        rk4.y,
        euler.x,
        euler.y
    );
    assert!(rk4_ok, "{rk4:?}");
    assert!(euler_ok, "{euler:?}");
}

#[test]
fn criterion_3_exclusion_outcome() {
    let cfg = SolverConfig::new(Method::Rk4, 0.1, 30.0, 1).unwrap();
    let traj = integrate(&situation1(), &State::new(0.0, 30.0, 60.0), &cfg).unwrap();
    let end = traj.last();
    let ok = (end.x - 900.0).abs() <= 9.0 && end.y < 1.0;
    println!(
        "{} C3 exclusion at t=30: x = {:.6} (within 1% of 900), y = {:.3e} (< 1)",
        verdict(ok),
        end.x,
        end.y
    );
    assert!(ok);
    assert_eq!(classify_outcome(&traj.params), OutcomeClass::XExcludesY);
}

#[test]
fn criterion_4_narrative_milestones() {
    let mut all_ok = true;
    for ((sit, frozen), narrative) in FROZEN_CROSSOVER.iter().zip(NARRATIVE_CROSSOVER) {
        let (_, report) = run_scenario(&builtin_scenario(*sit)).unwrap();
        let t = report.crossover_t.expect("crossover inside horizon");
        let loose = (t - narrative).abs() <= NARRATIVE_TOL;
        let tight = (t - frozen).abs() <= FROZEN_TOL;
        all_ok &= loose && tight;
        println!(
            "  {sit}: crossover = {t:.9} (narrative {narrative} ± {NARRATIVE_TOL}: {}; frozen {frozen:.9} ± {FROZEN_TOL:.0e}: {})",
            verdict(loose),
            verdict(tight)
        );
    }
    println!("{} C4 narrative milestones", verdict(all_ok));
    assert!(all_ok);
}

#[test]
fn criterion_5_scenario_ordering() {
    let reports: Vec<_> = Situation::ALL
        .iter()
        .map(|&s| run_scenario(&builtin_scenario(s)).unwrap().1)
        .collect();
    let (r1, r2, r3) = (&reports[0], &reports[1], &reports[2]);
    let sat = |r: &compete_sim::ScenarioReport| r.saturation_t.expect("saturates inside horizon");
    let cross = |r: &compete_sim::ScenarioReport| r.crossover_t.expect("crosses inside horizon");
    let sat_ok = sat(r2) < sat(r1) && sat(r1) < sat(r3);
    let cross_ok = cross(r2) < cross(r1) && cross(r1) < cross(r3);
    println!(
        "{} C5 ordering: saturation {:.4} < {:.4} < {:.4}; crossover {:.4} < {:.4} < {:.4}",
        verdict(sat_ok && cross_ok),
        sat(r2),
        sat(r1),
        sat(r3),
        cross(r2),
        cross(r1),
        cross(r3)
    );
    assert!(sat_ok && cross_ok);
}

/// Integrates in chunks until the state moves less than 1e-9 per unit time.
fn settle(p: &ModelParams, s0: State) -> State {
    let h = 0.05;
    let chunk = 50.0;
    let mut start = s0;
    for _ in 0..200 {
        let cfg = SolverConfig::new(Method::Rk4, h, chunk, 1).unwrap();
        let traj = integrate(p, &State::new(0.0, start.x, start.y), &cfg).unwrap();
        let n = traj.len();
        let (a, b) = (traj.samples[n - 2], traj.samples[n - 1]);
        let speed = (b.x - a.x).hypot(b.y - a.y) / (b.t - a.t);
        start = b;
        if speed < 1e-9 {
            return b;
        }
    }
    panic!("did not settle: {start:?} for {p:?}");
}

fn random_params(rng: &mut ChaCha8Rng, s1: f64, s2: f64) -> ModelParams {
    ModelParams::new(
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.5..3.0),
        rng.gen_range(100.0..1000.0),
        rng.gen_range(100.0..1000.0),
        s1,
        s2,
    )
    .unwrap()
}

#[test]
fn criterion_6_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6e3935);
    let mut results = Vec::new();

    // Fixed-point residuals.
    let mut fp_ok = true;
    for _ in 0..200 {
        let (s1, s2) = (rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0));
        let p = random_params(&mut rng, s1, s2);
        let Ok(points) = equilibria(&p) else { continue };
        for e in points {
            fp_ok &= e.residual(&p) < 1e-12 * p.rate_scale();
        }
    }
    results.push(("equilibrium fixed-point residuals < 1e-12·scale", fp_ok));

    // Axis flow-invariance.
    let mut axis_ok = true;
    for _ in 0..200 {
        let (s1, s2) = (rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0));
        let p = random_params(&mut rng, s1, s2);
        let (x, y) = (rng.gen_range(0.0..2000.0), rng.gen_range(0.0..2000.0));
        axis_ok &= vector_field(&p, &State::new(0.0, 0.0, y)).dx == 0.0;
        axis_ok &= vector_field(&p, &State::new(0.0, x, 0.0)).dy == 0.0;
    }
    results.push(("axis flow-invariance", axis_ok));

    // Decoupled logistic limit.
    let mut logistic_ok = true;
    for _ in 0..10 {
        let p = random_params(&mut rng, 0.0, 0.0);
        let (x, y) = (rng.gen_range(0.0..2000.0), rng.gen_range(0.0..2000.0));
        let r = vector_field(&p, &State::new(0.0, x, y));
        let lx = p.r1 * x * (1.0 - x / p.n1);
        let ly = p.r2 * y * (1.0 - y / p.n2);
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-12 * b.abs().max(f64::MIN_POSITIVE);
        logistic_ok &= rel(r.dx, lx) && rel(r.dy, ly);
    }
    results.push(("decoupled logistic agreement (1e-12 relative)", logistic_ok));

    // CSV round trip.
    let mut csv_ok = true;
    for sit in Situation::ALL {
        let (traj, _) = run_scenario(&builtin_scenario(sit)).unwrap();
        let rows = parse_csv(&render_csv(&traj)).unwrap();
        csv_ok &= rows.len() == traj.len();
        for ((row, s), sp) in rows.iter().zip(&traj.samples).zip(market_share(&traj)) {
            csv_ok &= (row.t - s.t).abs() <= 1e-6
                && (row.x - s.x).abs() <= 1e-6
                && (row.y - s.y).abs() <= 1e-6;
            csv_ok &= match (row.share, sp.share) {
                (Some(a), Some(b)) => (a - b).abs() <= 1e-6,
                (None, None) => true,
                _ => false,
            };
        }
    }
    results.push(("CSV round-trip at 1e-6", csv_ok));

    // Interpolated events bracketed by samples.
    let mut bracket_ok = true;
    let bracketed = |traj: &Trajectory, t: f64, g: &dyn Fn(&State) -> f64| {
        traj.samples
            .windows(2)
            .any(|w| w[0].t < t && t <= w[1].t && g(&w[0]) < 0.0 && g(&w[1]) >= 0.0)
    };
    for sit in Situation::ALL {
        let (traj, _) = run_scenario(&builtin_scenario(sit)).unwrap();
        let c = crossover_time(&traj).unwrap();
        bracket_ok &= bracketed(&traj, c, &|s| s.x - s.y);
        let n1 = traj.params.n1;
        let st = saturation_time(&traj, 0.95).unwrap().unwrap();
        bracket_ok &= bracketed(&traj, st, &|s| s.x - 0.95 * n1);
    }
    results.push(("interpolated event times bracketed by samples", bracket_ok));

    // Classification vs integration, 5 draws per non-degenerate class.
    let mut class_ok = true;
    let mut seen = Vec::new();
    for draw in 0..20 {
        let weak = |rng: &mut ChaCha8Rng| rng.gen_range(0.1..0.9);
        let strong = |rng: &mut ChaCha8Rng| rng.gen_range(1.1..3.0);
        let (s1, s2) = match draw % 4 {
            0 => (weak(&mut rng), strong(&mut rng)),
            1 => (strong(&mut rng), weak(&mut rng)),
            2 => (weak(&mut rng), weak(&mut rng)),
            _ => (strong(&mut rng), strong(&mut rng)),
        };
        let p = random_params(&mut rng, s1, s2);
        let class = classify_outcome(&p);
        seen.push(class);
        let eq = equilibria(&p).unwrap();
        let find = |k: EquilibriumKind| *eq.iter().find(|e| e.kind == k).unwrap();
        let near = |s: State, k: EquilibriumKind| {
            let e = find(k);
            (s.x - e.x_star).abs() <= 1e-3 * p.n1 && (s.y - e.y_star).abs() <= 1e-3 * p.n2
        };
        let interior_start = State::new(
            0.0,
            rng.gen_range(0.05..0.5) * p.n1,
            rng.gen_range(0.05..0.5) * p.n2,
        );
        let ok = match class {
            OutcomeClass::XExcludesY => near(settle(&p, interior_start), EquilibriumKind::XOnly),
            OutcomeClass::YExcludesX => near(settle(&p, interior_start), EquilibriumKind::YOnly),
            OutcomeClass::StableCoexistence => {
                near(settle(&p, interior_start), EquilibriumKind::Interior)
            }
            OutcomeClass::Bistable => {
                let x_basin = State::new(0.0, 0.99 * p.n1, 0.01 * p.n2);
                let y_basin = State::new(0.0, 0.01 * p.n1, 0.99 * p.n2);
                near(settle(&p, x_basin), EquilibriumKind::XOnly)
                    && near(settle(&p, y_basin), EquilibriumKind::YOnly)
            }
            OutcomeClass::Degenerate => false,
        };
        class_ok &= ok;
    }
    for class in [
        OutcomeClass::XExcludesY,
        OutcomeClass::YExcludesX,
        OutcomeClass::StableCoexistence,
        OutcomeClass::Bistable,
    ] {
        class_ok &= seen.iter().filter(|&&c| c == class).count() == 5;
    }
    results.push((
        "classification vs integration, 20 draws over 4 classes",
        class_ok,
    ));

    for (name, ok) in &results {
        println!("  {} {name}", verdict(*ok));
    }
    let all = results.iter().all(|(_, ok)| *ok);
    println!("{} C6 property suites", verdict(all));
    assert!(all, "{results:?}");
}
