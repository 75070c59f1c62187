//! The four subcommand implementations.

use std::fmt::Write as _;

use biham::ecmap::{self, Family, DEFAULT_CLASSIFY_TOL};
use biham::fibers::{generate_heteroclinic_web, FiberError};
use biham::integrator::{
    integrate, trajectory_to_csv, trajectory_to_json, IntegratorConfig, IntegratorError,
    DEFAULT_MAX_INNER_ITERS, DEFAULT_NEWTON_TOL,
};
use biham::stability::{classify_equilibrium, measure_return_period, predicted_period, Verdict};
use biham::{EcPoint, State};

use crate::config::{FileConfig, FormatChoice, SolverChoice};
use crate::{
    output, usage_error, ClassifyArgs, CliError, Experiment, ReproduceArgs, ScanImageArgs,
    SimulateArgs,
};

fn require_finite(name: &str, value: f64) {
    if !value.is_finite() {
        usage_error(&format!("{name} must be finite, got {value}"));
    }
}

pub(crate) fn simulate(args: SimulateArgs, cfg: &FileConfig) -> Result<(), CliError> {
    require_finite("--x0", args.x0);
    require_finite("--y0", args.y0);
    require_finite("--z0", args.z0);

    let dt = args
        .dt
        .or(cfg.dt)
        .unwrap_or_else(|| usage_error("missing --dt (pass the flag or a `dt` config entry)"));
    let steps = args.steps.or(cfg.steps).unwrap_or_else(|| {
        usage_error("missing --steps (pass the flag or a `steps` config entry)")
    });
    if !(dt.is_finite() && dt != 0.0) {
        usage_error(&format!("--dt must be finite and nonzero, got {dt}"));
    }
    if steps < 1 {
        usage_error("--steps must be at least 1");
    }
    let tol = args.tol.or(cfg.newton_tol).unwrap_or(DEFAULT_NEWTON_TOL);
    if !(tol.is_finite() && tol > 0.0) {
        usage_error(&format!("--tol must be positive, got {tol}"));
    }
    let iters = args
        .max_inner_iters
        .or(cfg.max_inner_iters)
        .unwrap_or(DEFAULT_MAX_INNER_ITERS);
    if iters < 1 {
        usage_error("--max-inner-iters must be at least 1");
    }
    let solver = args.solver.or(cfg.solver).unwrap_or(SolverChoice::Newton);
    let format = args.format.or(cfg.format).unwrap_or(FormatChoice::Csv);

    let integrator_cfg = IntegratorConfig::new(dt, steps as usize)
        .with_newton_tol(tol)
        .with_max_inner_iters(iters)
        .with_solver(solver.into());
    let start = State::new(args.x0, args.y0, args.z0);
    let trajectory = match integrate(start, &integrator_cfg) {
        Ok(tr) => tr,
        Err(IntegratorError::InvalidConfig(msg)) => usage_error(&msg),
        Err(err) => return Err(CliError::Numerical(err.to_string())),
    };

    let mut body = match format {
        FormatChoice::Csv => trajectory_to_csv(&trajectory),
        FormatChoice::Json => trajectory_to_json(&trajectory),
    };
    if !body.ends_with('\n') {
        body.push('\n');
    }
    let target =
        output::resolve_target(args.out, cfg.out_dir.as_deref(), format.trajectory_file_name());
    output::emit(target, &body)
}

pub(crate) fn classify(args: ClassifyArgs) -> Result<(), CliError> {
    match (args.h, args.c, args.family, args.m) {
        (Some(h), Some(c), None, None) => {
            require_finite("--h", h);
            require_finite("--c", c);
            let label = ecmap::classify(EcPoint::new(h, c), DEFAULT_CLASSIFY_TOL);
            println!("{}", serde_json::json!({ "label": label.to_string() }));
            Ok(())
        }
        (None, None, Some(family), Some(m)) => {
            require_finite("--M", m);
            let verdict = classify_equilibrium(family, m);
            let json = serde_json::to_string_pretty(&verdict).expect("verdict serializes");
            println!("{json}");
            Ok(())
        }
        _ => usage_error("pass either --h with --c (level query) or --family with --M (equilibrium query)"),
    }
}

pub(crate) fn scan_image(args: ScanImageArgs, cfg: &FileConfig) -> Result<(), CliError> {
    require_finite("--h-min", args.h_min);
    require_finite("--h-max", args.h_max);
    require_finite("--c-min", args.c_min);
    require_finite("--c-max", args.c_max);
    if args.h_min > args.h_max {
        usage_error(&format!("--h-min ({}) exceeds --h-max ({})", args.h_min, args.h_max));
    }
    if args.c_min > args.c_max {
        usage_error(&format!("--c-min ({}) exceeds --c-max ({})", args.c_min, args.c_max));
    }
    if args.resolution < 1 {
        usage_error("--resolution must be at least 1");
    }

    let hs = grid_values(args.h_min, args.h_max, args.resolution);
    let cs = grid_values(args.c_min, args.c_max, args.resolution);
    let mut body = String::from("h,c,label\n");
    for &h in &hs {
        for &c in &cs {
            let label = ecmap::classify(EcPoint::new(h, c), DEFAULT_CLASSIFY_TOL);
            writeln!(body, "{h},{c},{label}").expect("string write");
        }
    }

    let target = output::resolve_target(args.out, cfg.out_dir.as_deref(), "scan.csv");
    output::emit(target, &body)
}

/// `resolution` evenly spaced values from `min` to `max` inclusive; a single
/// value when the range is degenerate.
fn grid_values(min: f64, max: f64, resolution: usize) -> Vec<f64> {
    if resolution == 1 || min == max {
        return vec![min];
    }
    (0..resolution)
        .map(|i| {
            if i + 1 == resolution {
                max
            } else {
                min + (max - min) * i as f64 / (resolution - 1) as f64
            }
        })
        .collect()
}

pub(crate) fn reproduce(args: ReproduceArgs) -> Result<(), CliError> {
    match args.experiment {
        Experiment::Heteroclinic => reproduce_heteroclinic(),
        Experiment::Period => reproduce_period(),
        Experiment::Stability => reproduce_stability(),
    }
}

fn fiber_error(err: FiberError) -> CliError {
    CliError::Numerical(err.to_string())
}

fn reproduce_heteroclinic() -> Result<(), CliError> {
    const ENDPOINT_TOL: f64 = 5e-3;
    let web = generate_heteroclinic_web(0.5, 0.015, 160).map_err(fiber_error)?;
    println!(
        "heteroclinic web on h = {}, c = {}: {} runs over the saddle cycle {} -> {} -> {} -> {}",
        web.h, web.c, web.runs.len(), web.cycle[0], web.cycle[1], web.cycle[2], web.cycle[3],
    );

    let mut all_ok = true;
    let mut max_c_error = 0.0_f64;
    for (i, run) in web.runs.iter().enumerate() {
        let legs = [
            ("forward", run.forward_end, run.forward_target, run.forward_max_abs_diff),
            ("backward", run.backward_end, run.backward_target, run.backward_max_abs_diff),
        ];
        for (leg, end, target, diff) in legs {
            let ok = diff <= ENDPOINT_TOL;
            all_ok &= ok;
            println!(
                "{}: run {i} {leg} end {end} vs saddle {target}, max component diff {diff:.3e} (tol {ENDPOINT_TOL:e})",
                if ok { "PASS" } else { "FAIL" },
            );
        }
        max_c_error = max_c_error.max(run.max_c_level_error);
    }
    println!(
        "cycle closed: {}; worst |C - c| along any run: {max_c_error:.3e}",
        web.cycle_closed(),
    );
    if all_ok {
        println!("heteroclinic: all {} endpoint checks within {ENDPOINT_TOL:e}", 2 * web.runs.len());
        Ok(())
    } else {
        println!("heteroclinic: endpoint checks outside tolerance");
        Err(CliError::ToleranceExceeded)
    }
}

fn reproduce_period() -> Result<(), CliError> {
    const REL_TOL: f64 = 1e-2;
    let expected = predicted_period(Family::E1, 1.0).expect("E1 has a predicted period");
    let start = State::new(1.0, 1e-3, 1e-3);
    let measured = measure_return_period(start, 1e-3, 20_000, 1e-4)
        .map_err(|err| CliError::Numerical(err.to_string()))?;

    match measured {
        Some(period) => {
            let rel = (period - expected).abs() / expected;
            let ok = rel <= REL_TOL;
            println!(
                "{}: period near E1 at M = 1: measured {period}, predicted {expected}, relative error {rel:.3e} (tol {REL_TOL:e})",
                if ok { "PASS" } else { "FAIL" },
            );
            if ok {
                Ok(())
            } else {
                Err(CliError::ToleranceExceeded)
            }
        }
        None => {
            println!("FAIL: no section return within 20000 steps from {start}");
            Err(CliError::ToleranceExceeded)
        }
    }
}

fn reproduce_stability() -> Result<(), CliError> {
    let expected = [
        (Family::E1, Verdict::NonlinearlyStable),
        (Family::E2, Verdict::NonlinearlyStable),
        (Family::E3, Verdict::NonlinearlyStable),
        (Family::E4, Verdict::Unstable),
        (Family::E5, Verdict::Unstable),
    ];

    let mut all_ok = true;
    for (family, want) in expected {
        let verdict = classify_equilibrium(family, 1.0);
        let ok = verdict.verdict == want;
        all_ok &= ok;
        println!(
            "{}: {family} at M = 1 -> {:?} (expected {:?})",
            if ok { "PASS" } else { "FAIL" },
            verdict.verdict,
            want,
        );
    }
    if all_ok {
        println!("stability: all 5 verdicts match");
        Ok(())
    } else {
        println!("stability: verdict table mismatch");
        Err(CliError::ToleranceExceeded)
    }
}
