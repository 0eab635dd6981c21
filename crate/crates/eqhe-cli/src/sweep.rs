//! CSV sweep writers.
//!
//! Output format is fixed for golden-file comparison: header row always
//! present, comma delimiter, six decimal places, LF line endings, rows in
//! row-major grid order.

use crate::{create_output, io_error, CliError};
use clap::{Args, ValueEnum};
use eqhe_core::concurrence_view::{
    classify_positive_work, cycle_from_concurrence, efficiency_from_concurrence,
    ConcurrenceCycleSpec,
};
use eqhe_core::otto::run_cycle;
use eqhe_core::spin::{CouplingSign, ModelParams};
use eqhe_core::CycleSpec;
use std::io::Write;
use std::path::PathBuf;

/// Sweeps cover the open-ended axis c2 on (0, C2_MAX] with `steps` points.
const C2_MAX: f64 = 0.999;

#[derive(Args)]
pub struct Fig12Args {
    /// Hot bath temperature
    #[arg(long, default_value_t = 2.0)]
    th: f64,
    /// Cold bath temperature
    #[arg(long, default_value_t = 1.0)]
    tl: f64,
    /// Concurrence ratios gamma = c1/c2, comma separated, each in [0, 1]
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.25, 0.5, 0.75, 1.0])]
    gamma: Vec<f64>,
    /// Number of c2 grid points on (0, 0.999]
    #[arg(long = "c2-steps", default_value_t = 200)]
    c2_steps: u32,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
pub struct Fig3Args {
    /// Temperature ratios Th/Tl, comma separated, each > 1
    #[arg(long, value_delimiter = ',', default_values_t = [2.0, 5.0])]
    ratios: Vec<f64>,
    /// Concurrence ratios gamma = c1/c2, comma separated, each in [0, 1]
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.25, 0.5, 0.75, 1.0])]
    gamma: Vec<f64>,
    /// Number of c2 grid points on (0, 0.999]
    #[arg(long = "c2-steps", default_value_t = 200)]
    c2_steps: u32,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegionParam {
    /// x = cold-stage gap, y = hot temperature, at fixed (j1, d1, tl)
    Jd,
    /// x = c2, y = c1, at fixed (th, tl)
    Concurrence,
}

#[derive(Args)]
pub struct RegionArgs {
    /// Which plane to rasterize
    #[arg(long, value_enum, default_value_t = RegionParam::Jd)]
    param: RegionParam,
    /// Lower x bound (default depends on --param)
    #[arg(long, allow_negative_numbers = true)]
    x_min: Option<f64>,
    /// Upper x bound (default depends on --param)
    #[arg(long, allow_negative_numbers = true)]
    x_max: Option<f64>,
    /// Grid points along x
    #[arg(long, default_value_t = 64)]
    x_steps: u32,
    /// Lower y bound (default depends on --param)
    #[arg(long, allow_negative_numbers = true)]
    y_min: Option<f64>,
    /// Upper y bound (default depends on --param)
    #[arg(long, allow_negative_numbers = true)]
    y_max: Option<f64>,
    /// Grid points along y
    #[arg(long, default_value_t = 64)]
    y_steps: u32,
    /// Hot-stage coupling (jd mode)
    #[arg(long, default_value_t = 2.0)]
    j1: f64,
    /// Hot-stage DM strength (jd mode)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    d1: f64,
    /// Hot bath temperature (concurrence mode)
    #[arg(long, default_value_t = 2.0)]
    th: f64,
    /// Cold bath temperature
    #[arg(long, default_value_t = 1.0)]
    tl: f64,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

fn validate_gammas(gammas: &[f64]) -> Result<(), CliError> {
    if gammas.is_empty() {
        return Err(CliError::Validation(
            "at least one gamma value is required".into(),
        ));
    }
    for &g in gammas {
        if !g.is_finite() || !(0.0..=1.0).contains(&g) {
            return Err(CliError::Validation(format!(
                "gamma must lie in [0, 1] (got {g})"
            )));
        }
    }
    Ok(())
}

fn validate_steps(steps: u32, name: &str) -> Result<(), CliError> {
    if steps < 2 {
        return Err(CliError::Validation(format!(
            "{name} must be at least 2 (got {steps})"
        )));
    }
    Ok(())
}

fn c2_grid_point(k: u32, steps: u32) -> f64 {
    C2_MAX * k as f64 / steps as f64
}

pub fn fig12(args: &Fig12Args) -> Result<(), CliError> {
    validate_gammas(&args.gamma)?;
    validate_steps(args.c2_steps, "--c2-steps")?;
    let mut out = create_output(&args.out)?;
    writeln!(out, "gamma,c2,c1,q_h,q_l,w").map_err(|e| io_error(&args.out, e))?;
    for &gamma in &args.gamma {
        for k in 1..=args.c2_steps {
            let c2 = c2_grid_point(k, args.c2_steps);
            let c1 = gamma * c2;
            let spec = ConcurrenceCycleSpec::new(
                c1,
                c2,
                args.th,
                args.tl,
                0.0,
                0.0,
                CouplingSign::Antiferromagnetic,
            )?;
            let r = cycle_from_concurrence(&spec);
            writeln!(
                out,
                "{gamma:.6},{c2:.6},{c1:.6},{:.6},{:.6},{:.6}",
                r.q_h, r.q_l, r.w
            )
            .map_err(|e| io_error(&args.out, e))?;
        }
    }
    out.flush().map_err(|e| io_error(&args.out, e))
}

pub fn fig3(args: &Fig3Args) -> Result<(), CliError> {
    validate_gammas(&args.gamma)?;
    validate_steps(args.c2_steps, "--c2-steps")?;
    for &r in &args.ratios {
        if !r.is_finite() || r <= 1.0 {
            return Err(CliError::Validation(format!(
                "temperature ratio Th/Tl must exceed 1 (got {r})"
            )));
        }
    }
    let mut out = create_output(&args.out)?;
    writeln!(out, "th_over_tl,gamma,c2,eta,eta_carnot,abrupt_flag")
        .map_err(|e| io_error(&args.out, e))?;
    for &ratio in &args.ratios {
        let eta_carnot = 1.0 - 1.0 / ratio;
        for &gamma in &args.gamma {
            for k in 1..=args.c2_steps {
                let c2 = c2_grid_point(k, args.c2_steps);
                let c1 = gamma * c2;
                let eff = efficiency_from_concurrence(c1, c2, ratio, 1.0)?;
                writeln!(
                    out,
                    "{ratio:.6},{gamma:.6},{c2:.6},{:.6},{eta_carnot:.6},{}",
                    eff.eta, eff.abrupt_transition as u8
                )
                .map_err(|e| io_error(&args.out, e))?;
            }
        }
    }
    out.flush().map_err(|e| io_error(&args.out, e))
}

pub fn region(args: &RegionArgs) -> Result<(), CliError> {
    validate_steps(args.x_steps, "--x-steps")?;
    validate_steps(args.y_steps, "--y-steps")?;
    match args.param {
        RegionParam::Jd => region_jd(args),
        RegionParam::Concurrence => region_concurrence(args),
    }
}

fn resolve_bounds(
    min: Option<f64>,
    max: Option<f64>,
    default_min: f64,
    default_max: f64,
    axis: &str,
) -> Result<(f64, f64), CliError> {
    let lo = min.unwrap_or(default_min);
    let hi = max.unwrap_or(default_max);
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(CliError::Validation(format!(
            "{axis} bounds must be finite and ordered (got [{lo}, {hi}])"
        )));
    }
    Ok((lo, hi))
}

fn grid_point(lo: f64, hi: f64, i: u32, steps: u32) -> f64 {
    lo + (hi - lo) * i as f64 / (steps - 1) as f64
}

/// x = cold-stage gap, y = hot temperature. The feasibility column is the
/// analytic positive-work condition (cold gap below the hot gap and
/// gap-to-temperature ratios ordered), which matches sign(W) everywhere on a
/// valid grid.
fn region_jd(args: &RegionArgs) -> Result<(), CliError> {
    let hot = ModelParams::new(args.j1, args.d1)?;
    let gap_hot = hot.gap();
    if gap_hot <= 0.0 {
        return Err(CliError::Validation(format!(
            "jd region needs an antiferromagnetic hot stage (got j1={})",
            args.j1
        )));
    }
    let (x_lo, x_hi) = resolve_bounds(args.x_min, args.x_max, 0.1, 1.9, "x")?;
    let (y_lo, y_hi) = resolve_bounds(args.y_min, args.y_max, 1.1, 5.0, "y")?;
    if x_lo <= 0.0 {
        return Err(CliError::Validation(format!(
            "cold-stage gaps must be positive (x starts at {x_lo})"
        )));
    }
    if y_lo <= args.tl {
        return Err(CliError::Validation(format!(
            "hot temperatures must exceed Tl={} (y starts at {y_lo})",
            args.tl
        )));
    }
    let mut out = create_output(&args.out)?;
    writeln!(out, "x,y,w,feasible").map_err(|e| io_error(&args.out, e))?;
    for yi in 0..args.y_steps {
        let th = grid_point(y_lo, y_hi, yi, args.y_steps);
        for xi in 0..args.x_steps {
            let gap_cold = grid_point(x_lo, x_hi, xi, args.x_steps);
            let spec = CycleSpec::new(hot, th, ModelParams::new(gap_cold, 0.0)?, args.tl)?;
            let w = run_cycle(&spec).w;
            let feasible = gap_cold < gap_hot && gap_hot / th < gap_cold / args.tl;
            writeln!(out, "{gap_cold:.6},{th:.6},{w:.6},{}", feasible as u8)
                .map_err(|e| io_error(&args.out, e))?;
        }
    }
    out.flush().map_err(|e| io_error(&args.out, e))
}

/// x = c2, y = c1 over the unit square of concurrences.
fn region_concurrence(args: &RegionArgs) -> Result<(), CliError> {
    let (x_lo, x_hi) = resolve_bounds(args.x_min, args.x_max, 0.0, 0.99, "x")?;
    let (y_lo, y_hi) = resolve_bounds(args.y_min, args.y_max, 0.0, 0.99, "y")?;
    for (axis, lo, hi) in [("x", x_lo, x_hi), ("y", y_lo, y_hi)] {
        if lo < 0.0 || hi >= 1.0 {
            return Err(CliError::Validation(format!(
                "{axis} concurrence bounds must lie in [0, 1) (got [{lo}, {hi}])"
            )));
        }
    }
    let mut out = create_output(&args.out)?;
    writeln!(out, "x,y,w,feasible").map_err(|e| io_error(&args.out, e))?;
    for yi in 0..args.y_steps {
        let c1 = grid_point(y_lo, y_hi, yi, args.y_steps);
        for xi in 0..args.x_steps {
            let c2 = grid_point(x_lo, x_hi, xi, args.x_steps);
            let spec = ConcurrenceCycleSpec::new(
                c1,
                c2,
                args.th,
                args.tl,
                0.0,
                0.0,
                CouplingSign::Antiferromagnetic,
            )?;
            let w = cycle_from_concurrence(&spec).w;
            let feasible = classify_positive_work(&spec).feasible;
            writeln!(out, "{c2:.6},{c1:.6},{w:.6},{}", feasible as u8)
                .map_err(|e| io_error(&args.out, e))?;
        }
    }
    out.flush().map_err(|e| io_error(&args.out, e))
}
