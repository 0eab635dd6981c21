//! `eqhe` — two-spin quantum Otto engine on the command line.
//!
//! Subcommands: `cycle` (single-cycle report), `fig12` and `fig3` (CSV sweeps
//! over the cold-stage concurrence), `region` (positive-work raster), and
//! `verify` (seeded closed-form vs numeric-oracle cross-checks).
//!
//! Exit codes: 0 success, 1 validation error, 2 verification failure,
//! 3 I/O error.

mod sweep;
mod verify;

use clap::{Args, Parser, Subcommand};
use eqhe_core::otto::{positive_work_condition, run_cycle};
use eqhe_core::spin::ModelParams;
use eqhe_core::CycleSpec;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Verification(String),
    Io(String),
}

impl From<eqhe_core::Error> for CliError {
    fn from(e: eqhe_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "eqhe",
    version,
    about = "Two-spin quantum Otto engine: cycles, concurrence sweeps, and oracle verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single cycle and report heats, work, and efficiency
    Cycle(CycleArgs),
    /// CSV sweep of Q_h, Q_l, W over the cold-stage concurrence
    Fig12(sweep::Fig12Args),
    /// CSV sweep of the efficiency over the cold-stage concurrence
    Fig3(sweep::Fig3Args),
    /// CSV raster of the positive-work region over a parameter grid
    Region(sweep::RegionArgs),
    /// Cross-check every closed form against the numeric oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CycleArgs {
    /// Hot-stage coupling J1
    #[arg(long, allow_negative_numbers = true)]
    j1: f64,
    /// Hot-stage DM strength D1
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    d1: f64,
    /// Hot bath temperature
    #[arg(long)]
    th: f64,
    /// Cold-stage coupling J2
    #[arg(long, allow_negative_numbers = true)]
    j2: f64,
    /// Cold-stage DM strength D2
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    d2: f64,
    /// Cold bath temperature
    #[arg(long)]
    tl: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the randomized suites
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Samples per suite
    #[arg(long, default_value_t = 1000)]
    samples: u32,
    /// Negative control: corrupt the closed-form heat before comparing, to
    /// demonstrate failure reporting
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Cycle(args) => cmd_cycle(&args),
        Command::Fig12(args) => sweep::fig12(&args),
        Command::Fig3(args) => sweep::fig3(&args),
        Command::Region(args) => sweep::region(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn cmd_cycle(args: &CycleArgs) -> Result<(), CliError> {
    let spec = CycleSpec::new(
        ModelParams::new(args.j1, args.d1)?,
        args.th,
        ModelParams::new(args.j2, args.d2)?,
        args.tl,
    )?;
    let r = run_cycle(&spec);
    println!("Q_h: {:.6}", r.q_h);
    println!("Q_l: {:.6}", r.q_l);
    println!("W: {:.6}", r.w);
    match r.eta {
        Some(eta) => println!("eta: {eta:.6}"),
        None => println!("eta: undefined"),
    }
    println!("eta_carnot: {:.6}", r.eta_carnot);
    println!("case: {}", r.case);
    match r.w_over_qh {
        Some(ratio) => println!("w_over_qh: {ratio:.6}"),
        None => println!("w_over_qh: undefined"),
    }
    match positive_work_condition(&spec) {
        Ok(flag) => println!("positive_work_condition: {flag}"),
        Err(_) => println!(
            "positive_work_condition: not applicable \
             (needs an antiferromagnetic cycle with cold gap below hot gap)"
        ),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let outcome = verify::run(args.seed, args.samples, args.inject_fault);
    print!("{}", outcome.report);
    if outcome.passed {
        Ok(())
    } else {
        Err(CliError::Verification("verification failed".into()))
    }
}

pub(crate) fn create_output(path: &PathBuf) -> Result<std::io::BufWriter<std::fs::File>, CliError> {
    std::fs::File::create(path)
        .map(std::io::BufWriter::new)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub(crate) fn io_error(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}
