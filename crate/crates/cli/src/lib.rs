//! Command-line front end for `coldecay`: parameter sweeps, single
//! trajectories and the invariant suite, all written as CSV.

pub mod evolve;
pub mod sweep;
pub mod table;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use coldecay::verify::Verifier;

use crate::evolve::{run_evolve, EvolveRequest, InitialState};
use crate::sweep::{run_sweep, SweepRequest, Target};
use crate::table::Table;

#[derive(Debug, Parser)]
#[command(
    name = "coldecay",
    version,
    about = "Collective decay of two qubits or qutrits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a figure's parameter grid and write one row per point.
    Sweep(SweepArgs),
    /// Integrate one initial state and write measurements along the trajectory.
    Evolve(EvolveArgs),
    /// Run the invariant suite; exits nonzero if any check fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long)]
    pub r_min: Option<f64>,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long)]
    pub r_steps: Option<usize>,
    #[arg(long)]
    pub n_min: Option<f64>,
    #[arg(long)]
    pub n_max: Option<f64>,
    #[arg(long)]
    pub n_steps: Option<usize>,
    #[arg(long)]
    pub eta_min: Option<f64>,
    #[arg(long)]
    pub eta_max: Option<f64>,
    #[arg(long)]
    pub eta_steps: Option<usize>,
    #[arg(long)]
    pub out: PathBuf,
}

impl SweepArgs {
    pub fn request(&self) -> SweepRequest {
        let mut req = SweepRequest::with_defaults(self.target);
        let set = |slot: &mut f64, v: Option<f64>| *slot = v.unwrap_or(*slot);
        let set_steps = |slot: &mut usize, v: Option<usize>| *slot = v.unwrap_or(*slot);
        set(&mut req.r.min, self.r_min);
        set(&mut req.r.max, self.r_max);
        set_steps(&mut req.r.steps, self.r_steps);
        set(&mut req.n.min, self.n_min);
        set(&mut req.n.max, self.n_max);
        set_steps(&mut req.n.steps, self.n_steps);
        set(&mut req.eta.min, self.eta_min);
        set(&mut req.eta.max, self.eta_max);
        set_steps(&mut req.eta.steps, self.eta_steps);
        req
    }
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long, value_enum)]
    pub initial: InitialState,
    /// Werner weight in [0, 1].
    #[arg(long)]
    pub r: Option<f64>,
    /// Qutrit Werner parameter, at least 1/2.
    #[arg(long)]
    pub eta: Option<f64>,
    /// Mean reservoir occupation N.
    #[arg(long, default_value_t = 0.0)]
    pub n_mean: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    /// Defaults to 0.005/(γ(N+1)).
    #[arg(long)]
    pub dt: Option<f64>,
    /// Defaults to 500/γ; integration stops earlier once stationary.
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
}

impl EvolveArgs {
    pub fn request(&self) -> EvolveRequest {
        EvolveRequest {
            initial: self.initial,
            r: self.r,
            eta: self.eta,
            n_mean: self.n_mean,
            gamma: self.gamma,
            dt: self.dt,
            t_max: self.t_max,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Replace every numeric tolerance with this value.
    #[arg(long)]
    pub tol: Option<f64>,
}

fn write(table: &Table, path: &std::path::Path) -> Result<()> {
    table.write_csv(path)?;
    println!("wrote {} rows to {}", table.rows.len(), path.display());
    Ok(())
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Sweep(args) => {
            let table = run_sweep(&args.request())?;
            write(&table, &args.out)?;
        }
        Command::Evolve(args) => {
            let out = run_evolve(&args.request())?;
            write(&out.table, &args.out)?;
            println!(
                "{} at t = {}",
                if out.converged {
                    "converged"
                } else {
                    "not converged"
                },
                out.final_time
            );
        }
        Command::Verify(args) => {
            if let Some(tol) = args.tol {
                anyhow::ensure!(
                    tol.is_finite() && tol >= 0.0,
                    "--tol must be finite and >= 0"
                );
            }
            let start = Instant::now();
            let results = Verifier {
                tolerance_override: args.tol,
                ..Verifier::default()
            }
            .run();
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!(
                "verify: {}/{} checks passed in {:.1}s",
                results.len() - failed,
                results.len(),
                start.elapsed().as_secs_f64()
            );
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
