use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Checks, scans, tables and fits for the KCBS inequality on spin-1 systems.
#[derive(Debug, Parser)]
#[command(name = "kcbs", version)]
pub struct Cli {
    /// Read and print angles in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,

    /// Output format; the default depends on the subcommand.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the operator-identity checks; exits 1 if any fails.
    Verify,
    /// Expectation of the rotated KCBS operator in one state.
    Expect(ExpectArgs),
    /// Sample a closed-form expectation curve.
    Curve(CurveArgs),
    /// Expectation over a (θ, φ) grid of retrits.
    ScanSphere(ScanArgs),
    /// Contextual / non-contextual angle windows.
    Windows {
        #[command(subcommand)]
        kind: WindowsKind,
    },
    /// Maximally violating retrits at α = 0 for β = kπ/16.
    Table1 {
        /// Follow the antipodal branch seeded at (π/2, π/2).
        #[arg(long)]
        antipodal: bool,
    },
    /// Least-squares trendline through the table rows.
    Fit(FitArgs),
    /// Minimum over retrits at fixed (α, β).
    Minimize(Rotation),
}

#[derive(Debug, Args)]
pub struct Rotation {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Debug, Args)]
pub struct ExpectArgs {
    /// zero | plus | minus | psi | retrit θ φ | qutrit a b c | qutrit re im re im re im
    #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
    pub state: Vec<String>,
    #[command(flatten)]
    pub rotation: Rotation,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveKind {
    /// ⟨0|S′|0⟩ against β.
    Zero,
    /// ⟨±1|S′|±1⟩ against β.
    Pm,
    /// ⟨ψ|S′|ψ⟩ for ψ = (|1⟩ + |−1⟩)/√2 over an (α, β) grid.
    Psi,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(value_enum)]
    pub kind: CurveKind,
    /// Samples per angle over [0, 2π] [default: 361, or 73 for psi]
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub rotation: Rotation,
    #[arg(long, default_value_t = 91, value_parser = clap::value_parser!(u32).range(2..))]
    pub n_theta: u32,
    #[arg(long, default_value_t = 181, value_parser = clap::value_parser!(u32).range(2..))]
    pub n_phi: u32,
}

#[derive(Debug, Subcommand)]
pub enum WindowsKind {
    /// β windows of the state |0⟩.
    Zero,
    /// β windows where no retrit violates the bound, at fixed α.
    Retrit {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// Scan step in β before bisection [default: 0.1°]
        #[arg(long)]
        beta_step: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FitKind {
    /// φ = c0 + c1 β
    Phi,
    /// φ = c0 + c1 β + c2 sin 2β
    PhiCorrected,
    /// θ = d0 + d1 sin β
    Theta,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(value_enum)]
    pub model: FitKind,
    /// Fit only rows with β ≤ this value.
    #[arg(long, allow_negative_numbers = true)]
    pub beta_max: Option<f64>,
}
