#[macro_use]
mod output;
mod commands;
mod input;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superdom::SolverConfig;

use commands::{ComputeArgs, EnumerateArgs, ProductArgs, SweepArgs, VerifyArgs, VizingArgs};

/// Exact super domination numbers, companion invariants and bound checks.
#[derive(Debug, Parser)]
#[command(name = "superdom", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// γ_sp with its certificate, plus any requested invariants
    Compute(ComputeArgs),
    /// Evaluate every per-graph bound on one graph
    Verify(VerifyArgs),
    /// Evaluate the Cartesian product bounds for two factors
    Product(ProductArgs),
    /// Run the per-graph bounds over a corpus
    Sweep(SweepArgs),
    /// List S(G), P(S) and λ(G)
    Enumerate(EnumerateArgs),
    /// Search for pairs with γ_sp(G□H) < γ_sp(G)γ_sp(H)
    Vizing(VizingArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Wall-clock budget per γ_sp search, in milliseconds
    #[arg(long, global = true, env = "SUPERDOM_TIMEOUT_MS")]
    timeout_ms: Option<u64>,
    /// Node budget per γ_sp search
    #[arg(long, global = true, env = "SUPERDOM_NODE_LIMIT")]
    node_limit: Option<u64>,
    /// Largest order for the brute-force oracle
    #[arg(long, global = true, env = "SUPERDOM_BRUTEFORCE_CAP", default_value_t = 18,
          value_parser = clap::value_parser!(u64).range(1..))]
    bruteforce_cap: u64,
    /// Largest order for S(G) / P(S) / λ enumeration
    #[arg(long, global = true, env = "SUPERDOM_ENUMERATION_CAP", default_value_t = 12,
          value_parser = clap::value_parser!(u64).range(1..))]
    enumeration_cap: u64,
    /// Largest order for secure domination
    #[arg(long, global = true, env = "SUPERDOM_SECURE_CAP", default_value_t = 20,
          value_parser = clap::value_parser!(u64).range(1..))]
    secure_cap: u64,
    /// Worker threads for corpus runs
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

impl Common {
    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            bruteforce_cap: self.bruteforce_cap as usize,
            enumeration_cap: self.enumeration_cap as usize,
            secure_cap: self.secure_cap as usize,
            timeout: self.timeout_ms.map(Duration::from_millis),
            node_limit: self.node_limit,
        }
    }

    pub fn workers(&self) -> usize {
        self.workers as usize
    }
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const TIMEOUT: u8 = 3;
    pub const VIOLATION: u8 = 4;
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<superdom::Error>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        exit::INPUT
    } else {
        exit::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => commands::compute(a, &cli.common),
        Command::Verify(a) => commands::verify(a, &cli.common),
        Command::Product(a) => commands::product(a, &cli.common),
        Command::Sweep(a) => commands::sweep(a, &cli.common),
        Command::Enumerate(a) => commands::enumerate(a, &cli.common),
        Command::Vizing(a) => commands::vizing(a, &cli.common),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        // a closed downstream pipe is not our failure
        Err(err) if err.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::from(exit::OK)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
