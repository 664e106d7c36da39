//! Command-line interface over the algebra library: compute graded
//! components (persistently cached), run verification suites, and apply
//! structural maps to serialized series.
//!
//! Exit codes: 0 on success, 1 on a failed verification or an algebraic
//! precondition (e.g. theta on a non-inert element), 2 on bad arguments or
//! malformed input.

mod apply;
mod cache;
mod compute;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "dsl",
    version,
    about = "Exact computations in the double shuffle Lie algebra"
)]
struct Cli {
    /// Highest degree driven by the verification suites.
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,

    /// Cache directory; falls back to $DSL_CACHE, then the platform cache.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Seed for the randomized suites; falls back to $DSL_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graded component and print its dimension and basis.
    Compute {
        /// Which graded family to compute.
        #[arg(value_enum)]
        object: compute::Object,
        /// Homogeneous degree (at least 2).
        #[arg(long)]
        degree: usize,
    },
    /// Run a verification suite and print its report.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: suites::Suite,
    },
    /// Apply a structural map to a serialized series.
    Apply {
        /// Which map to apply.
        #[arg(value_enum)]
        map: apply::Map,
        /// JSON input file: a series, or a two-element array for ihara.
        input: PathBuf,
    },
}

/// Failures after argument parsing. `Check` is a failed verification or an
/// algebraic precondition (exit 1); `Input` is malformed input (exit 2).
enum Failure {
    Check(String),
    Input(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Compute { object, degree } => compute::run(*object, *degree, cli),
        Command::Verify { suite } => suites::run(*suite, cli),
        Command::Apply { map, input } => apply::run(*map, input, cli),
    }
}

impl Cli {
    /// Seed resolution: flag, then $DSL_SEED, then 0.
    fn resolved_seed(&self) -> u64 {
        if let Some(seed) = self.seed {
            return seed;
        }
        match std::env::var("DSL_SEED") {
            Ok(raw) => raw.parse().unwrap_or_else(|_| {
                eprintln!("warning: ignoring unparseable DSL_SEED {raw:?}");
                0
            }),
            Err(_) => 0,
        }
    }
}
