use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use patchkit::precision::DEFAULT_SEED;
use patchkit_cli::{commands, CliError};

#[derive(Parser)]
#[command(name = "patchkit", version, about = "Evaluate, tessellate and certify toric patches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the patch point F(x).
    Eval {
        #[arg(long)]
        input: PathBuf,
        /// Parameter point, comma separated (e.g. 0.5,1/4).
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Write an OBJ mesh of a two-parameter patch.
    Tessellate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        grid: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Linear-precision blending values at a point, by iterative proportional fitting.
    Ipf {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 100_000)]
        max_iter: usize,
    },
    /// Sampled linear-precision report as JSON.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact rational linear-precision test for curves.
    Lp1d {
        /// Weights w_0,...,w_n of the points 0..n.
        #[arg(long, conflicts_with = "input")]
        weights: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Eval { input, at } => commands::eval(&input, &at),
        Command::Tessellate { input, grid, out } => commands::tessellate_to(&input, grid as usize, &out),
        Command::Ipf { input, at, tol, max_iter } => commands::ipf(&input, &at, tol, max_iter),
        Command::Check { input, samples, seed } => commands::check(&input, samples, seed),
        Command::Lp1d { weights, input } => commands::lp1d(weights.as_deref(), input.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("patchkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
