mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperladder::rational::parse_rational;
use hyperladder::{Algebra, ParamPoint};

/// Exact ladder-operator spectra of the superintegrable Hamiltonian on the
/// two-sheet hyperboloid.
#[derive(Parser)]
#[command(name = "hyperladder", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Hamiltonian label; values are exact rationals such as `-5` or `1/2`.
#[derive(Args, Clone)]
struct LabelArgs {
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    l0: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    l1: String,
    #[arg(long, allow_hyphen_values = true)]
    l2: String,
}

impl LabelArgs {
    fn point(&self) -> anyhow::Result<ParamPoint> {
        let parse = |flag: &str, v: &str| parse_rational(v).map_err(|e| anyhow::anyhow!("--{flag}: {e}"));
        Ok(ParamPoint::new(
            parse("l0", &self.l0)?,
            parse("l1", &self.l1)?,
            parse("l2", &self.l2)?,
        ))
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format; each command has its own default.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: hyperladder::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Bound levels of H at a label: energies, degeneracies, witness words.
    Spectrum {
        #[command(flatten)]
        label: LabelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Applies an operator word to the fundamental state at a vertex.
    State {
        #[command(flatten)]
        vertex: LabelArgs,
        /// Operators applied right to left, e.g. "C+ A+".
        #[arg(long, default_value = "1")]
        word: String,
        #[arg(long, default_value = "su21", value_parser = parse_algebra)]
        algebra: Algebra,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Runs the exact identity suite on seeded random probes.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        probes: usize,
        /// Rescales one ladder operator to check that the suite notices.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Representation lattice generated by raising operators from a vertex.
    Lattice {
        #[command(flatten)]
        vertex: LabelArgs,
        #[arg(long, default_value = "su21", value_parser = parse_algebra)]
        algebra: Algebra,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Samples an orthonormalized bound state on a (theta, xi) grid as CSV.
    Sample {
        #[command(flatten)]
        label: LabelArgs,
        /// Energy level, counted from the ground level.
        #[arg(long, default_value_t = 0)]
        level: usize,
        /// State within the level's orthonormal basis.
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// Points per axis.
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Upper end of the xi range.
        #[arg(long, default_value_t = 10.0)]
        cutoff: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compares the algebraic spectrum with finite-difference eigensolves.
    Crosscheck {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long, default_value_t = 2000)]
        grid: usize,
        #[arg(long, default_value_t = 25.0)]
        cutoff: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// How a successful run ended.
pub enum Status {
    Ok,
    /// A verification or tolerance check failed.
    CheckFailed,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Spectrum { label, output } => commands::spectrum(&label.point()?, &output),
        Command::State {
            vertex,
            word,
            algebra,
            output,
        } => commands::state(&vertex.point()?, &word, algebra, &output),
        Command::Verify {
            seed,
            probes,
            corrupt,
            output,
        } => commands::verify(seed, probes, corrupt.as_deref(), &output),
        Command::Lattice {
            vertex,
            algebra,
            depth,
            output,
        } => commands::lattice(&vertex.point()?, algebra, depth, &output),
        Command::Sample {
            label,
            level,
            index,
            grid,
            cutoff,
            output,
        } => commands::sample(&label.point()?, level, index, grid, cutoff, &output),
        Command::Crosscheck {
            label,
            grid,
            cutoff,
            output,
        } => commands::crosscheck(&label.point()?, grid, cutoff, &output),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
