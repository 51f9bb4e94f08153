//! `schubvhs`: classify Schubert variations of Hodge structure from the
//! command line.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_hodge::Error;

#[derive(Parser, Debug)]
#[command(
    name = "schubvhs",
    version,
    about = "Schubert variations of Hodge structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Classify,
    Dim,
    Realform,
    Hodge,
    Cy,
    Icc,
    HomologyCheck,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Schubert VHS `W^φ_I`, with maximal elements flagged.
    Classify(QueryArgs),
    /// Dimension and level counts of the compact dual.
    Dim(QueryArgs),
    /// Real form of the Hodge domain and a Vogan witness.
    Realform(QueryArgs),
    /// Hodge numbers of the representation with highest weight `--weight`.
    Hodge(QueryArgs),
    /// Calabi–Yau test for `--weight`, or for every fundamental weight.
    Cy(QueryArgs),
    /// Invariant characteristic cohomology dimensions and bases.
    Icc(QueryArgs),
    /// Compare brute-force homology against the predicted dimensions.
    HomologyCheck(QueryArgs),
}

#[derive(Args, Debug, Clone)]
pub struct QueryArgs {
    /// Lie type: A, B, C, D, E, F or G.
    #[arg(long = "type", short = 't')]
    pub family: String,
    #[arg(long, short)]
    pub rank: usize,
    /// Marked nodes `I`, 1-based and comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "coeffs",
        required_unless_present = "coeffs"
    )]
    pub nodes: Vec<usize>,
    /// Raw grading coefficients `n_1,…,n_r`.
    #[arg(long, value_delimiter = ',')]
    pub coeffs: Vec<u32>,
    /// Highest weight in fundamental coordinates.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weight: Vec<i64>,
    /// Restrict to one length `ℓ`.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Only the maximal Schubert VHS.
    #[arg(long)]
    pub max_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for parallel enumeration.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Enumeration cap; defaults to `HS_CAP` or one million.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Invalid(_) | Error::InvalidRank { .. } | Error::TrivialGrading => 2,
        Error::CapExceeded { .. } | Error::Guard(_) => 3,
        Error::Inconsistent(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, args) = match cli.command {
        Command::Classify(a) => (CommandKind::Classify, a),
        Command::Dim(a) => (CommandKind::Dim, a),
        Command::Realform(a) => (CommandKind::Realform, a),
        Command::Hodge(a) => (CommandKind::Hodge, a),
        Command::Cy(a) => (CommandKind::Cy, a),
        Command::Icc(a) => (CommandKind::Icc, a),
        Command::HomologyCheck(a) => (CommandKind::HomologyCheck, a),
    };
    if let Some(n) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(4);
        }
    }
    match commands::run(kind, &args) {
        Ok(report) => {
            print!("{}", report.render(args.format));
            ExitCode::from(if report.consistent { 0 } else { 4 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
