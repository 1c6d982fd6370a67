use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "covertool",
    version,
    about = "Partial t-cover ideals and the associated primes of their powers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of J_t(G) (or J(H) with --hyper).
    Ideal(IdealArgs),
    /// Associated primes of J_t(G)^s.
    Ass(AssArgs),
    /// Ass(J_t(G)^s) for s up to --smax, persistence and the index of stability.
    Stability(StabilityArgs),
    /// The explicit witness for the maximal ideal of J_t(K_{1,n})^s.
    Witness(WitnessArgs),
    /// The chromatic gap for the hypergraph family H_m.
    Gap(GapArgs),
    /// Every valid t of a graph, or of the built-in tree corpus.
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Direct,
    Localized,
    Both,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Common {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Lift the size caps (s <= 6, at most 12 variables, m <= 3).
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Also print the generalized edge ideal (the Alexander dual).
    #[arg(long)]
    pub dual: bool,
    /// Read a hypergraph and print its cover ideal.
    #[arg(long)]
    pub hyper: bool,
    #[command(flatten)]
    pub common: Common,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct AssArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub s: usize,
    /// Compare with the closed form (trees only).
    #[arg(long)]
    pub predict: bool,
    #[arg(long, value_enum, default_value_t)]
    pub mode: Mode,
    #[command(flatten)]
    pub common: Common,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct StabilityArgs {
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    #[arg(long, default_value_t = 4)]
    pub smax: usize,
    /// Read a hypergraph and study its cover ideal.
    #[arg(long)]
    pub hyper: bool,
    #[command(flatten)]
    pub common: Common,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub s: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct GapArgs {
    #[arg(long)]
    pub m: usize,
    /// Oracle depth; defaults to astab + 1.
    #[arg(long)]
    pub smax: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Only this t.
    #[arg(long)]
    pub t: Option<usize>,
    /// Largest power; defaults to astab + 1 on trees and 3 otherwise.
    #[arg(long)]
    pub smax: Option<usize>,
    /// `localized` or `both` adds the localized computation.
    #[arg(long, value_enum, default_value_t)]
    pub mode: Mode,
    #[command(flatten)]
    pub common: Common,
    pub file: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Ideal(a) => commands::ideal(&a),
        Command::Ass(a) => commands::ass(&a),
        Command::Stability(a) => commands::stability(&a),
        Command::Witness(a) => commands::witness(&a),
        Command::Gap(a) => commands::gap(&a),
        Command::Sweep(a) => commands::sweep(&a),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
