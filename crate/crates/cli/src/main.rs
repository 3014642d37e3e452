//! `unref`: command-line access to unrefinable partitions, numerical
//! semigroups and their Young diagrams.
//!
//! Every command prints one JSON envelope on success. Exit codes: 0 success,
//! 1 failed `--assert-*`, 2 invalid input or cap exceeded, 3 internal error
//! (including a disagreement between the two refinability checks).

mod commands;
mod envelope;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Failure, Outcome};
use envelope::Envelope;

#[derive(Parser, Debug)]
#[command(name = "unref", version, about = "Unrefinable partitions and numerical semigroups")]
struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for enumeration (defaults to the available cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a partition into distinct parts is refinable.
    #[command(allow_negative_numbers = true)]
    Check(CheckArgs),
    /// Invariants of a numerical set or semigroup.
    Semigroup(SemigroupArgs),
    /// Young diagram and hook lengths of a numerical set.
    Young(YoungArgs),
    /// Count or list one family of partitions or semigroups.
    Enum(EnumArgs),
    /// Count numerical semigroups by Frobenius number.
    Census(CensusArgs),
    /// Run one of the counting or structural verifiers.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Lattice of unrefinability-preserving insertions above a partition.
    #[command(allow_negative_numbers = true)]
    Lattice(LatticeArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Parts, in increasing order.
    #[arg(required = true)]
    pub parts: Vec<i64>,
    /// Forbidden-vector check only.
    #[arg(long, conflicts_with_all = ["oracle", "both"])]
    pub fast: bool,
    /// Brute-force subset-sum check only.
    #[arg(long, conflicts_with = "both")]
    pub oracle: bool,
    /// Run both and fail with exit 3 if they disagree (the default).
    #[arg(long)]
    pub both: bool,
    /// Include the state of the forbidden vector after every missing part.
    #[arg(long)]
    pub trace: bool,
    /// Exit 1 if the partition is refinable.
    #[arg(long)]
    pub assert_unrefinable: bool,
}

#[derive(Args, Debug)]
pub struct SemigroupArgs {
    /// Gap set, comma-separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with = "generators", required_unless_present = "generators")]
    pub gaps: Option<Vec<i64>>,
    /// Generators, comma-separated; their gcd must be 1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub generators: Option<Vec<i64>>,
    #[command(subcommand)]
    pub query: Option<SemigroupQuery>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub enum SemigroupQuery {
    /// Frobenius number, genus, multiplicity, symmetry (the default).
    Info,
    /// Apéry set with respect to `n`.
    Apery { n: u32 },
    /// Minimal system of generators.
    Msg,
    /// Apéry set at the multiplicity against the forbidden vector of the
    /// gap partition.
    Compare,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Semigroup,
    Unrefinable,
}

#[derive(Args, Debug)]
pub struct YoungArgs {
    /// Gap set, comma-separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    pub gaps: Vec<i64>,
    /// Include hook lengths.
    #[arg(long)]
    pub hooks: bool,
    /// Evaluate a hookset criterion.
    #[arg(long, value_enum)]
    pub criterion: Option<Criterion>,
    /// Print the diagram as text instead of JSON.
    #[arg(long, conflicts_with = "json")]
    pub ascii: bool,
    /// JSON envelope (the default).
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EnumArgs {
    /// Largest part.
    #[arg(long, conflicts_with = "weight", required_unless_present = "weight")]
    pub max_part: Option<u32>,
    /// Weight (sum of the parts).
    #[arg(long)]
    pub weight: Option<u32>,
    /// Required mex, with --max-part; 0 selects partitions with no missing parts.
    #[arg(long, requires = "max_part")]
    pub mex: Option<u32>,
    /// Only partitions with ⌊max_part/2⌋ missing parts, with --max-part.
    #[arg(long, requires = "max_part")]
    pub maximal_missing: bool,
    /// Only the partitions of --weight with the largest possible maximal part.
    #[arg(long, requires = "weight")]
    pub maximal: bool,
    /// Include the members.
    #[arg(long)]
    pub list: bool,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Frobenius numbers, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub frobenius: Vec<u32>,
    /// Only symmetric semigroups.
    #[arg(long)]
    pub symmetric: bool,
    /// Include the gap sets.
    #[arg(long)]
    pub list: bool,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// For primes p > 3, compare the count of partitions with largest part p
    /// and ⌊p/2⌋ missing parts with the count of symmetric semigroups with
    /// Frobenius number p.
    PrimeIdentity {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u32>,
        /// Exit 1 unless every prime agrees.
        #[arg(long)]
        assert_equal: bool,
    },
    /// Mirror, half-exclusion and triple properties at one largest part.
    Mirror {
        #[arg(long)]
        max_part: u32,
    },
    /// Maximal unrefinable partitions at weights T_n, T_n − 3, T_n − 4.
    Maximal {
        #[arg(long)]
        n_max: u32,
    },
}

#[derive(Args, Debug)]
pub struct LatticeArgs {
    /// Parts of the base partition, in increasing order.
    #[arg(required = true)]
    pub parts: Vec<i64>,
    /// Print a Graphviz digraph instead of JSON.
    #[arg(long)]
    pub dot: bool,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let workers = cli
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);

    let (name, outcome) = match &cli.command {
        Command::Check(a) => ("check", commands::check(a)),
        Command::Semigroup(a) => ("semigroup", commands::semigroup(a)),
        Command::Young(a) => ("young", commands::young(a)),
        Command::Enum(a) => ("enum", commands::enumerate(a, workers)),
        Command::Census(a) => ("census", commands::census(a)),
        Command::Verify(v) => ("verify", commands::verify(v, workers)),
        Command::Lattice(a) => ("lattice", commands::lattice(a)),
    };

    match outcome {
        Ok(Outcome { result, diagnostics, text, code }) => {
            let body = match text {
                Some(t) => t,
                None => Envelope::new(name, argv, result, diagnostics).to_json(),
            };
            if let Err(e) = write_out(cli.output.as_ref(), &body) {
                eprintln!("error: {e}");
                return ExitCode::from(3);
            }
            ExitCode::from(code)
        }
        Err(Failure { message, code }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn write_out(path: Option<&PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}
