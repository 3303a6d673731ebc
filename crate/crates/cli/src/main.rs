//! Exact Hankel-ladder interpolation toolkit, command-line front end.
//!
//! Five subcommands cover the library surface: `hankel` (raw ladder),
//! `interp` (dense interpolation), `correct` (error-correcting decoding),
//! `rational` (rational interpolation), `resultant` (resultants from
//! samples or coefficients). All payloads are JSON with sorted keys and
//! canonical scalar text; exit status 0 = success, 1 = domain failure,
//! 2 = input or usage failure.

mod input;
mod output;
mod run;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "hankel-interp", version, about = "exact interpolation through Hankel minors")]
pub struct Cli {
    /// Field: "rational" (default) or a prime modulus such as 10007
    #[arg(long, global = true)]
    pub field: Option<String>,

    /// Write the JSON payload to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Add descending-power display strings next to coefficient arrays
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Hankel polynomial ladder of a generator sequence
    Hankel {
        /// Sequence file: {"field": ..., "entries": ["1", "1", "2", ...]}
        #[arg(long)]
        seq: PathBuf,
        /// Highest order to compute (default: floor(entries / 2))
        #[arg(long)]
        kmax: Option<usize>,
        /// Force the naive determinant expansion instead of the recursion
        #[arg(long)]
        naive: bool,
    },
    /// Dense polynomial through every row of a table
    Interp {
        /// Table file: JSON {"field", "nodes", "values"} or CSV rows x,y
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Hankel)]
        method: Method,
    },
    /// Decode a redundant table with up to floor(redundancy/2) bad rows
    Correct {
        #[arg(long)]
        table: PathBuf,
        /// Generator degree; omit to infer it from the table
        #[arg(long)]
        degree: Option<usize>,
        /// Cap on the number of corrupted rows to consider
        #[arg(long)]
        max_errors: Option<usize>,
    },
    /// Rational interpolant r_{n,m} with n + m = rows - 1
    Rational {
        #[arg(long)]
        table: PathBuf,
        /// Numerator degree n of the single interpolant to compute
        #[arg(long, conflicts_with = "all")]
        num_degree: Option<usize>,
        /// Compute the whole family n = 0 .. rows-1
        #[arg(long)]
        all: bool,
    },
    /// Resultant of two polynomials, from ratio samples or coefficients
    Resultant {
        /// Ratio file {"field", "nodes", "ratios"} (sample mode)
        #[arg(long, requires = "num_degree", requires = "den_degree")]
        table: Option<PathBuf>,
        /// Declared numerator degree n (sample mode)
        #[arg(long)]
        num_degree: Option<usize>,
        /// Declared denominator degree m (sample mode)
        #[arg(long)]
        den_degree: Option<usize>,
        /// First polynomial file {"field", "coefficients"} (coefficient mode)
        #[arg(long, requires = "q", conflicts_with = "table")]
        p: Option<PathBuf>,
        /// Second polynomial file (coefficient mode)
        #[arg(long)]
        q: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Lagrange,
    Sigma,
    Hankel,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                e.exit()
            }
            _ => {
                output::emit_error("usage", e.to_string().trim_end());
                std::process::exit(2);
            }
        },
    };
    std::process::exit(run::execute(cli));
}
