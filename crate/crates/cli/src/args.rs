use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "howe", version, about = "Finite-field point counts, traces and theta tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout. Relative paths resolve against
    /// `HOWE_OUT_DIR` when it is set.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Default directory for output files.
    #[arg(long, global = true, env = "HOWE_OUT_DIR", hide_env_values = true)]
    pub out_dir: Option<PathBuf>,

    /// Worker threads for the enumeration kernels.
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Upper bound on elementary field operations per count.
    #[arg(long, global = true, default_value_t = howe_core::varieties::DEFAULT_BUDGET)]
    pub budget: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Md => "md",
        }
    }
}

#[derive(Clone, Copy, Debug, Args)]
pub struct Field {
    /// Characteristic.
    #[arg(long)]
    pub p: u32,
    /// Exponent, `q = p^e`.
    #[arg(long, default_value_t = 1)]
    pub e: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rational points of a named variety.
    Count {
        #[command(flatten)]
        field: Field,
        /// Variety name (S, Y, Ytilde, X, Sprime, Yprime, Ytildeprime, Xprime,
        /// Xbar, D, Zprime, Zprime0, Uprime).
        #[arg(long, required_unless_present = "torsor")]
        variety: Option<String>,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Relative degree of the field of definition over F_q: 1, 2 or 4.
        #[arg(long, default_value_t = 2)]
        level: u32,
        /// Count the norm-one variety and the Fermat complement, with their ratio.
        #[arg(long, conflicts_with = "variety")]
        torsor: bool,
    },
    /// Run every consistency check for one parameter set.
    Verify {
        #[command(flatten)]
        field: Field,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
    },
    /// Theta correspondence table.
    Howe {
        #[command(flatten)]
        field: Field,
        #[arg(long)]
        n: u32,
        #[arg(long, required_unless_present = "ordinary")]
        ell: Option<u32>,
        /// Characteristic zero coefficients.
        #[arg(long, conflicts_with = "ell")]
        ordinary: bool,
    },
    /// Reductions of ordinary theta lifts against the mod ell table.
    Compare {
        #[command(flatten)]
        field: Field,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
    },
    /// Quadratic Gauss sums of every nontrivial additive character.
    Gauss {
        #[command(flatten)]
        field: Field,
    },
    /// Fixed-point counts on the compact surface for every (eta, zeta).
    FixedPoints {
        #[command(flatten)]
        field: Field,
        /// Only the twists without the unipotent element.
        #[arg(long)]
        without_u: bool,
    },
}

impl Command {
    /// Tabular commands default to CSV, reports to JSON.
    pub fn default_format(&self) -> Format {
        match self {
            Command::Count { .. } | Command::FixedPoints { .. } => Format::Csv,
            _ => Format::Json,
        }
    }
}
