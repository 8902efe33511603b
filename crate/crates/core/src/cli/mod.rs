//! The `isoindex` command line: `eval`, `map`, `realize`, `selftest`.
//!
//! Exit codes: 0 success, 2 usage, 3 input schema, 4 budget, 5 DISAGREE.

mod commands;
mod mapfile;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::exactalg::RingSpec;
use crate::skewmap::{EnumerationLimits, IsotropyOptions, DEFAULT_BUDGET};

pub use crate::manifolds::parse_expr;
pub use commands::{cmd_eval, cmd_map, cmd_realize};
pub use mapfile::{entry_json, map_from_json, parse_map, write_map};
pub use selftest::{cmd_selftest, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCHEMA: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_DISAGREE: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "isoindex", version, about = "Isotropy indices and rank sets of cup products and skew maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficients: Z, Q, GF(p) or GF(p,k)
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Cross-check against brute-force enumeration (finite fields)
    #[arg(long, global = true)]
    pub brute_check: bool,
    /// Print one maximal isotropic witness per rank
    #[arg(long, global = true)]
    pub witnesses: bool,
    #[arg(long, global = true)]
    pub json: bool,
    /// Enumeration budget
    #[arg(long, global = true, env = "ISOINDEX_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Greedy restarts for maps over Z and Q
    #[arg(long, global = true, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
    pub restarts: u32,
    /// realize: use the 3-dimensional construction for GF(2)
    #[arg(long, global = true)]
    pub dim3_mod2: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a manifold expression, e.g. "Sg(2) x S(1)"
    Eval { expr: String },
    /// Analyse a skew map stored as JSON
    Map { path: PathBuf },
    /// Build a manifold with isotropy index h and first Betti number b
    Realize { h: u64, b: u64 },
    /// Run the fixture corpus and seeded property checks
    Selftest,
}

/// Validated job settings shared by all commands.
#[derive(Clone, Debug)]
pub struct JobConfig {
    /// Ring given on the command line, if any.
    pub ring: Option<RingSpec>,
    pub brute_check: bool,
    pub witnesses: bool,
    pub json: bool,
    pub budget: u64,
    pub seed: u64,
    pub restarts: u32,
    pub dim3_mod2: bool,
}

impl JobConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let ring = cli.ring.as_deref().map(str::parse).transpose()?;
        if cli.budget == 0 || cli.restarts == 0 {
            return Err(Error::InvalidArgument("budget and restarts must be >= 1".into()));
        }
        Ok(JobConfig {
            ring,
            brute_check: cli.brute_check,
            witnesses: cli.witnesses,
            json: cli.json,
            budget: cli.budget,
            seed: cli.seed,
            restarts: cli.restarts,
            dim3_mod2: cli.dim3_mod2,
        })
    }

    pub fn ring_or_rationals(&self) -> RingSpec {
        self.ring.clone().unwrap_or_else(RingSpec::rationals)
    }

    pub fn limits(&self) -> EnumerationLimits {
        EnumerationLimits::with_budget(self.budget)
    }

    pub fn isotropy_options(&self) -> IsotropyOptions {
        IsotropyOptions { limits: self.limits(), restarts: self.restarts, seed: self.seed }
    }
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            ring: None,
            brute_check: false,
            witnesses: false,
            json: false,
            budget: DEFAULT_BUDGET,
            seed: 0,
            restarts: 32,
            dim3_mod2: false,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::DimensionLimit { .. } => EXIT_BUDGET,
        Error::Schema { .. }
        | Error::Antisymmetry { .. }
        | Error::NonzeroDiagonal { .. }
        | Error::NotRepresentable { .. }
        | Error::DimensionMismatch { .. }
        | Error::RingMismatch { .. } => EXIT_SCHEMA,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let config = match JobConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &cli.command {
        Command::Eval { expr } => cmd_eval(&config, expr, out),
        Command::Map { path } => match std::fs::read_to_string(path) {
            Ok(text) => cmd_map(&config, &text, out),
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return EXIT_SCHEMA;
            }
        },
        Command::Realize { h, b } => cmd_realize(&config, *h, *b, out),
        Command::Selftest => cmd_selftest(&config, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
