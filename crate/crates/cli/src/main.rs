//! `coxlab`: exact analysis of Coxeter diagrams from the command line.
//!
//! Exit codes: 0 analysis completed (and the certificate passed), 1 analysis
//! completed with a failing certificate, 2 usage or input error, 3 I/O error.

mod commands;
mod tables;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "coxlab", version, about = "Exact toolkit for Coxeter groups given by labeled diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this path instead of stdout (a directory for `tables all`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Decimal digits for floating output; defaults to $COXLAB_PRECISION or 6.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    /// Graphviz output of the diagram (classify) or nerve 1-skeleton (nerve).
    Dot,
}

/// Exactly one diagram source.
#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Diagram file in the `rank`/`param`/`edge` text format.
    #[arg(short = 'f', long, conflicts_with = "catalog", required_unless_present = "catalog")]
    pub file: Option<PathBuf>,
    /// Built-in table entry as `table:item`.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Parameter value `name=value`; repeatable. Missing values default to
    /// the entry's smallest admissible ones.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, u32)>,
}

fn parse_param(s: &str) -> Result<(String, u32), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let v = v.trim().parse().map_err(|_| format!("`{v}` is not a nonnegative integer"))?;
    Ok((k.trim().to_string(), v))
}

fn parse_range(s: &str) -> Result<(String, u32, u32), String> {
    let (k, r) = s.split_once('=').ok_or_else(|| format!("expected name=lo..hi, got `{s}`"))?;
    let (lo, hi) = r.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{r}`"))?;
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((k.trim().to_string(), lo, hi))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Irreducible type (spherical, affine, Lannér) of each component.
    Classify(Input),
    /// Exact determinant and inertia of the Cosine matrix.
    Signature {
        #[command(flatten)]
        input: Input,
        /// Use the λ-Cosine matrix with this rational λ (`a` or `a/b`).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Gromov hyperbolicity with a witness when it fails.
    Moussong(Input),
    /// Nerve f-vector and join-of-spheres certificate.
    Nerve(Input),
    /// Hypothesis checks with evidence.
    Certify {
        #[command(subcommand)]
        kind: CertifyKind,
    },
    /// The quadratic det C^λ of a diagram with one ∞ edge and its roots.
    Lambda(Input),
    /// Determinants and signatures along a parameter range of a family.
    Sweep {
        #[command(flatten)]
        input: Input,
        /// Range `name=lo..hi`; repeatable, one per swept parameter.
        #[arg(long = "range", value_parser = parse_range, required = true)]
        ranges: Vec<(String, u32, u32)>,
        /// Replace the family's declared bounds by the given ranges.
        #[arg(long)]
        widen: bool,
    },
    /// The two regions of the (p,q)-plane for the first isolated AdS family.
    Region {
        #[arg(long, default_value_t = 40)]
        pmax: u32,
        /// Defaults to `pmax`.
        #[arg(long)]
        qmax: Option<u32>,
    },
    /// Floating-point orbit evidence: ball, limit set, cone and tiling samples.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        length: usize,
        #[arg(long, default_value_t = 1000)]
        lemma_samples: usize,
        #[arg(long, default_value_t = 200)]
        tiling_samples: usize,
        #[arg(long, default_value_t = 5)]
        tiling_length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = coxlab::orbit::TILING_TOL)]
        tol: f64,
        /// Also write the limit points as CSV to this path.
        #[arg(long)]
        limit_csv: Option<PathBuf>,
    },
    /// List the built-in tables, or the entries of one table.
    Catalog { table: Option<String> },
    /// Regenerate computed table content as CSV (`all` for every table).
    Tables { which: String },
}

#[derive(Subcommand, Debug)]
pub enum CertifyKind {
    /// Strictly GHC-regular representation into O(d,2).
    Ghc(Input),
    /// Quasi-Fuchsian representation into O(d+1,1).
    Qf(Input),
    /// Sign conditions for two isolated representations (one ∞ edge).
    Disconnected(Input),
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    pub fn usage(e: impl std::fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Outcome of a completed analysis.
pub struct Outcome {
    pub output: String,
    /// False when a certificate or check was negative.
    pub positive: bool,
}

fn precision(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var("COXLAB_PRECISION") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("COXLAB_PRECISION=`{v}` is not a digit count"))),
        Err(_) => Ok(6),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = precision(cli.precision).and_then(|digits| commands::run(&cli, digits));
    match result {
        Ok(out) => {
            if let Err(Failure::Io(msg)) = commands::emit(&cli, &out.output) {
                eprintln!("error: {msg}");
                return ExitCode::from(3);
            }
            if out.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
