use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rpoisson",
    version,
    about = "Verify and construct restricted Poisson algebras over F_p"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Random samples per check.
    #[arg(long, global = true, default_value_t = 64)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Degree bound for exhaustive checks over monomials.
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
}

/// Where algebras come from: spec files first, then catalog names.
#[derive(Debug, Clone, Default, Args)]
pub struct SourceArgs {
    /// JSON algebra description.
    #[arg(long)]
    pub spec: Vec<PathBuf>,
    /// Catalog entry name, used instead of a spec file.
    #[arg(long)]
    pub catalog: Vec<String>,
    /// Characteristic for catalog entries.
    #[arg(long)]
    pub p: Option<i64>,
    /// Catalog parameter as NAME=VALUE.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, i64)>,
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {s:?}"))?;
    let v = v.trim().parse().map_err(|e| format!("{v:?}: {e}"))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Poisson,
    Lie,
    Frobenius,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Onesided,
    Symmetric,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites on an algebra.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Tabulate the p-map on basis monomials.
    BuildPmap {
        #[command(flatten)]
        source: SourceArgs,
        /// Write the table to this JSON file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute star-power coefficients and the quantization-derived p-map.
    Quantize {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Polynomial in the algebra's variables.
        #[arg(long)]
        f: String,
    },
    /// Census of tograph classes and the vanishing certificate.
    Tograph {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n: usize,
        /// Polynomial in x, y for the oracle comparison.
        #[arg(long)]
        f: Option<String>,
    },
    /// Tensor product of two algebras.
    Tensor {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Restricted Lie-Rinehart structure on Kähler differentials.
    LieRinehart {
        #[command(flatten)]
        source: SourceArgs,
        /// Drop the anchor correction term from the p-map on forms.
        #[arg(long)]
        without_correction: bool,
    },
    /// Restricted Poisson Hopf structure of a symmetric or truncated algebra.
    Hopf {
        #[command(flatten)]
        source: SourceArgs,
    },
}
