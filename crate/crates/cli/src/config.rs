use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz_core::partition::PartitionTuple;
use hurwitz_core::verify::Suite;

use crate::CliError;

/// Largest `2g - 2 + n` accepted anywhere.
pub const MAX_CHI: u32 = 8;
/// Largest `|μ|` (and wave-function truncation) accepted anywhere.
pub const MAX_DEGREE: u32 = 12;
/// The oracle refuses sweeps with more than this many factorisations.
pub const ORACLE_BUDGET: u64 = 100_000_000;

#[derive(Parser, Debug, Clone)]
#[command(name = "mhurwitz", version, about = "Exact monotone Hurwitz numbers, cross-checked four ways")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Result cache; nothing is cached when unset.
    #[arg(long, global = true, env = "MHURWITZ_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// One monotone Hurwitz number, from one or all pipelines.
    Hurwitz {
        #[arg(long)]
        g: u32,
        /// Comma-separated parts, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Pipeline::Cutjoin)]
        pipeline: Pipeline,
    },
    /// Coefficient polynomials for every stable (g, n) under the caps, plus the f_a table.
    Table {
        #[arg(long, default_value_t = 2)]
        gmax: u32,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        /// Last index of the f_a table.
        #[arg(long, default_value_t = 5)]
        amax: u32,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A correlation differential in the pole basis.
    Omega {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CurveName::Monotone)]
        curve: CurveName,
    },
    /// The wave function on the grid d ≤ D, m ≤ M.
    Wave {
        #[arg(long = "D", default_value_t = 8)]
        d: u32,
        #[arg(long = "M", default_value_t = 8)]
        m: u32,
        #[arg(long, value_enum, default_value_t = WavePipeline::Direct)]
        pipeline: WavePipeline,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        gmax: u32,
        #[arg(long = "D", default_value_t = 8)]
        d: u32,
        #[arg(long = "M", default_value_t = 8)]
        m: u32,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    Oracle,
    Cutjoin,
    Tr,
    All,
}

impl Pipeline {
    pub fn expand(self) -> Vec<Pipeline> {
        match self {
            Pipeline::All => vec![Pipeline::Oracle, Pipeline::Cutjoin, Pipeline::Tr],
            p => vec![p],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::Oracle => "oracle",
            Pipeline::Cutjoin => "cutjoin",
            Pipeline::Tr => "tr",
            Pipeline::All => "all",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum WavePipeline {
    /// Closed-form counts f(d, m).
    Direct,
    /// Free energies from cut-and-join.
    Cutjoin,
    /// Free energies from the spectral curve.
    Tr,
    All,
}

impl WavePipeline {
    pub fn expand(self) -> Vec<WavePipeline> {
        match self {
            WavePipeline::All => vec![WavePipeline::Direct, WavePipeline::Cutjoin, WavePipeline::Tr],
            p => vec![p],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WavePipeline::Direct => "direct",
            WavePipeline::Cutjoin => "cutjoin",
            WavePipeline::Tr => "tr",
            WavePipeline::All => "all",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveName {
    Monotone,
    Airy,
}

fn check_chi(g: u32, n: usize) -> Result<(), CliError> {
    let chi = 2 * g as i64 - 2 + n as i64;
    if chi > MAX_CHI as i64 {
        return Err(CliError::CapExceeded(format!(
            "2g - 2 + n = {chi} for (g, n) = ({g}, {n}); the limit is {MAX_CHI}"
        )));
    }
    Ok(())
}

fn check_degree(what: &str, d: u32) -> Result<(), CliError> {
    if d > MAX_DEGREE {
        return Err(CliError::CapExceeded(format!("{what} = {d}; the limit is {MAX_DEGREE}")));
    }
    Ok(())
}

impl RunConfig {
    /// Caps and argument sanity, before any computation starts.
    pub fn validate(&self) -> Result<(), CliError> {
        match &self.command {
            Command::Hurwitz { g, mu, .. } => {
                if mu.is_empty() || mu.contains(&0) {
                    return Err(CliError::Usage("--mu needs one or more positive parts".into()));
                }
                check_chi(*g, mu.len())?;
                check_degree("|μ|", mu.iter().sum())
            }
            Command::Table { gmax, nmax, .. } => {
                if *nmax == 0 {
                    return Err(CliError::Usage("--nmax must be at least 1".into()));
                }
                check_chi(*gmax, *nmax)
            }
            Command::Omega { g, n, .. } => {
                if !hurwitz_core::spectral::is_stable(*g, *n) || *n == 0 {
                    return Err(CliError::Usage(format!("(g, n) = ({g}, {n}) is not stable")));
                }
                check_chi(*g, *n)
            }
            Command::Wave { d, m, pipeline } => {
                check_degree("D", *d)?;
                check_degree("M", *m)?;
                if pipeline.expand().contains(&WavePipeline::Tr) {
                    check_chi(0, m.saturating_sub(1) as usize + 2)?;
                }
                Ok(())
            }
            Command::Verify { gmax, d, m, .. } => {
                check_chi(*gmax, 3)?;
                check_degree("D", *d)?;
                check_degree("M", *m)
            }
        }
    }

    pub fn mu(&self) -> Option<PartitionTuple> {
        match &self.command {
            Command::Hurwitz { mu, .. } => Some(PartitionTuple::new(mu.clone())),
            _ => None,
        }
    }
}
