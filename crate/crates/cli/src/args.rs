use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hdqkd_core::experiment::{DEFAULT_RAW_BITS, DEFAULT_TRIALS};
use hdqkd_core::protocols::{EveModel, Protocol, Scenario};

pub const SEED_ENV: &str = "HDQKD_SEED";
pub const DEFAULT_SEED: u64 = 2024;

#[derive(Debug, Parser)]
#[command(name = "hdqkd", version, about = "High-dimensional eavesdropping experiments on BB84, HD-BB84 and SSP")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run repeated trials of one protocol configuration.
    Run(RunArgs),
    /// Check every gate in the catalog and the basis candidates.
    ValidateGates(ValidateArgs),
    /// Run the full result grid and write the tables and QBER figure data as CSV.
    ReproducePaper(ReproduceArgs),
    /// Print the eavesdropper dimension d_e = d_ab * b for each protocol.
    HypothesisTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProtocolArg {
    Bb84,
    Hdbb84,
    Ssp,
}

impl From<ProtocolArg> for Protocol {
    fn from(p: ProtocolArg) -> Self {
        match p {
            ProtocolArg::Bb84 => Protocol::Bb84,
            ProtocolArg::Hdbb84 => Protocol::HdBb84,
            ProtocolArg::Ssp => Protocol::Ssp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScenarioArg {
    Control,
    Conv,
    Relabel,
}

impl From<ScenarioArg> for Scenario {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Control => Scenario::Control,
            ScenarioArg::Conv => Scenario::Conversion,
            ScenarioArg::Relabel => Scenario::Relabel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EveArg {
    None,
    Standard,
    Hd,
}

impl From<EveArg> for EveModel {
    fn from(e: EveArg) -> Self {
        match e {
            EveArg::None => EveModel::None,
            EveArg::Standard => EveModel::Standard,
            EveArg::Hd => EveModel::Hd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub protocol: ProtocolArg,
    #[arg(long, value_enum, default_value = "control")]
    pub scenario: ScenarioArg,
    #[arg(long, value_enum, default_value = "none")]
    pub eve: EveArg,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_RAW_BITS)]
    pub raw_bits: usize,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Samples per basis-candidate randomness check.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the gate catalog as JSON to this path.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value = "results")]
    pub out_dir: PathBuf,
}
