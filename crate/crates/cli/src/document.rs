use serde::{Deserialize, Serialize};

use hdqkd_core::analysis::{AggregateStats, TrialResult};
use hdqkd_core::experiment::{CellConfig, CellResult};
use hdqkd_core::gates::catalog_fingerprint;
use hdqkd_core::protocols::{EveModel, Protocol, Scenario};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub protocol: Protocol,
    pub scenario: Scenario,
    pub eve: EveModel,
    pub trials: usize,
    pub raw_bits: usize,
    pub seed: u64,
}

impl From<&CellConfig> for RunConfig {
    fn from(c: &CellConfig) -> Self {
        Self {
            protocol: c.protocol,
            scenario: c.scenario,
            eve: c.eve,
            trials: c.trials,
            raw_bits: c.raw_bits,
            seed: c.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub key_size: usize,
    pub sift_fraction: f64,
    pub qber: f64,
    pub alice_knowledge: Option<f64>,
    pub bob_knowledge: Option<f64>,
    pub matches: bool,
    pub empty_key: bool,
}

impl From<&TrialResult> for TrialRecord {
    fn from(r: &TrialResult) -> Self {
        Self {
            trial: r.trial,
            key_size: r.sifted_bits,
            sift_fraction: r.sift_fraction(),
            qber: r.qber,
            alice_knowledge: r.knowledge_alice,
            bob_knowledge: r.knowledge_bob,
            matches: r.matches_control,
            empty_key: r.empty_key,
        }
    }
}

/// Means over trials. `matches` is the fraction of trials whose keys equal
/// the same-seed Control baseline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRecord {
    pub trials: usize,
    pub key_size: f64,
    pub sift_fraction: f64,
    pub qber: f64,
    pub alice_knowledge: Option<f64>,
    pub bob_knowledge: Option<f64>,
    pub matches: f64,
}

impl From<&AggregateStats> for AggregateRecord {
    fn from(a: &AggregateStats) -> Self {
        Self {
            trials: a.trials,
            key_size: a.mean_sifted_bits,
            sift_fraction: a.mean_sift_fraction,
            qber: a.mean_qber,
            alice_knowledge: a.mean_knowledge_alice,
            bob_knowledge: a.mean_knowledge_bob,
            matches: a.match_rate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub version: String,
    pub catalog_fingerprint: String,
    pub config: RunConfig,
    pub trials: Vec<TrialRecord>,
    pub aggregate: AggregateRecord,
}

impl ResultDocument {
    pub fn from_cell(cell: &CellResult) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            catalog_fingerprint: catalog_fingerprint(),
            config: RunConfig::from(&cell.config),
            trials: cell.trials.iter().map(TrialRecord::from).collect(),
            aggregate: AggregateRecord::from(&cell.aggregate),
        }
    }
}
