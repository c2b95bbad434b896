//! Running many trials of one configuration, and the full result grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{aggregate, AggregateStats, TrialResult};
use crate::error::{Error, Result};
use crate::protocols::{run_trial, EveModel, Protocol, ProtocolSpec, Scenario};
use crate::qudit::RandomSource;

pub const DEFAULT_TRIALS: usize = 25;
pub const DEFAULT_RAW_BITS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellConfig {
    pub protocol: Protocol,
    pub scenario: Scenario,
    pub eve: EveModel,
    pub trials: usize,
    pub raw_bits: usize,
    pub seed: u64,
}

impl CellConfig {
    pub fn new(protocol: Protocol, scenario: Scenario, eve: EveModel, seed: u64) -> Self {
        Self {
            protocol,
            scenario,
            eve,
            trials: DEFAULT_TRIALS,
            raw_bits: DEFAULT_RAW_BITS,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        self.eve.check_pairing(self.scenario)?;
        let spec = ProtocolSpec::of(self.protocol);
        if self.raw_bits == 0 || !self.raw_bits.is_multiple_of(spec.bits_per_particle) {
            return Err(Error::Config(format!(
                "raw bits must be a positive multiple of {} for {}",
                spec.bits_per_particle, self.protocol
            )));
        }
        Ok(())
    }

    /// Row label in the results tables, e.g. `"Scenario 1_E"`.
    pub fn row_label(&self) -> String {
        let base = self.scenario.label();
        if self.eve == EveModel::None {
            base.to_string()
        } else {
            format!("{base}_E")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub config: CellConfig,
    pub trials: Vec<TrialResult>,
    pub aggregate: AggregateStats,
}

/// Runs `config.trials` trials in parallel; results are ordered by trial index
/// and independent of thread scheduling.
pub fn run_cell(config: &CellConfig) -> Result<CellResult> {
    config.validate()?;
    let spec = ProtocolSpec::of(config.protocol);
    let rng = RandomSource::new(config.seed);
    let trials = (0..config.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(&spec, config.scenario, config.eve, config.raw_bits, &rng, t).map(|o| o.result))
        .collect::<Result<Vec<_>>>()?;
    let aggregate = aggregate(&trials)?;
    Ok(CellResult {
        config: *config,
        trials,
        aggregate,
    })
}

/// The six table rows for one protocol: each scenario without and with its
/// eavesdropper, in table order.
pub fn table_rows(protocol: Protocol, seed: u64) -> Vec<CellConfig> {
    let without = Scenario::ALL.map(|s| CellConfig::new(protocol, s, EveModel::None, seed));
    let with = Scenario::ALL.map(|s| CellConfig::new(protocol, s, EveModel::attacker_for(s), seed));
    without.into_iter().chain(with).collect()
}

/// Every protocol's table.
pub fn run_grid(seed: u64) -> Result<Vec<(Protocol, Vec<CellResult>)>> {
    Protocol::ALL
        .iter()
        .map(|&p| {
            let cells = table_rows(p, seed).iter().map(run_cell).collect::<Result<Vec<_>>>()?;
            Ok((p, cells))
        })
        .collect()
}
