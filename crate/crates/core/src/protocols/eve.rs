use serde::{Deserialize, Serialize};
use std::str::FromStr;

use super::encode::encode_particle_control;
use super::ProtocolSpec;
use crate::error::{Error, Result};
use crate::qudit::{StateVector, Stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Control,
    /// Bob converts the `d_e`-level qudit down to `d_ab` levels before decoding.
    Conversion,
    /// Bob measures the `d_e`-level qudit and relabels the outcome.
    Relabel,
}

impl Scenario {
    pub const ALL: [Scenario; 3] = [Scenario::Control, Scenario::Conversion, Scenario::Relabel];

    pub fn label(self) -> &'static str {
        match self {
            Scenario::Control => "Control",
            Scenario::Conversion => "Scenario 1",
            Scenario::Relabel => "Scenario 2",
        }
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "control" => Ok(Scenario::Control),
            "conv" | "conversion" => Ok(Scenario::Conversion),
            "relabel" => Ok(Scenario::Relabel),
            other => Err(Error::Config(format!("unknown scenario `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EveModel {
    None,
    /// Measure in a random protocol basis and resend (control scenario only).
    Standard,
    /// Measure in Eve's `d_e`-level basis and resend (HD scenarios only).
    Hd,
}

impl EveModel {
    /// The eavesdropper that can attack `scenario`.
    pub fn attacker_for(scenario: Scenario) -> Self {
        match scenario {
            Scenario::Control => EveModel::Standard,
            Scenario::Conversion | Scenario::Relabel => EveModel::Hd,
        }
    }

    pub fn check_pairing(self, scenario: Scenario) -> Result<()> {
        match (self, scenario) {
            (EveModel::None, _) | (EveModel::Standard, Scenario::Control) => Ok(()),
            (EveModel::Hd, Scenario::Conversion | Scenario::Relabel) => Ok(()),
            (eve, sc) => Err(Error::Config(format!(
                "eavesdropper {eve:?} cannot be combined with scenario {sc:?}"
            ))),
        }
    }
}

impl FromStr for EveModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(EveModel::None),
            "standard" => Ok(EveModel::Standard),
            "hd" => Ok(EveModel::Hd),
            other => Err(Error::Config(format!("unknown eavesdropper `{other}`"))),
        }
    }
}

/// What Eve learned about one particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EveObservation {
    pub basis: usize,
    pub outcome: usize,
    /// Eve's inferred value (its bits are her key guess).
    pub value: usize,
}

/// Intercept-resend in a uniformly chosen protocol basis.
pub fn eve_standard(
    spec: &ProtocolSpec,
    incoming: &StateVector,
    choices: &mut Stream,
    measurement: &mut Stream,
) -> Result<(EveObservation, StateVector)> {
    let basis = choices.below(spec.bases);
    let decoded = spec.basis_gate(basis)?.apply(incoming)?;
    let (outcome, _) = decoded.measure(measurement);
    let outgoing = encode_particle_control(spec, outcome, basis)?;
    Ok((
        EveObservation {
            basis,
            outcome,
            value: outcome,
        },
        outgoing,
    ))
}

/// High-dimensional intercept: measure the `d_e`-level qudit directly and
/// resend the collapsed state.
pub fn eve_hd(
    spec: &ProtocolSpec,
    incoming: &StateVector,
    measurement: &mut Stream,
) -> Result<(EveObservation, StateVector)> {
    if incoming.dim() != spec.d_e {
        return Err(Error::DimensionMismatch {
            expected: spec.d_e,
            found: incoming.dim(),
        });
    }
    let (outcome, outgoing) = incoming.measure(measurement);
    let (value, basis) = spec.decode_index(outcome)?;
    Ok((EveObservation { basis, outcome, value }, outgoing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocols::{encode_particle_hd, Protocol};
    use crate::qudit::{RandomSource, StreamTag, TOLERANCE};

    fn streams(seed: u64) -> (Stream, Stream) {
        let r = RandomSource::new(seed);
        (r.stream(0, StreamTag::EveChoices), r.stream(0, StreamTag::EveMeasurement))
    }

    #[test]
    fn pairing_rules() {
        assert!(EveModel::Standard.check_pairing(Scenario::Control).is_ok());
        assert!(EveModel::Standard.check_pairing(Scenario::Relabel).is_err());
        assert!(EveModel::Hd.check_pairing(Scenario::Control).is_err());
        assert!(EveModel::Hd.check_pairing(Scenario::Conversion).is_ok());
        assert!(EveModel::None.check_pairing(Scenario::Relabel).is_ok());
    }

    #[test]
    fn standard_eve_matching_basis_is_transparent() {
        for p in Protocol::ALL {
            let spec = ProtocolSpec::of(p);
            let (mut ch, mut me) = streams(17);
            for _ in 0..200 {
                let v = 1 % spec.d_ab;
                let a_basis = spec.bases - 1;
                let incoming = encode_particle_control(&spec, v, a_basis).unwrap();
                let (obs, out) = eve_standard(&spec, &incoming, &mut ch, &mut me).unwrap();
                if obs.basis == a_basis {
                    assert_eq!(obs.value, v);
                    assert!(out.equal_up_to_global_phase(&incoming, TOLERANCE).unwrap());
                }
            }
        }
    }

    #[test]
    fn standard_eve_wrong_basis_is_random() {
        let spec = ProtocolSpec::of(Protocol::Bb84);
        let (mut ch, mut me) = streams(3);
        let zero = encode_particle_control(&spec, 0, 0).unwrap();
        let (mut diag, mut ones) = (0, 0);
        for _ in 0..4000 {
            let (obs, _) = eve_standard(&spec, &zero, &mut ch, &mut me).unwrap();
            if obs.basis == 1 {
                diag += 1;
                ones += obs.value;
            }
        }
        let f = ones as f64 / diag as f64;
        assert!((f - 0.5).abs() < 0.05, "{f}");
    }

    #[test]
    fn hd_eve_reads_index() {
        let bb84 = ProtocolSpec::of(Protocol::Bb84);
        let (_, mut me) = streams(0);
        let incoming = StateVector::basis(4, 3).unwrap();
        let (obs, out) = eve_hd(&bb84, &incoming, &mut me).unwrap();
        assert_eq!((obs.value, obs.basis), (1, 1));
        assert_eq!(out, incoming);

        let hd = ProtocolSpec::of(Protocol::HdBb84);
        let (obs, _) = eve_hd(&hd, &StateVector::basis(8, 4).unwrap(), &mut me).unwrap();
        assert_eq!((obs.value, obs.basis), (2, 0));
        assert_eq!(hd.value_bits(obs.value), vec![true, false]);

        let ssp = ProtocolSpec::of(Protocol::Ssp);
        for v in 0..2 {
            for b in 0..3 {
                let s = encode_particle_hd(&ssp, v, b).unwrap();
                let (obs, out) = eve_hd(&ssp, &s, &mut me).unwrap();
                assert_eq!((obs.value, obs.basis), (v, b));
                assert!(out.equal_up_to_global_phase(&s, TOLERANCE).unwrap());
            }
        }
        assert!(eve_hd(&ssp, &StateVector::basis(2, 0).unwrap(), &mut me).is_err());
    }
}
