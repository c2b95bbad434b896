use super::bob::{bob_decode_control, bob_decode_scenario1, bob_decode_scenario2};
use super::encode::{encode_particle_control, encode_particle_hd};
use super::eve::{eve_hd, eve_standard, EveModel, Scenario};
use super::sift::{sift, ParticleRecord, Sifted, Transcript};
use super::ProtocolSpec;
use crate::analysis::{knowledge, qber, TrialResult};
use crate::error::{Error, Result};
use crate::qudit::{RandomSource, StreamTag};

#[derive(Debug, Clone, PartialEq)]
pub struct AliceDraws {
    pub bits: Vec<bool>,
    pub values: Vec<usize>,
    pub bases: Vec<usize>,
}

/// Alice's raw key and per-particle bases, from her own stream only.
pub fn alice_draws(spec: &ProtocolSpec, raw_bits: usize, rng: &RandomSource, trial: u64) -> Result<AliceDraws> {
    if raw_bits == 0 || !raw_bits.is_multiple_of(spec.bits_per_particle) {
        return Err(Error::Config(format!(
            "raw key length {raw_bits} must be a positive multiple of {} for {}",
            spec.bits_per_particle, spec.protocol
        )));
    }
    let particles = raw_bits / spec.bits_per_particle;
    let mut stream = rng.stream(trial, StreamTag::AliceChoices);
    let bits: Vec<bool> = (0..raw_bits).map(|_| stream.bit()).collect();
    let bases = (0..particles).map(|_| stream.below(spec.bases)).collect();
    let values = bits
        .chunks(spec.bits_per_particle)
        .map(|chunk| spec.bits_value(chunk))
        .collect();
    Ok(AliceDraws { bits, values, bases })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub transcript: Transcript,
    pub sifted: Sifted,
    pub result: TrialResult,
}

fn simulate(
    spec: &ProtocolSpec,
    scenario: Scenario,
    eve: EveModel,
    raw_bits: usize,
    rng: &RandomSource,
    trial: u64,
) -> Result<Transcript> {
    eve.check_pairing(scenario)?;
    let alice = alice_draws(spec, raw_bits, rng, trial)?;
    let mut bob_choices = rng.stream(trial, StreamTag::BobChoices);
    let bob_bases: Vec<usize> = (0..alice.values.len()).map(|_| bob_choices.below(spec.bases)).collect();
    let mut bob_meas = rng.stream(trial, StreamTag::BobMeasurement);
    let mut eve_choices = rng.stream(trial, StreamTag::EveChoices);
    let mut eve_meas = rng.stream(trial, StreamTag::EveMeasurement);

    let mut particles = Vec::with_capacity(alice.values.len());
    for ((&value, &basis), &bob_basis) in alice.values.iter().zip(&alice.bases).zip(&bob_bases) {
        let sent = match scenario {
            Scenario::Control => encode_particle_control(spec, value, basis)?,
            Scenario::Conversion | Scenario::Relabel => encode_particle_hd(spec, value, basis)?,
        };
        let (observation, received) = match eve {
            EveModel::None => (None, sent),
            EveModel::Standard => {
                let (o, s) = eve_standard(spec, &sent, &mut eve_choices, &mut eve_meas)?;
                (Some(o), s)
            }
            EveModel::Hd => {
                let (o, s) = eve_hd(spec, &sent, &mut eve_meas)?;
                (Some(o), s)
            }
        };
        let bob_value = match scenario {
            Scenario::Control => bob_decode_control(spec, &received, bob_basis, &mut bob_meas)?,
            Scenario::Conversion => bob_decode_scenario1(spec, &received, bob_basis, &mut bob_meas)?,
            Scenario::Relabel => bob_decode_scenario2(spec, &received, bob_basis, &mut bob_meas)?,
        };
        particles.push(ParticleRecord {
            alice_value: value,
            alice_basis: basis,
            eve: observation,
            bob_basis,
            bob_value,
            kept: basis == bob_basis,
        });
    }
    Ok(Transcript { particles })
}

/// Runs one trial: draw → encode → intercept → decode → sift → score.
///
/// Alice's and Bob's randomness depends only on `(seed, trial)`, so the sifted
/// keys can be compared against the same trial run as Control without Eve;
/// `matches_control` records whether both keys are bit-identical to it.
pub fn run_trial(
    spec: &ProtocolSpec,
    scenario: Scenario,
    eve: EveModel,
    raw_bits: usize,
    rng: &RandomSource,
    trial: u64,
) -> Result<TrialOutcome> {
    let transcript = simulate(spec, scenario, eve, raw_bits, rng, trial)?;
    let sifted = sift(spec, &transcript);

    let matches_control = if (scenario, eve) == (Scenario::Control, EveModel::None) {
        true
    } else {
        let baseline = sift(spec, &simulate(spec, Scenario::Control, EveModel::None, raw_bits, rng, trial)?);
        baseline.alice == sifted.alice && baseline.bob == sifted.bob
    };

    let (knowledge_alice, knowledge_bob) = match &sifted.eve {
        Some(e) => (
            Some(knowledge(e, &sifted.alice.bits)?),
            Some(knowledge(e, &sifted.bob.bits)?),
        ),
        None => (None, None),
    };
    let result = TrialResult {
        trial,
        raw_bits,
        sifted_bits: sifted.alice.len(),
        errors: sifted.alice.bits.iter().zip(&sifted.bob.bits).filter(|(a, b)| a != b).count(),
        qber: qber(&sifted.alice.bits, &sifted.bob.bits)?,
        knowledge_alice,
        knowledge_bob,
        matches_control,
        empty_key: sifted.alice.is_empty(),
    };
    Ok(TrialOutcome {
        transcript,
        sifted,
        result,
    })
}
