use serde::{Deserialize, Serialize};

use super::{EveObservation, ProtocolSpec};

/// Everything that happened to one particle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParticleRecord {
    pub alice_value: usize,
    pub alice_basis: usize,
    pub eve: Option<EveObservation>,
    pub bob_basis: usize,
    pub bob_value: usize,
    pub kept: bool,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Transcript {
    pub particles: Vec<ParticleRecord>,
}

/// Key bits with the particle each bit came from.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SiftedKey {
    pub bits: Vec<bool>,
    pub positions: Vec<usize>,
}

impl SiftedKey {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Sifted {
    pub alice: SiftedKey,
    pub bob: SiftedKey,
    /// Eve's guesses at the kept positions, when she was present.
    pub eve: Option<Vec<bool>>,
}

/// Keeps particles where Alice's and Bob's bases agree. Multi-bit particles
/// are kept or dropped as a whole.
pub fn sift(spec: &ProtocolSpec, transcript: &Transcript) -> Sifted {
    let mut out = Sifted {
        eve: transcript
            .particles
            .iter()
            .any(|p| p.eve.is_some())
            .then(Vec::new),
        ..Sifted::default()
    };
    for (i, p) in transcript.particles.iter().enumerate() {
        if p.alice_basis != p.bob_basis {
            continue;
        }
        for (a, b) in spec.value_bits(p.alice_value).into_iter().zip(spec.value_bits(p.bob_value)) {
            out.alice.bits.push(a);
            out.alice.positions.push(i);
            out.bob.bits.push(b);
            out.bob.positions.push(i);
        }
        if let (Some(eve), Some(obs)) = (out.eve.as_mut(), p.eve) {
            eve.extend(spec.value_bits(obs.value));
        }
    }
    out
}
