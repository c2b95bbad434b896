use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Independent random streams, one per (trial, party role).
///
/// Alice's and Bob's choices live in their own streams so that a trial's
/// legitimate-party randomness is identical whatever scenario or eavesdropper
/// is simulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum StreamTag {
    AliceChoices = 0,
    BobChoices = 1,
    BobMeasurement = 2,
    EveChoices = 3,
    EveMeasurement = 4,
    Auxiliary = 5,
}

/// Counter-based randomness addressed by `(seed, trial, tag, draw index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSource {
    seed: u64,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self, trial: u64, tag: StreamTag) -> Stream {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.seed.to_le_bytes());
        key[8..16].copy_from_slice(&trial.to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(tag as u64);
        Stream { rng, draws: 0 }
    }
}

/// A single party's stream. Every primitive consumes exactly one 64-bit draw,
/// so draw `n` of a stream is always the same value regardless of which
/// primitives were used to consume draws `0..n`.
#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
    draws: u64,
}

impl Stream {
    pub fn next_u64(&mut self) -> u64 {
        self.draws += 1;
        self.rng.next_u64()
    }

    /// Draw `index` of this stream without advancing it.
    pub fn draw_at(&self, index: u64) -> u64 {
        let mut rng = self.rng.clone();
        rng.set_word_pos(u128::from(index) * 2);
        rng.next_u64()
    }

    /// Number of draws consumed so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..n`. `n` must be non-zero.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0, "below(0)");
        ((u128::from(self.next_u64()) * n as u128) >> 64) as usize
    }

    pub fn bit(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}
