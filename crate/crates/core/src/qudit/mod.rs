//! Dense qudit simulation primitives.
//!
//! Joint indices of a [`Register`] are row-major: slot 0 is the most
//! significant digit. Every gate that acts on more than one slot is defined
//! against that ordering.

mod matrix;
mod register;
mod rng;
mod state;

pub use matrix::UnitaryMatrix;
pub use register::Register;
pub use rng::{RandomSource, Stream, StreamTag};
pub use state::StateVector;

/// Elementwise tolerance for unitarity, normalization and phase comparisons.
pub const TOLERANCE: f64 = 1e-9;
