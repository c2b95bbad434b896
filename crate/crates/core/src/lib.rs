//! Qudit state-vector simulation and a protocol laboratory for BB84, a
//! four-dimensional BB84 variant and the six-state protocol, under standard
//! intercept-resend and high-dimensional eavesdropping.
//!
//! The crate is layered bottom-up:
//!
//! - [`qudit`]: dense complex states, unitaries, composite registers,
//!   Born-rule measurement and counter-based randomness.
//! - [`gates`]: every unitary the protocols use, conversion circuits and the
//!   gate property suite.
//! - [`protocols`]: per-particle encode / intercept / decode and whole trials.
//! - [`analysis`]: QBER, eavesdropper knowledge, aggregation, detection
//!   probability.
//! - [`experiment`]: the protocol × scenario × eavesdropper grid.

pub mod analysis;
pub mod error;
pub mod experiment;
pub mod gates;
pub mod protocols;
pub mod qudit;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use qudit::{RandomSource, Register, StateVector, Stream, StreamTag, UnitaryMatrix};
