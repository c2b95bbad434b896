//! One key-exchange trial per protocol, scenario and eavesdropper model.
//!
//! Scenarios:
//!
//! - **Control**: Alice sends a `d_ab`-level particle; Bob decodes it directly.
//! - **Conversion**: Alice's particle lives on Eve's `d_e`-level qudit; Bob
//!   first runs the protocol's conversion circuit down to `d_ab` levels.
//! - **Relabel**: Bob measures the `d_e`-level qudit after a Qid decode gate
//!   and maps the outcome back to key bits.

mod bob;
mod encode;
mod eve;
mod sift;
mod spec;
mod trial;

pub use bob::{bob_decode_control, bob_decode_scenario1, bob_decode_scenario2};
pub use encode::{encode_particle_control, encode_particle_hd};
pub use eve::{eve_hd, eve_standard, EveModel, EveObservation, Scenario};
pub use sift::{sift, ParticleRecord, SiftedKey, Sifted, Transcript};
pub use spec::{Protocol, ProtocolSpec};
pub use trial::{alice_draws, run_trial, AliceDraws, TrialOutcome};
