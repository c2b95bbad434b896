use super::ProtocolSpec;
use crate::error::Result;
use crate::qudit::{StateVector, UnitaryMatrix};

fn run(gates: &[UnitaryMatrix], dim: usize) -> Result<StateVector> {
    gates
        .iter()
        .try_fold(StateVector::basis(dim, 0)?, |s, g| g.apply(&s))
}

/// Alice's `d_ab`-level particle: value preparation, then the basis gate.
pub fn encode_particle_control(spec: &ProtocolSpec, value: usize, basis: usize) -> Result<StateVector> {
    let mut gates = spec.value_prep(value)?;
    gates.push(spec.basis_gate(basis)?);
    run(&gates, spec.d_ab)
}

/// Alice's particle on Eve's `d_e`-level qudit, prepared with Qid gates. The
/// result is `c·|value · bases + basis⟩`.
pub fn encode_particle_hd(spec: &ProtocolSpec, value: usize, basis: usize) -> Result<StateVector> {
    let mut gates = spec.qid_value_prep(value)?;
    gates.push(spec.qid_basis_gate(basis)?);
    run(&gates, spec.d_e)
}
