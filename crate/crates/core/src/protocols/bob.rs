use super::ProtocolSpec;
use crate::error::{Error, Result};
use crate::gates::ConversionCircuit;
use crate::qudit::{StateVector, Stream};

fn check_dim(state: &StateVector, expected: usize) -> Result<()> {
    if state.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: state.dim(),
        });
    }
    Ok(())
}

/// Decode gate, computational measurement; the outcome is the value.
pub fn bob_decode_control(
    spec: &ProtocolSpec,
    state: &StateVector,
    basis: usize,
    measurement: &mut Stream,
) -> Result<usize> {
    check_dim(state, spec.d_ab)?;
    let decoded = spec.basis_gate(basis)?.apply(state)?;
    Ok(decoded.measure(measurement).0)
}

/// Converts Eve's `d_e`-level qudit to the physical particle, then decodes the
/// output slot as in the control scenario.
pub fn bob_decode_scenario1(
    spec: &ProtocolSpec,
    state: &StateVector,
    basis: usize,
    measurement: &mut Stream,
) -> Result<usize> {
    check_dim(state, spec.d_e)?;
    let circuit = ConversionCircuit::cached(spec.protocol);
    let converted = circuit.convert(&circuit.attach(state)?)?;
    let slot = circuit.output_slot();
    let decoded = converted.apply(&spec.basis_gate(basis)?, &[slot])?;
    Ok(decoded.measure_slot(slot, measurement)?.0)
}

/// Qid decode gate, `d_e`-level measurement, then relabeling: an outcome
/// whose basis flag is 0 carries Bob's value deterministically; any other
/// outcome means Alice used a different basis, so the value is drawn
/// uniformly from Bob's measurement stream.
pub fn bob_decode_scenario2(
    spec: &ProtocolSpec,
    state: &StateVector,
    basis: usize,
    measurement: &mut Stream,
) -> Result<usize> {
    check_dim(state, spec.d_e)?;
    let decoded = spec.qid_basis_gate(basis)?.apply(state)?;
    let (outcome, _) = decoded.measure(measurement);
    let (value, flag) = spec.decode_index(outcome)?;
    Ok(if flag == 0 {
        value
    } else {
        measurement.below(spec.d_ab)
    })
}
