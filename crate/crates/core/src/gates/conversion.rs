use std::sync::OnceLock;

use super::conditional::{c_phi, chj};
use super::standard::StandardGate;
use super::GateCatalogEntry;
use crate::error::{Error, Result};
use crate::protocols::Protocol;
use crate::qudit::{Register, StateVector, UnitaryMatrix, TOLERANCE};

type Split = fn(usize) -> (usize, usize);

/// Slot layout `[d_e, d1, d2]` of a QidConv gate and the split of Eve's index
/// `k` into the two ancilla digits.
fn conv_layout(protocol: Protocol) -> ([usize; 3], Split) {
    match protocol {
        // (value, basis): k = 2·value + basis.
        Protocol::Bb84 => ([4, 2, 2], |k| (k / 2, k % 2)),
        // (basis qubit, ψ index): k = 2·value + basis.
        Protocol::HdBb84 => ([8, 2, 4], |k| (k % 2, k / 2)),
        // (basis qutrit, value qubit): k = 3·value + basis.
        Protocol::Ssp => ([6, 3, 2], |k| (k % 3, k / 3)),
    }
}

/// The QidConv gate of `protocol`: swaps Eve's index into the two ancilla
/// digits, `|k, x, y⟩ ↦ |split⁻¹(x, y), split(k)⟩`. A permutation, so any
/// input stays unitary; on contract inputs `|k, 0, 0⟩` it yields
/// `|0, split(k)⟩`.
pub fn qid_conv(protocol: Protocol) -> GateCatalogEntry {
    let ([de, d1, d2], split) = conv_layout(protocol);
    let mut unsplit = vec![0; de];
    for k in 0..de {
        let (x, y) = split(k);
        unsplit[x * d2 + y] = k;
    }
    let n = de * d1 * d2;
    let images: Vec<usize> = (0..n)
        .map(|j| {
            let (k, x, y) = (j / (d1 * d2), (j / d2) % d1, j % d2);
            let (a, b) = split(k);
            (unsplit[x * d2 + y] * d1 + a) * d2 + b
        })
        .collect();
    let matrix = UnitaryMatrix::permutation(&images).expect("QidConv is a bijection");
    let actions = (0..de)
        .map(|k| {
            let (a, b) = split(k);
            super::Action {
                input: k * d1 * d2,
                output: StateVector::basis(n, a * d2 + b).expect("in range"),
            }
        })
        .collect();
    let name = match protocol {
        Protocol::Bb84 => "QidConv1",
        Protocol::HdBb84 => "QidConv2",
        Protocol::Ssp => "QidConv3",
    };
    GateCatalogEntry::new(name, vec![de, d1, d2], matrix, actions)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConversionStep {
    pub label: &'static str,
    pub gate: UnitaryMatrix,
    pub targets: Vec<usize>,
}

/// Circuit turning Eve's `d_e`-level qudit `|k⟩` into the physical
/// low-dimensional state that `k` stands for, on a designated output slot.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionCircuit {
    protocol: Protocol,
    slots: Vec<usize>,
    output_slot: usize,
    steps: Vec<ConversionStep>,
}

impl ConversionCircuit {
    pub fn for_protocol(protocol: Protocol) -> Self {
        let conv = qid_conv(protocol).matrix;
        let step = |label, gate, targets: &[usize]| ConversionStep {
            label,
            gate,
            targets: targets.to_vec(),
        };
        match protocol {
            Protocol::Bb84 => {
                // Qudit, value ancilla, basis ancilla, target qubit.
                let x = StandardGate::X.matrix();
                let id = UnitaryMatrix::identity(2);
                let cch = UnitaryMatrix::direct_sum(&[&id, &id, &id, &StandardGate::H.matrix()]);
                let ccx = UnitaryMatrix::direct_sum(&[&id, &id, &id, &x]);
                Self {
                    protocol,
                    slots: vec![4, 2, 2, 2],
                    output_slot: 3,
                    steps: vec![
                        step("QidConv1", conv, &[0, 1, 2]),
                        step("X", x.clone(), &[1]),
                        step("CCH", cch.clone(), &[1, 2, 3]),
                        step("X", x.clone(), &[1]),
                        step("X", x.clone(), &[2]),
                        step("CCX", ccx.clone(), &[1, 2, 3]),
                        step("X", x, &[2]),
                        step("CCX", ccx, &[1, 2, 3]),
                        step("CCH", cch, &[1, 2, 3]),
                    ],
                }
            }
            Protocol::HdBb84 => Self {
                protocol,
                slots: vec![8, 2, 4],
                output_slot: 2,
                steps: vec![
                    step("QidConv2", conv, &[0, 1, 2]),
                    step("CPhi", c_phi().matrix, &[1, 2]),
                ],
            },
            Protocol::Ssp => Self {
                protocol,
                slots: vec![6, 3, 2],
                output_slot: 2,
                steps: vec![
                    step("QidConv3", conv, &[0, 1, 2]),
                    step("CHJ", chj().matrix, &[1, 2]),
                ],
            },
        }
    }

    /// Shared instance, built once per protocol.
    pub fn cached(protocol: Protocol) -> &'static Self {
        static CIRCUITS: [OnceLock<ConversionCircuit>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match protocol {
            Protocol::Bb84 => 0,
            Protocol::HdBb84 => 1,
            Protocol::Ssp => 2,
        };
        CIRCUITS[slot].get_or_init(|| Self::for_protocol(protocol))
    }

    pub fn protocol(&self) -> Protocol {
        self.protocol
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn output_slot(&self) -> usize {
        self.output_slot
    }

    pub fn steps(&self) -> &[ConversionStep] {
        &self.steps
    }

    /// `input ⊗ |0…0⟩` over the circuit's slots.
    pub fn attach(&self, input: &StateVector) -> Result<Register> {
        if input.dim() != self.slots[0] {
            return Err(Error::DimensionMismatch {
                expected: self.slots[0],
                found: input.dim(),
            });
        }
        let mut parts = vec![input.clone()];
        parts.extend(self.slots[1..].iter().map(|&d| StateVector::basis(d, 0).unwrap()));
        Register::product(&parts)
    }

    /// Returns Eve's index `k` if `reg` is `c·|k, 0, …, 0⟩`.
    pub fn check_precondition(&self, reg: &Register) -> Result<usize> {
        if reg.slots() != self.slots.as_slice() {
            return Err(Error::Contract(format!(
                "register slots {:?} do not match conversion layout {:?}",
                reg.slots(),
                self.slots
            )));
        }
        let j = reg.state().computational_index(TOLERANCE).ok_or_else(|| {
            Error::Contract("conversion input is not a computational basis state".into())
        })?;
        let digits = reg.digits(j);
        if digits[1..].iter().any(|&d| d != 0) {
            return Err(Error::Contract("conversion ancillas are not |0⟩".into()));
        }
        Ok(digits[0])
    }

    /// Runs the circuit on a register in contract form.
    pub fn convert(&self, reg: &Register) -> Result<Register> {
        self.check_precondition(reg)?;
        self.apply(reg)
    }

    /// Runs the circuit on any register with matching slots.
    pub fn apply(&self, reg: &Register) -> Result<Register> {
        self.steps
            .iter()
            .try_fold(reg.clone(), |r, s| r.apply(&s.gate, &s.targets))
    }

    /// The physical state of the output slot for Eve's index `k`.
    pub fn output_state(&self, k: usize) -> Result<StateVector> {
        let reg = self.attach(&StateVector::basis(self.slots[0], k)?)?;
        self.convert(&reg)?.slot_state(self.output_slot, TOLERANCE)
    }

    /// The whole circuit as one matrix over the register.
    pub fn composite_matrix(&self) -> Result<UnitaryMatrix> {
        let n: usize = self.slots.iter().product();
        let mut columns = Vec::with_capacity(n);
        for j in 0..n {
            let reg = Register::new(self.slots.clone(), StateVector::basis(n, j)?)?;
            columns.push(self.apply(&reg)?.into_state());
        }
        UnitaryMatrix::from_columns(&columns)
    }
}
