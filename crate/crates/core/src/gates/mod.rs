//! The gate catalog: standard qubit gates, their high-dimensional "Qid"
//! counterparts, conditional gates, conversion circuits and y-basis
//! candidates, plus the property suite that checks all of them.

mod candidates;
mod catalog;
mod conditional;
mod conversion;
mod qid;
mod standard;
pub mod states;
mod validation;

use serde::Serialize;

use crate::error::Result;
use crate::qudit::{StateVector, UnitaryMatrix, TOLERANCE};

pub use candidates::{validate_basis_candidate, BasisCandidate, CandidateLayout, CandidateReport};
pub use catalog::{catalog, catalog_fingerprint, lookup};
pub use conditional::{c_phi, chj, chj_literal, ConditionalGate};
pub use conversion::{qid_conv, ConversionCircuit, ConversionStep};
pub use qid::{
    hdbb84_phi_gate, hdbb84_psi_prep, qid_gate_bb84, qid_gate_hdbb84, qid_gate_ssp,
    HdQidGate, PhiVariant, PsiSymbol, QidBb84, QidSsp,
};
pub use standard::{standard_gate, StandardGate};
pub use validation::{run_property_suite, Check, PropertyReport};

/// One row of a gate's intended action: `|input⟩ ↦ output` up to global phase.
#[derive(Debug, Clone, PartialEq)]
pub struct Action {
    pub input: usize,
    pub output: StateVector,
}

/// A named unitary with the slot dimensions it acts on and the action table it
/// is meant to realize.
#[derive(Debug, Clone, PartialEq)]
pub struct GateCatalogEntry {
    pub name: String,
    pub slots: Vec<usize>,
    pub matrix: UnitaryMatrix,
    pub actions: Vec<Action>,
}

impl GateCatalogEntry {
    pub(crate) fn new(
        name: impl Into<String>,
        slots: Vec<usize>,
        matrix: UnitaryMatrix,
        actions: Vec<Action>,
    ) -> Self {
        Self {
            name: name.into(),
            slots,
            matrix,
            actions,
        }
    }

    /// Entry whose action table is "basis index `k` maps to `images[k]`".
    pub(crate) fn from_images(
        name: impl Into<String>,
        slots: Vec<usize>,
        matrix: UnitaryMatrix,
        images: Vec<StateVector>,
    ) -> Self {
        let actions = images
            .into_iter()
            .enumerate()
            .map(|(input, output)| Action { input, output })
            .collect();
        Self::new(name, slots, matrix, actions)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Checks every action-table row; returns the inputs whose row fails.
    pub fn failing_actions(&self) -> Result<Vec<usize>> {
        let mut failing = Vec::new();
        for a in &self.actions {
            let out = self.matrix.apply(&StateVector::basis(self.dim(), a.input)?)?;
            if !out.equal_up_to_global_phase(&a.output, TOLERANCE)? {
                failing.push(a.input);
            }
        }
        Ok(failing)
    }
}

/// Serializable dump of a catalog entry: entries are `(re, im)` pairs, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateDump {
    pub name: String,
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<(f64, f64)>>,
}

impl From<&GateCatalogEntry> for GateDump {
    fn from(e: &GateCatalogEntry) -> Self {
        let n = e.dim();
        Self {
            name: e.name.clone(),
            dims: e.slots.clone(),
            matrix: (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            let z = e.matrix.get(r, c);
                            (z.re, z.im)
                        })
                        .collect()
                })
                .collect(),
        }
    }
}
