use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use super::qid::{hdbb84_phi_gate, PhiVariant};
use super::standard::StandardGate;
use super::{states, GateCatalogEntry};
use crate::error::Error;
use crate::qudit::{Register, StateVector, UnitaryMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionalGate {
    /// Qubit control, four-level target: fixed φ when the control is `|1⟩`.
    CPhi,
    /// Qutrit control, qubit target: `I`, `H` or `J` for control `|0⟩, |1⟩, |2⟩`.
    Chj,
}

impl FromStr for ConditionalGate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "CPhi" => Ok(ConditionalGate::CPhi),
            "CHJ" => Ok(ConditionalGate::Chj),
            other => Err(Error::UnknownGate(other.to_string())),
        }
    }
}

fn joint(control: StateVector, target: StateVector) -> StateVector {
    Register::product(&[control, target])
        .expect("product of valid states")
        .into_state()
}

pub fn c_phi() -> GateCatalogEntry {
    let phi = hdbb84_phi_gate(PhiVariant::Fixed).matrix;
    let matrix = UnitaryMatrix::direct_sum(&[&UnitaryMatrix::identity(4), &phi]);
    let images = (0..8)
        .map(|k| {
            let (c, t) = (k / 4, k % 4);
            let target = StateVector::basis(4, t).unwrap();
            let target = if c == 1 { phi.column(t) } else { target };
            joint(StateVector::basis(2, c).unwrap(), target)
        })
        .collect();
    GateCatalogEntry::from_images("CPhi", vec![2, 4], matrix, images)
}

pub fn chj() -> GateCatalogEntry {
    let matrix = UnitaryMatrix::direct_sum(&[
        &UnitaryMatrix::identity(2),
        &StandardGate::H.matrix(),
        &StandardGate::J.matrix(),
    ]);
    let targets = [
        [states::zero(), states::one()],
        [states::plus(), states::minus()],
        [states::plus_i(), states::minus_i()],
    ];
    let images = (0..6)
        .map(|k| joint(StateVector::basis(3, k / 2).unwrap(), targets[k / 2][k % 2].clone()))
        .collect();
    GateCatalogEntry::from_images("CHJ", vec![3, 2], matrix, images)
}

/// The CHJ unitary transcribed entry by entry, for cross-checking [`chj`].
pub fn chj_literal() -> UnitaryMatrix {
    let s = FRAC_1_SQRT_2;
    let r = |x: f64| Complex64::new(x, 0.0);
    let i = |x: f64| Complex64::new(0.0, x);
    let z = r(0.0);
    UnitaryMatrix::from_rows(vec![
        vec![r(1.0), z, z, z, z, z],
        vec![z, r(1.0), z, z, z, z],
        vec![z, z, r(s), r(s), z, z],
        vec![z, z, r(s), r(-s), z, z],
        vec![z, z, z, z, i(s), r(-s)],
        vec![z, z, z, z, r(s), i(-s)],
    ])
    .expect("CHJ literal is unitary")
}
