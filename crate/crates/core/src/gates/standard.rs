use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use std::str::FromStr;

use super::{states, GateCatalogEntry};
use crate::error::Error;
use crate::qudit::UnitaryMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardGate {
    X,
    H,
    /// Prepares the circular (y-axis) basis: `J|0⟩ = |i⟩`, `J|1⟩ = |−i⟩`.
    J,
}

impl StandardGate {
    pub const ALL: [StandardGate; 3] = [StandardGate::X, StandardGate::H, StandardGate::J];

    pub fn name(self) -> &'static str {
        match self {
            StandardGate::X => "X",
            StandardGate::H => "H",
            StandardGate::J => "J",
        }
    }

    pub fn matrix(self) -> UnitaryMatrix {
        match self {
            StandardGate::X => UnitaryMatrix::permutation(&[1, 0]),
            StandardGate::H => {
                UnitaryMatrix::from_real(FRAC_1_SQRT_2, &[&[1.0, 1.0], &[1.0, -1.0]])
            }
            StandardGate::J => {
                let s = FRAC_1_SQRT_2;
                UnitaryMatrix::from_rows(vec![
                    vec![Complex64::new(0.0, s), Complex64::new(-s, 0.0)],
                    vec![Complex64::new(s, 0.0), Complex64::new(0.0, -s)],
                ])
            }
        }
        .expect("standard gates are unitary")
    }
}

impl FromStr for StandardGate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "X" => Ok(StandardGate::X),
            "H" => Ok(StandardGate::H),
            "J" => Ok(StandardGate::J),
            other => Err(Error::UnknownGate(other.to_string())),
        }
    }
}

pub fn standard_gate(gate: StandardGate) -> GateCatalogEntry {
    let images = match gate {
        StandardGate::X => vec![states::one(), states::zero()],
        StandardGate::H => vec![states::plus(), states::minus()],
        StandardGate::J => vec![states::plus_i(), states::minus_i()],
    };
    GateCatalogEntry::from_images(gate.name(), vec![2], gate.matrix(), images)
}
