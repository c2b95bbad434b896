use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use super::standard::StandardGate;
use super::states;
use crate::error::{Error, Result};
use crate::qudit::{RandomSource, StateVector, StreamTag, UnitaryMatrix, TOLERANCE};

/// How a candidate's gate is assembled from its `(|i⟩, |−i⟩)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateLayout {
    /// The states are the gate's columns: `G|0⟩ = |i⟩`, `G|1⟩ = |−i⟩`.
    Columns,
    /// The states are the gate's rows (matrix built directly from the list of
    /// state vectors).
    Rows,
}

/// A proposed circular (y-axis) basis for the six-state protocol.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisCandidate {
    pub name: String,
    pub plus_i: StateVector,
    pub minus_i: StateVector,
    pub layout: CandidateLayout,
    pub gate: UnitaryMatrix,
}

impl BasisCandidate {
    pub fn new(
        name: impl Into<String>,
        plus_i: StateVector,
        minus_i: StateVector,
        layout: CandidateLayout,
    ) -> Result<Self> {
        for s in [&plus_i, &minus_i] {
            if s.dim() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: s.dim() });
            }
        }
        let columns = UnitaryMatrix::from_columns(&[plus_i.clone(), minus_i.clone()])?;
        let gate = match layout {
            CandidateLayout::Columns => columns,
            CandidateLayout::Rows => {
                let (a, b) = (plus_i.amplitudes(), minus_i.amplitudes());
                UnitaryMatrix::from_rows(vec![a.to_vec(), b.to_vec()])?
            }
        };
        Ok(Self {
            name: name.into(),
            plus_i,
            minus_i,
            layout,
            gate,
        })
    }

    /// `|i⟩ = (i, 1)/√2`, `|−i⟩ = (−1, −i)/√2`; the gate is `J`.
    pub fn j_gate() -> Self {
        Self::new("J-Gate", states::plus_i(), states::minus_i(), CandidateLayout::Columns)
            .expect("valid candidate")
    }

    /// `|i⟩ = (1, i)/√2`, `|−i⟩ = (i, 1)/√2`; gate `(1/√2)[[1, i], [i, 1]]`.
    pub fn bennett() -> Self {
        let s = FRAC_1_SQRT_2;
        Self::new(
            "Bennett",
            StateVector::new(vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)]).unwrap(),
            StateVector::new(vec![Complex64::new(0.0, s), Complex64::new(s, 0.0)]).unwrap(),
            CandidateLayout::Columns,
        )
        .expect("valid candidate")
    }

    /// `|i⟩ = (1, i)/√2`, `|−i⟩ = (1, −i)/√2`, assembled row-wise.
    pub fn bruss() -> Self {
        let s = FRAC_1_SQRT_2;
        Self::new(
            "Bruss",
            StateVector::new(vec![Complex64::new(s, 0.0), Complex64::new(0.0, s)]).unwrap(),
            StateVector::new(vec![Complex64::new(s, 0.0), Complex64::new(0.0, -s)]).unwrap(),
            CandidateLayout::Rows,
        )
        .expect("valid candidate")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateReport {
    pub name: String,
    pub samples: usize,
    /// Fraction of `0` outcomes measuring `X·G|0⟩`.
    pub zero_fraction_x: f64,
    /// Fraction of `0` outcomes measuring `H·G|0⟩`.
    pub zero_fraction_h: f64,
    /// Half-width of the acceptance band around 0.5 (4σ).
    pub band: f64,
    pub randomness_x: bool,
    pub randomness_h: bool,
    /// `G²|b⟩ = |b⟩` up to phase for both `b`.
    pub double_application: bool,
    pub squared: UnitaryMatrix,
}

impl CandidateReport {
    pub fn passes(&self) -> bool {
        self.randomness_x && self.randomness_h && self.double_application
    }
}

/// A y-basis must look random when measured after X or H, and applying it
/// twice must return the encoded value.
pub fn validate_basis_candidate(
    candidate: &BasisCandidate,
    samples: usize,
    rng: &RandomSource,
) -> Result<CandidateReport> {
    if samples < 1000 {
        return Err(Error::Config(format!("need at least 1000 samples, got {samples}")));
    }
    let prepared = candidate.gate.apply(&StateVector::basis(2, 0)?)?;
    let band = 4.0 * (0.25 / samples as f64).sqrt();
    let zero_fraction = |gate: StandardGate, trial: u64| -> Result<f64> {
        let state = gate.matrix().apply(&prepared)?;
        let mut stream = rng.stream(trial, StreamTag::Auxiliary);
        let zeros = (0..samples).filter(|_| state.measure(&mut stream).0 == 0).count();
        Ok(zeros as f64 / samples as f64)
    };
    let zero_fraction_x = zero_fraction(StandardGate::X, 0)?;
    let zero_fraction_h = zero_fraction(StandardGate::H, 1)?;

    let squared = candidate.gate.mul(&candidate.gate)?;
    let mut double_application = true;
    for b in 0..2 {
        let basis = StateVector::basis(2, b)?;
        double_application &= squared.apply(&basis)?.equal_up_to_global_phase(&basis, TOLERANCE)?;
    }

    Ok(CandidateReport {
        name: candidate.name.clone(),
        samples,
        zero_fraction_x,
        zero_fraction_h,
        band,
        randomness_x: (zero_fraction_x - 0.5).abs() <= band,
        randomness_h: (zero_fraction_h - 0.5).abs() <= band,
        double_application,
        squared,
    })
}
