use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Stream, TOLERANCE};
use crate::error::{Error, Result};

/// Normalized amplitude vector of a `d`-dimensional qudit (or of a joint
/// register, flattened row-major).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Validates finiteness and normalization.
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::Contract("empty state vector".into()));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { amps })
    }

    /// Rescales `amps` to unit norm.
    pub fn normalized(amps: Vec<Complex64>) -> Result<Self> {
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::NotNormalized { norm_sqr: norm * norm });
        }
        Self::new(amps.into_iter().map(|a| a / norm).collect())
    }

    pub(crate) fn from_raw(amps: Vec<Complex64>) -> Self {
        Self { amps }
    }

    /// The computational basis state `|k⟩`.
    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        if dim == 0 || k >= dim {
            return Err(Error::Index { index: k, dim });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[k] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Born-rule outcome probabilities.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_dim(other)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        Self::from_raw(self.amps.iter().map(|a| a * factor).collect())
    }

    /// True iff `self = c · other` for some unit-modulus `c`, elementwise
    /// within `tol`.
    pub fn equal_up_to_global_phase(&self, other: &StateVector, tol: f64) -> Result<bool> {
        self.check_dim(other)?;
        let (pivot, largest) = other
            .amps
            .iter()
            .enumerate()
            .map(|(i, b)| (i, b.norm()))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if largest <= tol {
            return Ok(self.amps.iter().all(|a| a.norm() <= tol));
        }
        let phase = self.amps[pivot] / other.amps[pivot];
        if (phase.norm() - 1.0).abs() > tol {
            return Ok(false);
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (a - phase * b).norm() <= tol))
    }

    /// The index `k` if this state is `c·|k⟩` for some phase `c`.
    pub fn computational_index(&self, tol: f64) -> Option<usize> {
        let mut found = None;
        for (k, a) in self.amps.iter().enumerate() {
            let n = a.norm();
            if (n - 1.0).abs() <= tol {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            } else if n > tol {
                return None;
            }
        }
        found
    }

    /// Projective measurement in the computational basis. Consumes exactly one
    /// draw from `stream`.
    pub fn measure(&self, stream: &mut Stream) -> (usize, StateVector) {
        let k = sample_index(&self.probabilities(), stream.next_f64());
        let collapsed = StateVector::basis(self.dim(), k).expect("sampled index in range");
        (k, collapsed)
    }

    fn check_dim(&self, other: &StateVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }
}

/// Inverse-CDF sampling. Falls back to the last outcome with non-zero weight
/// when rounding leaves `u` past the final cumulative sum.
pub(crate) fn sample_index(probs: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    let mut last_nonzero = 0;
    for (k, &p) in probs.iter().enumerate() {
        if p > 0.0 {
            last_nonzero = k;
        }
        acc += p;
        if u < acc && p > 0.0 {
            return k;
        }
    }
    last_nonzero
}
