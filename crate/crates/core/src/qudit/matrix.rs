use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{StateVector, TOLERANCE};
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square unitary matrix stored row-major. Construction checks `U†U = I`
/// within [`TOLERANCE`], so every value of this type is unitary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitaryMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if entries.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let m = Self { dim, entries };
        let deviation = m.unitarity_deviation();
        if deviation > TOLERANCE {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.len(),
            });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    /// Builds the matrix whose `k`-th column is `columns[k]`, i.e. the gate
    /// mapping `|k⟩` to `columns[k]`.
    pub fn from_columns(columns: &[StateVector]) -> Result<Self> {
        let dim = columns.len();
        let mut entries = vec![ZERO; dim * dim];
        for (c, col) in columns.iter().enumerate() {
            if col.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: col.dim(),
                });
            }
            for (r, a) in col.amplitudes().iter().enumerate() {
                entries[r * dim + c] = *a;
            }
        }
        Self::new(dim, entries)
    }

    /// `scale · rows`, for matrices with real entries such as `½·(±1)`.
    pub fn from_real(scale: f64, rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(scale * x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ONE;
        }
        Self { dim, entries }
    }

    /// Signed permutation: `|k⟩ ↦ images[k].1 · |images[k].0⟩`.
    pub fn signed_permutation(images: &[(usize, f64)]) -> Result<Self> {
        let dim = images.len();
        let mut entries = vec![ZERO; dim * dim];
        for (k, &(target, sign)) in images.iter().enumerate() {
            if target >= dim {
                return Err(Error::Index { index: target, dim });
            }
            entries[target * dim + k] = Complex64::new(sign, 0.0);
        }
        Self::new(dim, entries)
    }

    /// Unsigned permutation: `|k⟩ ↦ |images[k]⟩`.
    pub fn permutation(images: &[usize]) -> Result<Self> {
        let signed: Vec<(usize, f64)> = images.iter().map(|&t| (t, 1.0)).collect();
        Self::signed_permutation(&signed)
    }

    /// Block-diagonal direct sum, block `i` acting when the control digit is `i`.
    pub fn direct_sum(blocks: &[&UnitaryMatrix]) -> Self {
        let dim: usize = blocks.iter().map(|b| b.dim).sum();
        let mut entries = vec![ZERO; dim * dim];
        let mut offset = 0;
        for b in blocks {
            for r in 0..b.dim {
                for c in 0..b.dim {
                    entries[(offset + r) * dim + offset + c] = b.get(r, c);
                }
            }
            offset += b.dim;
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> StateVector {
        StateVector::from_raw((0..self.dim).map(|r| self.get(r, col)).collect())
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.get(r, c).conj();
            }
        }
        Self { dim: n, entries }
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &UnitaryMatrix) -> Result<Self> {
        self.check_dim(rhs.dim)?;
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        Ok(Self { dim: n, entries })
    }

    /// Kronecker product `self ⊗ rhs`; `self` is the more significant factor.
    pub fn kron(&self, rhs: &UnitaryMatrix) -> Self {
        let (a, b) = (self.dim, rhs.dim);
        let n = a * b;
        let mut entries = vec![ZERO; n * n];
        for r1 in 0..a {
            for c1 in 0..a {
                let x = self.get(r1, c1);
                for r2 in 0..b {
                    for c2 in 0..b {
                        entries[(r1 * b + r2) * n + c1 * b + c2] = x * rhs.get(r2, c2);
                    }
                }
            }
        }
        Self { dim: n, entries }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    /// Largest elementwise deviation of `U†U` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: Complex64 = (0..n).map(|k| self.get(k, i).conj() * self.get(k, j)).sum();
                let expected = if i == j { ONE } else { ZERO };
                worst = worst.max((dot - expected).norm());
            }
        }
        worst
    }

    /// Largest elementwise distance to `other`.
    pub fn max_deviation(&self, other: &UnitaryMatrix) -> Result<f64> {
        self.check_dim(other.dim)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// `self · state`. Unitarity is guaranteed by construction, so the norm is
    /// preserved.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        self.check_dim(state.dim())?;
        let amps = state.amplitudes();
        let out = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * amps[c]).sum())
            .collect();
        Ok(StateVector::from_raw(out))
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if self.dim != found {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found,
            });
        }
        Ok(())
    }
}
