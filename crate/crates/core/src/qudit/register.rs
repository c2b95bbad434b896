use num_complex::Complex64;

use super::state::sample_index;
use super::{StateVector, Stream, UnitaryMatrix};
use crate::error::{Error, Result};

/// A composite register of qudits with (possibly different) dimensions.
///
/// The joint index is row-major over `slots`: for slots `[d0, d1, d2]` the
/// basis state `|a, b, c⟩` has index `(a·d1 + b)·d2 + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct Register {
    slots: Vec<usize>,
    state: StateVector,
}

impl Register {
    pub fn new(slots: Vec<usize>, state: StateVector) -> Result<Self> {
        if slots.is_empty() || slots.contains(&0) {
            return Err(Error::Contract(format!("invalid slot dimensions {slots:?}")));
        }
        let total: usize = slots.iter().product();
        if total != state.dim() {
            return Err(Error::DimensionMismatch {
                expected: total,
                found: state.dim(),
            });
        }
        Ok(Self { slots, state })
    }

    /// Product state of the given single-slot states, in slot order.
    pub fn product(states: &[StateVector]) -> Result<Self> {
        let slots: Vec<usize> = states.iter().map(StateVector::dim).collect();
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for s in states {
            amps = amps
                .iter()
                .flat_map(|a| s.amplitudes().iter().map(move |b| a * b))
                .collect();
        }
        Self::new(slots, StateVector::from_raw(amps))
    }

    /// Computational basis state with the given per-slot digits.
    pub fn basis(slots: Vec<usize>, digits: &[usize]) -> Result<Self> {
        let states = slots
            .iter()
            .zip(digits)
            .map(|(&d, &k)| StateVector::basis(d, k))
            .collect::<Result<Vec<_>>>()?;
        if digits.len() != slots.len() {
            return Err(Error::DimensionMismatch {
                expected: slots.len(),
                found: digits.len(),
            });
        }
        Self::product(&states)
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn into_state(self) -> StateVector {
        self.state
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.slots.len()];
        for i in (0..self.slots.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.slots[i + 1];
        }
        strides
    }

    /// Per-slot digits of a joint index.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.slots.len()];
        for (i, &d) in self.slots.iter().enumerate().rev() {
            out[i] = index % d;
            index /= d;
        }
        out
    }

    /// Applies `gate` to the listed slots (gate ⊗ identity on the rest). The
    /// gate's own index is row-major over `targets` in the order given.
    pub fn apply(&self, gate: &UnitaryMatrix, targets: &[usize]) -> Result<Register> {
        let n = self.slots.len();
        for (i, &t) in targets.iter().enumerate() {
            if t >= n {
                return Err(Error::Index { index: t, dim: n });
            }
            if targets[..i].contains(&t) {
                return Err(Error::Contract(format!("slot {t} targeted twice")));
            }
        }
        let target_dim: usize = targets.iter().map(|&t| self.slots[t]).product();
        if targets.is_empty() || target_dim != gate.dim() {
            return Err(Error::DimensionMismatch {
                expected: gate.dim(),
                found: target_dim,
            });
        }

        let strides = self.strides();
        // offsets[t] = joint-index contribution of target sub-index t.
        let offsets: Vec<usize> = (0..target_dim)
            .map(|mut t| {
                let mut off = 0;
                for &slot in targets.iter().rev() {
                    off += (t % self.slots[slot]) * strides[slot];
                    t /= self.slots[slot];
                }
                off
            })
            .collect();

        // Scatter each nonzero input amplitude through its gate column; inputs
        // are usually sparse.
        let input = self.state.amplitudes();
        let mut out = vec![Complex64::new(0.0, 0.0); input.len()];
        for (j, &amp) in input.iter().enumerate() {
            if amp == Complex64::new(0.0, 0.0) {
                continue;
            }
            let digits = self.digits(j);
            let mut col = 0;
            let mut base = j;
            for &slot in targets {
                col = col * self.slots[slot] + digits[slot];
                base -= digits[slot] * strides[slot];
            }
            for (row, off) in offsets.iter().enumerate() {
                out[base + off] += gate.get(row, col) * amp;
            }
        }
        Ok(Register {
            slots: self.slots.clone(),
            state: StateVector::from_raw(out),
        })
    }

    /// Amplitudes arranged as `[slot digit][rest index]`.
    fn split(&self, slot: usize) -> Result<Vec<Vec<Complex64>>> {
        if slot >= self.slots.len() {
            return Err(Error::Index {
                index: slot,
                dim: self.slots.len(),
            });
        }
        let d = self.slots[slot];
        let rest = self.state.dim() / d;
        let mut grid = vec![Vec::with_capacity(rest); d];
        for (j, a) in self.state.amplitudes().iter().enumerate() {
            grid[self.digits(j)[slot]].push(*a);
        }
        Ok(grid)
    }

    /// Marginal outcome probabilities of one slot.
    pub fn slot_probabilities(&self, slot: usize) -> Result<Vec<f64>> {
        Ok(self
            .split(slot)?
            .iter()
            .map(|row| row.iter().map(|a| a.norm_sqr()).sum())
            .collect())
    }

    /// The pure state of `slot` when the register factorizes across it
    /// (global phase arbitrary). Errors when the slot is entangled with the
    /// rest beyond `tol`.
    pub fn slot_state(&self, slot: usize, tol: f64) -> Result<StateVector> {
        let grid = self.split(slot)?;
        let rest = grid[0].len();
        let column = |r: usize| -> Vec<Complex64> { grid.iter().map(|row| row[r]).collect() };
        let col_norm = |c: &[Complex64]| c.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let pivot = (0..rest)
            .max_by(|&a, &b| col_norm(&column(a)).total_cmp(&col_norm(&column(b))))
            .expect("non-empty register");
        let v = column(pivot);
        let vn = col_norm(&v);
        let v: Vec<Complex64> = v.iter().map(|a| a / vn).collect();
        for r in 0..rest {
            let c = column(r);
            let overlap: Complex64 = v.iter().zip(&c).map(|(a, b)| a.conj() * b).sum();
            let residual = c
                .iter()
                .zip(&v)
                .map(|(b, a)| (b - overlap * a).norm())
                .fold(0.0, f64::max);
            if residual > tol {
                return Err(Error::Contract(format!(
                    "slot {slot} is entangled with the rest of the register"
                )));
            }
        }
        StateVector::normalized(v)
    }

    /// Projective measurement of one slot; the other slots are left in the
    /// renormalized conditional state. Consumes exactly one draw.
    pub fn measure_slot(&self, slot: usize, stream: &mut Stream) -> Result<(usize, Register)> {
        let probs = self.slot_probabilities(slot)?;
        let k = sample_index(&probs, stream.next_f64());
        let scale = probs[k].sqrt();
        let amps = self
            .state
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(j, a)| {
                if self.digits(j)[slot] == k {
                    a / scale
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        Ok((
            k,
            Register {
                slots: self.slots.clone(),
                state: StateVector::from_raw(amps),
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qudit::{RandomSource, StreamTag, TOLERANCE};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn x() -> UnitaryMatrix {
        UnitaryMatrix::permutation(&[1, 0]).unwrap()
    }

    fn h() -> UnitaryMatrix {
        UnitaryMatrix::from_real(FRAC_1_SQRT_2, &[&[1.0, 1.0], &[1.0, -1.0]]).unwrap()
    }

    #[test]
    fn x_on_second_qubit() {
        let reg = Register::basis(vec![2, 2], &[0, 0]).unwrap();
        let out = reg.apply(&x(), &[1]).unwrap();
        assert_eq!(out.state().computational_index(TOLERANCE), Some(1));
        let out = reg.apply(&x(), &[0]).unwrap();
        assert_eq!(out.state().computational_index(TOLERANCE), Some(2));
    }

    #[test]
    fn target_order_is_respected() {
        // CNOT with control listed first.
        let cnot = UnitaryMatrix::permutation(&[0, 1, 3, 2]).unwrap();
        let reg = Register::basis(vec![2, 3, 2], &[1, 2, 0]).unwrap();
        let out = reg.apply(&cnot, &[0, 2]).unwrap();
        assert_eq!(out.digits(out.state().computational_index(TOLERANCE).unwrap()), vec![1, 2, 1]);
        // Control listed second: slot 2 is |0⟩, so nothing happens.
        let out = reg.apply(&cnot, &[2, 0]).unwrap();
        assert_eq!(out.digits(out.state().computational_index(TOLERANCE).unwrap()), vec![1, 2, 0]);
    }

    #[test]
    fn dimension_and_slot_errors() {
        let reg = Register::basis(vec![2, 4], &[0, 0]).unwrap();
        assert!(matches!(reg.apply(&x(), &[1]), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(reg.apply(&x(), &[2]), Err(Error::Index { .. })));
        assert!(reg.apply(&UnitaryMatrix::identity(4), &[0, 0]).is_err());
        assert!(Register::new(vec![2, 2], StateVector::basis(2, 0).unwrap()).is_err());
    }

    #[test]
    fn apply_matches_kron() {
        let reg = Register::product(&[
            StateVector::normalized(vec![Complex64::new(0.6, 0.1), Complex64::new(0.2, -0.5)]).unwrap(),
            StateVector::normalized(vec![
                Complex64::new(0.1, 0.0),
                Complex64::new(0.0, 0.3),
                Complex64::new(0.7, 0.2),
            ])
            .unwrap(),
        ])
        .unwrap();
        let g = h().kron(&UnitaryMatrix::identity(3));
        let direct = g.apply(reg.state()).unwrap();
        let sloted = reg.apply(&h(), &[0]).unwrap();
        for (a, b) in direct.amplitudes().iter().zip(sloted.state().amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn slot_state_extracts_factor() {
        let plus = h().apply(&StateVector::basis(2, 0).unwrap()).unwrap();
        let reg = Register::product(&[StateVector::basis(3, 2).unwrap(), plus.clone()]).unwrap();
        let s = reg.slot_state(1, TOLERANCE).unwrap();
        assert!(s.equal_up_to_global_phase(&plus, TOLERANCE).unwrap());

        let bell = Register::basis(vec![2, 2], &[0, 0])
            .unwrap()
            .apply(&h(), &[0])
            .unwrap()
            .apply(&UnitaryMatrix::permutation(&[0, 1, 3, 2]).unwrap(), &[0, 1])
            .unwrap();
        assert!(bell.slot_state(0, TOLERANCE).is_err());
    }

    #[test]
    fn measure_slot_collapses() {
        let reg = Register::basis(vec![4, 2], &[3, 0]).unwrap().apply(&h(), &[1]).unwrap();
        let mut s = RandomSource::new(3).stream(0, StreamTag::Auxiliary);
        let (k, post) = reg.measure_slot(0, &mut s).unwrap();
        assert_eq!(k, 3);
        assert!((post.state().norm_sqr() - 1.0).abs() < 1e-12);
        let (b, post) = post.measure_slot(1, &mut s).unwrap();
        assert_eq!(post.digits(post.state().computational_index(TOLERANCE).unwrap()), vec![3, b]);
    }
}
