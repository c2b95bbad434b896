//! Named single-qubit states.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::qudit::StateVector;

fn qubit(a: Complex64, b: Complex64) -> StateVector {
    StateVector::new(vec![a, b]).expect("normalized literal")
}

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn zero() -> StateVector {
    qubit(c(1.0, 0.0), c(0.0, 0.0))
}

pub fn one() -> StateVector {
    qubit(c(0.0, 0.0), c(1.0, 0.0))
}

pub fn plus() -> StateVector {
    qubit(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0))
}

pub fn minus() -> StateVector {
    qubit(c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0))
}

/// `|i⟩ = (i, 1)/√2`, the circular state prepared by `J|0⟩`.
pub fn plus_i() -> StateVector {
    qubit(c(0.0, FRAC_1_SQRT_2), c(FRAC_1_SQRT_2, 0.0))
}

/// `|−i⟩ = (−1, −i)/√2`, prepared by `J|1⟩`.
pub fn minus_i() -> StateVector {
    qubit(c(-FRAC_1_SQRT_2, 0.0), c(0.0, -FRAC_1_SQRT_2))
}
