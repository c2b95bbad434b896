//! High-dimensional ("Qid") gate variants. Each acts on Eve's `d_e`-level
//! qudit exactly as its low-dimensional counterpart acts on the physical
//! states that the qudit's basis states stand for.

use num_complex::Complex64;
use std::str::FromStr;

use super::GateCatalogEntry;
use crate::error::Error;
use crate::qudit::{StateVector, UnitaryMatrix};

fn signed_images(images: &[(usize, f64)]) -> Vec<StateVector> {
    images
        .iter()
        .map(|&(t, sign)| {
            StateVector::basis(images.len(), t)
                .expect("image in range")
                .scaled(Complex64::new(sign, 0.0))
        })
        .collect()
}

fn signed_entry(name: &str, images: &[(usize, f64)]) -> GateCatalogEntry {
    let matrix = UnitaryMatrix::signed_permutation(images).expect("signed permutation");
    GateCatalogEntry::from_images(name, vec![images.len()], matrix, signed_images(images))
}

fn unsigned_entry(name: &str, images: &[usize]) -> GateCatalogEntry {
    let signed: Vec<(usize, f64)> = images.iter().map(|&t| (t, 1.0)).collect();
    signed_entry(name, &signed)
}

macro_rules! named_enum {
    ($ty:ident { $($variant:ident => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub const ALL: &'static [$ty] = &[$($ty::$variant),+];

            pub fn name(self) -> &'static str {
                match self { $($ty::$variant => $name),+ }
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok($ty::$variant),)+
                    other => Err(Error::UnknownGate(other.to_string())),
                }
            }
        }
    };
}

/// Four-dimensional BB84 qudit gates over `|0⟩=|0⟩, |1⟩=|+⟩, |2⟩=|1⟩, |3⟩=|−⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QidBb84 {
    X1,
    H1,
}

named_enum!(QidBb84 { X1 => "QidX1", H1 => "QidH1" });

pub fn qid_gate_bb84(gate: QidBb84) -> GateCatalogEntry {
    match gate {
        // X|3⟩ = −|3⟩ is kept literally.
        QidBb84::X1 => signed_entry(gate.name(), &[(2, 1.0), (1, 1.0), (0, 1.0), (3, -1.0)]),
        QidBb84::H1 => unsigned_entry(gate.name(), &[1, 0, 3, 2]),
    }
}

/// Labels of the four ψ basis states, carrying the two-bit values 00..11.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiSymbol {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl PsiSymbol {
    pub const ALL: [PsiSymbol; 4] = [PsiSymbol::Alpha, PsiSymbol::Beta, PsiSymbol::Gamma, PsiSymbol::Delta];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The symbol carrying the two-bit value `value` (`ψ_γ = 10`).
    pub fn from_value(value: usize) -> Option<Self> {
        Self::ALL.get(value).copied()
    }
}

/// Gate sequence (applied left to right) preparing `|ψ_symbol⟩` from `|0⟩`
/// on a four-level qudit, built from the BB84 Qid gates.
pub fn hdbb84_psi_prep(symbol: PsiSymbol) -> Vec<UnitaryMatrix> {
    let x = qid_gate_bb84(QidBb84::X1).matrix;
    let h = qid_gate_bb84(QidBb84::H1).matrix;
    match symbol {
        PsiSymbol::Alpha => vec![],
        PsiSymbol::Beta => vec![h],
        PsiSymbol::Gamma => vec![x],
        PsiSymbol::Delta => vec![x, h],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhiVariant {
    /// The symmetric basis used by the protocol; `φ² = I`.
    Fixed,
    /// The first-published ordering, kept as a negative fixture: `φ²` permutes
    /// the ψ states instead of restoring them.
    Original,
}

const PHI_FIXED: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
];

const PHI_ORIGINAL: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
    [1.0, 1.0, -1.0, -1.0],
];

/// Columns are `φ_α..φ_δ` expressed in the ψ basis, each `½·(±1, ±1, ±1, ±1)`.
pub fn hdbb84_phi_gate(variant: PhiVariant) -> GateCatalogEntry {
    let (name, table) = match variant {
        PhiVariant::Fixed => ("Phi", &PHI_FIXED),
        PhiVariant::Original => ("PhiOriginal", &PHI_ORIGINAL),
    };
    let columns: Vec<StateVector> = table
        .iter()
        .map(|col| {
            StateVector::new(col.iter().map(|&x| Complex64::new(0.5 * x, 0.0)).collect())
                .expect("normalized φ state")
        })
        .collect();
    let matrix = UnitaryMatrix::from_columns(&columns).expect("φ basis is orthonormal");
    GateCatalogEntry::from_images(name, vec![4], matrix, columns)
}

/// Eight-dimensional HD-BB84 gates over `|2v⟩ = |ψ_v⟩, |2v+1⟩ = |φ_v⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HdQidGate {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Phi,
}

named_enum!(HdQidGate {
    Alpha => "QidAlpha",
    Beta => "QidBeta",
    Gamma => "QidGamma",
    Delta => "QidDelta",
    Phi => "QidPhi",
});

impl HdQidGate {
    pub fn for_symbol(symbol: PsiSymbol) -> Self {
        match symbol {
            PsiSymbol::Alpha => HdQidGate::Alpha,
            PsiSymbol::Beta => HdQidGate::Beta,
            PsiSymbol::Gamma => HdQidGate::Gamma,
            PsiSymbol::Delta => HdQidGate::Delta,
        }
    }

    fn images(self) -> [usize; 8] {
        match self {
            HdQidGate::Alpha => [0, 1, 2, 3, 4, 5, 6, 7],
            HdQidGate::Beta => [2, 3, 0, 1, 6, 7, 4, 5],
            HdQidGate::Gamma => [4, 5, 6, 7, 0, 1, 2, 3],
            HdQidGate::Delta => [6, 7, 4, 5, 2, 3, 0, 1],
            HdQidGate::Phi => [1, 0, 3, 2, 5, 4, 7, 6],
        }
    }
}

pub fn qid_gate_hdbb84(gate: HdQidGate) -> GateCatalogEntry {
    unsigned_entry(gate.name(), &gate.images())
}

/// Six-dimensional SSP gates over
/// `|0⟩=|0⟩, |1⟩=|+⟩, |2⟩=|i⟩, |3⟩=|1⟩, |4⟩=|−⟩, |5⟩=|−i⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QidSsp {
    X2,
    H2,
    J,
}

named_enum!(QidSsp { X2 => "QidX2", H2 => "QidH2", J => "QidJ" });

pub fn qid_gate_ssp(gate: QidSsp) -> GateCatalogEntry {
    match gate {
        QidSsp::X2 => signed_entry(
            gate.name(),
            &[(3, 1.0), (1, 1.0), (5, -1.0), (0, 1.0), (4, -1.0), (2, -1.0)],
        ),
        // z and x states swap, y states are fixed.
        QidSsp::H2 => unsigned_entry(gate.name(), &[1, 0, 2, 4, 3, 5]),
        QidSsp::J => signed_entry(
            gate.name(),
            &[(2, 1.0), (4, 1.0), (0, -1.0), (5, 1.0), (1, -1.0), (3, -1.0)],
        ),
    }
}
