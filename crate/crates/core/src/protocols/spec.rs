use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gates::{
    hdbb84_phi_gate, hdbb84_psi_prep, qid_gate_bb84, qid_gate_hdbb84, qid_gate_ssp, states,
    HdQidGate, PhiVariant, PsiSymbol, QidBb84, QidSsp, StandardGate,
};
use crate::qudit::{StateVector, UnitaryMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Protocol {
    Bb84,
    HdBb84,
    Ssp,
}

impl Protocol {
    pub const ALL: [Protocol; 3] = [Protocol::Bb84, Protocol::HdBb84, Protocol::Ssp];

    pub fn label(self) -> &'static str {
        match self {
            Protocol::Bb84 => "BB84",
            Protocol::HdBb84 => "HD-BB84",
            Protocol::Ssp => "SSP",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            Protocol::Bb84 => "bb84",
            Protocol::HdBb84 => "hdbb84",
            Protocol::Ssp => "ssp",
        }
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Protocol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bb84" => Ok(Protocol::Bb84),
            "hdbb84" | "hd-bb84" => Ok(Protocol::HdBb84),
            "ssp" => Ok(Protocol::Ssp),
            other => Err(Error::Config(format!("unknown protocol `{other}`"))),
        }
    }
}

/// Static description of a protocol.
///
/// Eve's index for a particle carrying `value` in basis `basis` is
/// `value · bases + basis`, which matches all three Eve-state listings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProtocolSpec {
    pub protocol: Protocol,
    /// Dimension of the transmitted particle.
    pub d_ab: usize,
    /// Number of encoding bases.
    pub bases: usize,
    /// Dimension Eve must measure in: `d_ab · bases`.
    pub d_e: usize,
    pub bits_per_particle: usize,
}

impl ProtocolSpec {
    pub const fn of(protocol: Protocol) -> Self {
        let (d_ab, bases, bits_per_particle) = match protocol {
            Protocol::Bb84 => (2, 2, 1),
            Protocol::HdBb84 => (4, 2, 2),
            Protocol::Ssp => (2, 3, 1),
        };
        Self {
            protocol,
            d_ab,
            bases,
            d_e: d_ab * bases,
            bits_per_particle,
        }
    }

    fn check(&self, value: usize, basis: usize) -> Result<()> {
        if value >= self.d_ab {
            return Err(Error::Index { index: value, dim: self.d_ab });
        }
        if basis >= self.bases {
            return Err(Error::Index { index: basis, dim: self.bases });
        }
        Ok(())
    }

    /// Eve's index for `(value, basis)`.
    pub fn state_index(&self, value: usize, basis: usize) -> Result<usize> {
        self.check(value, basis)?;
        Ok(value * self.bases + basis)
    }

    /// `(value, basis)` for Eve's index `k`.
    pub fn decode_index(&self, k: usize) -> Result<(usize, usize)> {
        if k >= self.d_e {
            return Err(Error::Index { index: k, dim: self.d_e });
        }
        Ok((k / self.bases, k % self.bases))
    }

    /// The physical `d_ab`-level state that Eve's index `k` stands for.
    pub fn physical_state(&self, k: usize) -> Result<StateVector> {
        if k >= self.d_e {
            return Err(Error::Index { index: k, dim: self.d_e });
        }
        Ok(match self.protocol {
            Protocol::Bb84 => [states::zero(), states::plus(), states::one(), states::minus()][k].clone(),
            Protocol::HdBb84 if k.is_multiple_of(2) => StateVector::basis(4, k / 2)?,
            Protocol::HdBb84 => hdbb84_phi_gate(PhiVariant::Fixed).actions[k / 2].output.clone(),
            Protocol::Ssp => [
                states::zero(),
                states::plus(),
                states::plus_i(),
                states::one(),
                states::minus(),
                states::minus_i(),
            ][k]
                .clone(),
        })
    }

    /// Gate sequence preparing `|value⟩` from `|0⟩` on the particle.
    pub fn value_prep(&self, value: usize) -> Result<Vec<UnitaryMatrix>> {
        self.check(value, 0)?;
        Ok(match self.protocol {
            Protocol::Bb84 | Protocol::Ssp if value == 1 => vec![StandardGate::X.matrix()],
            Protocol::Bb84 | Protocol::Ssp => vec![],
            Protocol::HdBb84 => hdbb84_psi_prep(PsiSymbol::from_value(value).expect("checked")),
        })
    }

    /// Encoding gate of `basis` on the particle. Each is self-inverse up to a
    /// global phase, so it doubles as the decode gate.
    pub fn basis_gate(&self, basis: usize) -> Result<UnitaryMatrix> {
        self.check(0, basis)?;
        Ok(match (self.protocol, basis) {
            (_, 0) => UnitaryMatrix::identity(self.d_ab),
            (Protocol::Bb84 | Protocol::Ssp, 1) => StandardGate::H.matrix(),
            (Protocol::Ssp, _) => StandardGate::J.matrix(),
            (Protocol::HdBb84, _) => hdbb84_phi_gate(PhiVariant::Fixed).matrix,
            (Protocol::Bb84, _) => unreachable!("checked"),
        })
    }

    /// Qid gate sequence preparing Eve's `|value · bases⟩` from `|0⟩`.
    pub fn qid_value_prep(&self, value: usize) -> Result<Vec<UnitaryMatrix>> {
        self.check(value, 0)?;
        Ok(match self.protocol {
            Protocol::Bb84 if value == 1 => vec![qid_gate_bb84(QidBb84::X1).matrix],
            Protocol::Ssp if value == 1 => vec![qid_gate_ssp(QidSsp::X2).matrix],
            Protocol::Bb84 | Protocol::Ssp => vec![],
            Protocol::HdBb84 => {
                let symbol = PsiSymbol::from_value(value).expect("checked");
                vec![qid_gate_hdbb84(HdQidGate::for_symbol(symbol)).matrix]
            }
        })
    }

    /// Qid counterpart of [`ProtocolSpec::basis_gate`] on Eve's qudit.
    pub fn qid_basis_gate(&self, basis: usize) -> Result<UnitaryMatrix> {
        self.check(0, basis)?;
        Ok(match (self.protocol, basis) {
            (_, 0) => UnitaryMatrix::identity(self.d_e),
            (Protocol::Bb84, _) => qid_gate_bb84(QidBb84::H1).matrix,
            (Protocol::HdBb84, _) => qid_gate_hdbb84(HdQidGate::Phi).matrix,
            (Protocol::Ssp, 1) => qid_gate_ssp(QidSsp::H2).matrix,
            (Protocol::Ssp, _) => qid_gate_ssp(QidSsp::J).matrix,
        })
    }

    /// Key bits carried by `value`, most significant first.
    pub fn value_bits(&self, value: usize) -> Vec<bool> {
        (0..self.bits_per_particle)
            .rev()
            .map(|i| (value >> i) & 1 == 1)
            .collect()
    }

    pub fn bits_value(&self, bits: &[bool]) -> usize {
        bits.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }
}
