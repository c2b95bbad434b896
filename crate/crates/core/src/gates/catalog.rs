use sha2::{Digest, Sha256};

use super::conditional::{c_phi, chj};
use super::conversion::qid_conv;
use super::qid::{
    hdbb84_phi_gate, qid_gate_bb84, qid_gate_hdbb84, qid_gate_ssp, HdQidGate, PhiVariant, QidBb84,
    QidSsp,
};
use super::standard::{standard_gate, StandardGate};
use super::GateCatalogEntry;
use crate::error::{Error, Result};
use crate::protocols::Protocol;

/// Every gate the protocols use, in a fixed order.
pub fn catalog() -> Vec<GateCatalogEntry> {
    let mut out: Vec<GateCatalogEntry> = StandardGate::ALL.iter().map(|&g| standard_gate(g)).collect();
    out.extend(QidBb84::ALL.iter().map(|&g| qid_gate_bb84(g)));
    out.push(hdbb84_phi_gate(PhiVariant::Fixed));
    out.push(hdbb84_phi_gate(PhiVariant::Original));
    out.extend(HdQidGate::ALL.iter().map(|&g| qid_gate_hdbb84(g)));
    out.extend(QidSsp::ALL.iter().map(|&g| qid_gate_ssp(g)));
    out.push(c_phi());
    out.push(chj());
    out.extend(Protocol::ALL.iter().map(|&p| qid_conv(p)));
    out
}

pub fn lookup(name: &str) -> Result<GateCatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownGate(name.to_string()))
}

/// SHA-256 over every catalog matrix (name, dimension, then the little-endian
/// bytes of each entry's real and imaginary parts), as lowercase hex.
pub fn catalog_fingerprint() -> String {
    let mut hasher = Sha256::new();
    for e in catalog() {
        hasher.update(e.name.as_bytes());
        hasher.update((e.dim() as u64).to_le_bytes());
        for z in e.matrix.entries() {
            hasher.update(z.re.to_le_bytes());
            hasher.update(z.im.to_le_bytes());
        }
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
