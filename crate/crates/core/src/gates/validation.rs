//! The gate property suite behind `validate-gates`: unitarity, action tables,
//! involutions, mutual unbiasedness, structural identities, conversion
//! soundness and y-basis candidate checks. Negative fixtures are recorded
//! with `expected = false`.

use num_complex::Complex64;
use serde::Serialize;

use super::candidates::{validate_basis_candidate, BasisCandidate};
use super::catalog::catalog;
use super::conditional::{chj, chj_literal};
use super::conversion::ConversionCircuit;
use super::qid::{hdbb84_phi_gate, qid_gate_bb84, qid_gate_hdbb84, qid_gate_ssp, HdQidGate, PhiVariant, QidBb84, QidSsp};
use super::standard::StandardGate;
use crate::error::Result;
use crate::protocols::{Protocol, ProtocolSpec};
use crate::qudit::{RandomSource, StateVector, UnitaryMatrix, TOLERANCE};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub gate: String,
    pub property: String,
    pub passed: bool,
    /// Whether the property is supposed to hold; `false` for negative fixtures.
    pub expected: bool,
    pub detail: String,
}

impl Check {
    fn new(gate: &str, property: &str, passed: bool, expected: bool, detail: String) -> Self {
        Self {
            gate: gate.into(),
            property: property.into(),
            passed,
            expected,
            detail,
        }
    }

    /// The observed outcome matches the expectation.
    pub fn ok(&self) -> bool {
        self.passed == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub checks: Vec<Check>,
}

impl PropertyReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn find(&self, gate: &str, property: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.gate == gate && c.property == property)
    }
}

/// Images of the basis states if `m` maps each to a basis state up to phase.
fn basis_images(m: &UnitaryMatrix) -> Option<Vec<usize>> {
    (0..m.dim())
        .map(|k| {
            m.apply(&StateVector::basis(m.dim(), k).ok()?)
                .ok()?
                .computational_index(TOLERANCE)
        })
        .collect()
}

fn squares_to_identity(gate: &str, m: &UnitaryMatrix) -> Result<Check> {
    let dev = m.mul(m)?.max_deviation(&UnitaryMatrix::identity(m.dim()))?;
    Ok(Check::new(gate, "involution", dev <= TOLERANCE, true, format!("max |G²−I| = {dev:.2e}")))
}

/// Largest `| |⟨a_i|b_j⟩|² − target |` over the columns of two bases.
fn overlap_deviation(a: &UnitaryMatrix, b: &UnitaryMatrix, target: f64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            let o = a.column(i).inner(&b.column(j))?.norm_sqr();
            worst = worst.max((o - target).abs());
        }
    }
    Ok(worst)
}

fn reverse_columns(m: &UnitaryMatrix) -> UnitaryMatrix {
    let n = m.dim();
    let entries: Vec<Complex64> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, n - 1 - c)))
        .map(|(r, c)| m.get(r, c))
        .collect();
    UnitaryMatrix::new(n, entries).expect("column permutation of a unitary")
}

pub fn run_property_suite(samples: usize, seed: u64) -> Result<PropertyReport> {
    let mut checks = Vec::new();

    for e in catalog() {
        let dev = e.matrix.unitarity_deviation();
        checks.push(Check::new(&e.name, "unitary", dev <= TOLERANCE, true, format!("max |U†U−I| = {dev:.2e}")));
        let failing = e.failing_actions()?;
        checks.push(Check::new(
            &e.name,
            "action table",
            failing.is_empty(),
            true,
            format!("{} rows, failing inputs {failing:?}", e.actions.len()),
        ));
    }

    checks.push(squares_to_identity("H", &StandardGate::H.matrix())?);
    checks.push(squares_to_identity("QidH1", &qid_gate_bb84(QidBb84::H1).matrix)?);
    checks.push(squares_to_identity("Phi", &hdbb84_phi_gate(PhiVariant::Fixed).matrix)?);
    for g in [HdQidGate::Beta, HdQidGate::Gamma, HdQidGate::Delta, HdQidGate::Phi] {
        checks.push(squares_to_identity(g.name(), &qid_gate_hdbb84(g).matrix)?);
    }

    // Original φ: φ² permutes ψ states (α fixed, β→δ, γ→β, δ→γ).
    let original = hdbb84_phi_gate(PhiVariant::Original).matrix;
    let sq = original.mul(&original)?;
    let images = basis_images(&sq);
    let dev = sq.max_deviation(&UnitaryMatrix::identity(4))?;
    checks.push(Check::new(
        "PhiOriginal",
        "involution",
        dev <= TOLERANCE,
        false,
        format!("φ² maps ψ_α..ψ_δ to indices {images:?}"),
    ));
    checks.push(Check::new(
        "PhiOriginal",
        "square permutes psi",
        images.as_deref() == Some(&[0, 3, 1, 2]),
        true,
        format!("φ² images {images:?}, expected [0, 3, 1, 2]"),
    ));

    let id2 = UnitaryMatrix::identity(2);
    let h = StandardGate::H.matrix();
    let j = StandardGate::J.matrix();
    let dev = overlap_deviation(&id2, &h, 0.5)?;
    checks.push(Check::new("H", "unbiased vs Z", dev <= TOLERANCE, true, format!("max dev {dev:.2e}")));
    for variant in [PhiVariant::Fixed, PhiVariant::Original] {
        let phi = hdbb84_phi_gate(variant);
        let dev = overlap_deviation(&UnitaryMatrix::identity(4), &phi.matrix, 0.25)?;
        checks.push(Check::new(&phi.name, "unbiased vs psi", dev <= TOLERANCE, true, format!("max dev {dev:.2e}")));
    }
    for (name, a, b) in [("I/H", &id2, &h), ("I/J", &id2, &j), ("H/J", &h, &j)] {
        let dev = overlap_deviation(a, b, 0.5)?;
        checks.push(Check::new(name, "unbiased pair", dev <= TOLERANCE, true, format!("max dev {dev:.2e}")));
    }

    let x2 = qid_gate_ssp(QidSsp::X2).matrix;
    let qj = qid_gate_ssp(QidSsp::J).matrix;
    let minus = Complex64::new(-1.0, 0.0);
    let d1 = reverse_columns(&x2.scaled(minus)).max_deviation(&qj)?;
    let d2 = reverse_columns(&qj.scaled(minus)).max_deviation(&x2)?;
    checks.push(Check::new(
        "QidJ",
        "reversed -QidX2",
        d1 == 0.0 && d2 == 0.0,
        true,
        format!("entrywise deviations {d1}, {d2}"),
    ));

    let dev = chj().matrix.max_deviation(&chj_literal())?;
    checks.push(Check::new("CHJ", "literal matrix", dev <= TOLERANCE, true, format!("max dev {dev:.2e}")));

    for p in Protocol::ALL {
        let spec = ProtocolSpec::of(p);
        let circuit = ConversionCircuit::for_protocol(p);
        let mut failing = Vec::new();
        for k in 0..spec.d_e {
            let out = circuit.output_state(k)?;
            if !out.equal_up_to_global_phase(&spec.physical_state(k)?, TOLERANCE)? {
                failing.push(k);
            }
        }
        let name = format!("Conversion{}", p.label());
        checks.push(Check::new(&name, "output table", failing.is_empty(), true, format!("failing k {failing:?}")));
        let dev = circuit.composite_matrix()?.unitarity_deviation();
        checks.push(Check::new(&name, "unitary", dev <= TOLERANCE, true, format!("max |U†U−I| = {dev:.2e}")));
    }

    let rng = RandomSource::new(seed);
    for (candidate, expect_x, expect_h, expect_twice) in [
        (BasisCandidate::j_gate(), true, true, true),
        (BasisCandidate::bennett(), true, true, false),
        (BasisCandidate::bruss(), true, false, false),
    ] {
        let r = validate_basis_candidate(&candidate, samples, &rng)?;
        let band = format!("band 0.5 ± {:.4}", r.band);
        checks.push(Check::new(&r.name, "random under X", r.randomness_x, expect_x, format!("zero fraction {:.4}, {band}", r.zero_fraction_x)));
        checks.push(Check::new(&r.name, "random under H", r.randomness_h, expect_h, format!("zero fraction {:.4}, {band}", r.zero_fraction_h)));
        checks.push(Check::new(
            &r.name,
            "double application",
            r.double_application,
            expect_twice,
            format!("G²|0⟩ images {:?}", basis_images(&r.squared)),
        ));
    }

    Ok(PropertyReport { checks })
}
