//! Acceptance criteria, one PASS/FAIL line each. Statistical expectations are
//! fixed by exhaustive single-particle oracles written here with explicit
//! complex arithmetic, independent of the crate's gates.

use std::f64::consts::FRAC_1_SQRT_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hdqkd_core::analysis::detection_probability;
use hdqkd_core::experiment::{run_cell, CellConfig, CellResult};
use hdqkd_core::gates::{
    lookup, run_property_suite, validate_basis_candidate, BasisCandidate, ConversionCircuit,
};
use hdqkd_core::protocols::{EveModel, Protocol, ProtocolSpec, Scenario};
use hdqkd_core::{Complex64, RandomSource, StateVector};

const SEED: u64 = 2024;
const TRIALS: usize = 25;
const RAW_BITS: usize = 200;
const EPS: f64 = 1e-9;

type Vector = Vec<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real(xs: &[f64], scale: f64) -> Vector {
    xs.iter().map(|&x| c(x * scale, 0.0)).collect()
}

fn overlap_sqr(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum::<Complex64>().norm_sqr()
}

/// `bases[b][v]`: the state Alice sends for value `v` in basis `b`.
fn oracle_bases(protocol: Protocol) -> Vec<Vec<Vector>> {
    let s = FRAC_1_SQRT_2;
    let z = vec![real(&[1.0, 0.0], 1.0), real(&[0.0, 1.0], 1.0)];
    let x = vec![real(&[1.0, 1.0], s), real(&[1.0, -1.0], s)];
    match protocol {
        Protocol::Bb84 => vec![z, x],
        Protocol::HdBb84 => {
            let psi = (0..4)
                .map(|k| (0..4).map(|j| c(if j == k { 1.0 } else { 0.0 }, 0.0)).collect())
                .collect();
            let phi = vec![
                real(&[1.0, 1.0, 1.0, 1.0], 0.5),
                real(&[1.0, 1.0, -1.0, -1.0], 0.5),
                real(&[1.0, -1.0, 1.0, -1.0], 0.5),
                real(&[1.0, -1.0, -1.0, 1.0], 0.5),
            ];
            vec![psi, phi]
        }
        Protocol::Ssp => {
            let y = vec![vec![c(0.0, s), c(s, 0.0)], vec![c(-s, 0.0), c(0.0, -s)]];
            vec![z, x, y]
        }
    }
}

fn bits_of(value: usize, width: usize) -> Vec<bool> {
    (0..width).rev().map(|i| value >> i & 1 == 1).collect()
}

fn bit_agreement(a: usize, b: usize, width: usize) -> usize {
    bits_of(a, width).iter().zip(bits_of(b, width)).filter(|(x, y)| **x == *y).count()
}

struct InterceptOracle {
    qber: f64,
    knowledge_alice: f64,
    knowledge_bob: f64,
}

/// Exact per-bit statistics of intercept-resend on the sifted key: sum over
/// Alice's (basis, value), Eve's basis and outcome, and Bob's outcome in
/// Alice's basis.
fn intercept_oracle(protocol: Protocol) -> InterceptOracle {
    let bases = oracle_bases(protocol);
    let b = bases.len();
    let d = bases[0].len();
    let width = d.trailing_zeros() as usize;
    let (mut err, mut ka, mut kb) = (0.0, 0.0, 0.0);
    for alice_basis in &bases {
        for (v, sent) in alice_basis.iter().enumerate() {
            for eve_basis in &bases {
                for (e, resent) in eve_basis.iter().enumerate() {
                    let p_eve = overlap_sqr(resent, sent);
                    for (w, bob_state) in alice_basis.iter().enumerate() {
                        let p = p_eve * overlap_sqr(bob_state, resent) / (b * d * b) as f64;
                        err += p * (width - bit_agreement(v, w, width)) as f64;
                        ka += p * bit_agreement(e, v, width) as f64;
                        kb += p * bit_agreement(e, w, width) as f64;
                    }
                }
            }
        }
    }
    let w = width as f64;
    InterceptOracle {
        qber: err / w,
        knowledge_alice: ka / w,
        knowledge_bob: kb / w,
    }
}

type Criterion = (&'static str, fn() -> Line);

struct Line {
    ok: bool,
    text: String,
}

fn line(ok: bool, text: impl Into<String>) -> Line {
    Line { ok, text: text.into() }
}

fn cell(protocol: Protocol, scenario: Scenario, eve: EveModel) -> CellResult {
    let mut cfg = CellConfig::new(protocol, scenario, eve, SEED);
    cfg.trials = TRIALS;
    cfg.raw_bits = RAW_BITS;
    run_cell(&cfg).expect("valid configuration")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn no_eve_correctness() -> Line {
    let (failures, took) = timed(|| {
        let mut failures = Vec::new();
        for p in Protocol::ALL {
            for s in Scenario::ALL {
                let r = cell(p, s, EveModel::None);
                let clean = r.trials.iter().all(|t| t.qber == 0.0 && t.matches_control);
                if !clean {
                    failures.push(format!("{p}/{}", s.label()));
                }
            }
        }
        failures
    });
    let fast = took < Duration::from_secs(5);
    line(
        failures.is_empty() && fast,
        format!("no-Eve QBER 0 and Matches 100% in 9 cells; failures {failures:?}; {took:.2?}"),
    )
}

fn hd_attack_transparency() -> Line {
    let (failures, took) = timed(|| {
        let mut failures = Vec::new();
        for p in Protocol::ALL {
            for s in [Scenario::Conversion, Scenario::Relabel] {
                let r = cell(p, s, EveModel::Hd);
                let clean = r.trials.iter().all(|t| {
                    t.qber == 0.0
                        && t.knowledge_alice == Some(1.0)
                        && t.knowledge_bob == Some(1.0)
                        && t.matches_control
                });
                if !clean {
                    failures.push(format!("{p}/{}", s.label()));
                }
            }
        }
        failures
    });
    let fast = took < Duration::from_secs(5);
    line(
        failures.is_empty() && fast,
        format!("HD Eve: QBER 0, knowledge 100%, Matches 100% in 6 cells; failures {failures:?}; {took:.2?}"),
    )
}

fn standard_eve_qber() -> Line {
    let theory = [(Protocol::Bb84, 0.25), (Protocol::HdBb84, 0.25), (Protocol::Ssp, 1.0 / 3.0)];
    let bands = [(0.22, 0.28), (0.22, 0.28), (0.30, 0.42)];
    let mut ok = true;
    let mut parts = Vec::new();
    for ((p, expected), (lo, hi)) in theory.into_iter().zip(bands) {
        let oracle = intercept_oracle(p).qber;
        let r = cell(p, Scenario::Control, EveModel::Standard);
        let mean = r.aggregate.mean_qber;
        // Binomial spread of the mean over all sifted bits, 4σ.
        let bits = r.trials.iter().map(|t| t.sifted_bits).sum::<usize>() as f64;
        let spread = 4.0 * (oracle * (1.0 - oracle) / bits).sqrt();
        let pass = (oracle - expected).abs() < EPS
            && (lo..=hi).contains(&mean)
            && (mean - oracle).abs() <= spread;
        ok &= pass;
        parts.push(format!("{p} {mean:.4} (oracle {oracle:.4}, band [{lo}, {hi}])"));
    }
    line(ok, format!("standard-Eve QBER: {}", parts.join("; ")))
}

fn standard_eve_knowledge() -> Line {
    let oracle = intercept_oracle(Protocol::Bb84);
    let r = cell(Protocol::Bb84, Scenario::Control, EveModel::Standard);
    let ka = r.aggregate.mean_knowledge_alice.unwrap_or(f64::NAN);
    let kb = r.aggregate.mean_knowledge_bob.unwrap_or(f64::NAN);
    let ok = (oracle.knowledge_alice - 0.75).abs() < EPS
        && (oracle.knowledge_bob - 0.75).abs() < EPS
        && (0.70..=0.80).contains(&ka)
        && (0.70..=0.82).contains(&kb);
    line(
        ok,
        format!(
            "BB84 standard-Eve knowledge: Alice {ka:.4}, Bob {kb:.4} (oracle {:.4}, {:.4})",
            oracle.knowledge_alice, oracle.knowledge_bob
        ),
    )
}

fn sift_fractions() -> Line {
    let bands = [
        (Protocol::Bb84, 0.45, 0.55),
        (Protocol::HdBb84, 0.45, 0.55),
        (Protocol::Ssp, 0.28, 0.39),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, lo, hi) in bands {
        let f = cell(p, Scenario::Control, EveModel::None).aggregate.mean_sift_fraction;
        ok &= (lo..=hi).contains(&f);
        parts.push(format!("{p} {f:.4} in [{lo}, {hi}]"));
    }
    line(ok, format!("sift fractions: {}", parts.join("; ")))
}

fn gate_properties() -> Line {
    let report = run_property_suite(10_000, SEED).expect("suite runs");
    let mut ok = report.all_ok();
    let mut notes = Vec::new();

    // Fixed φ: all sixteen |⟨ψ_i|φ_j⟩|² equal 1/4, read straight off the columns.
    let phi = lookup("Phi").unwrap().matrix;
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((phi.get(i, j).norm_sqr() - 0.25).abs());
        }
    }
    ok &= worst < EPS;
    notes.push(format!("max |<psi|phi>|^2 - 1/4| = {worst:.1e}"));

    // Original φ squared maps ψ_α, ψ_β, ψ_γ, ψ_δ to ψ_α, ψ_δ, ψ_β, ψ_γ.
    let orig = lookup("PhiOriginal").unwrap().matrix;
    let sq = orig.mul(&orig).unwrap();
    let images = [0, 3, 1, 2];
    let perm_ok = (0..4).all(|j| (0..4).all(|i| (sq.get(i, j).norm() - f64::from(i == images[j])).abs() < EPS));
    ok &= perm_ok;
    notes.push(format!("original phi^2 permutation {}", if perm_ok { "exact" } else { "wrong" }));

    // CHJ against a transcription of the published matrix.
    let s = FRAC_1_SQRT_2;
    let mut chj = [[c(0.0, 0.0); 6]; 6];
    chj[0][0] = c(1.0, 0.0);
    chj[1][1] = c(1.0, 0.0);
    chj[2][2] = c(s, 0.0);
    chj[2][3] = c(s, 0.0);
    chj[3][2] = c(s, 0.0);
    chj[3][3] = c(-s, 0.0);
    chj[4][4] = c(0.0, s);
    chj[4][5] = c(-s, 0.0);
    chj[5][4] = c(s, 0.0);
    chj[5][5] = c(0.0, -s);
    let built = lookup("CHJ").unwrap().matrix;
    let chj_dev = (0..36).map(|n| (built.get(n / 6, n % 6) - chj[n / 6][n % 6]).norm()).fold(0.0, f64::max);
    ok &= chj_dev < EPS;
    notes.push(format!("CHJ deviation {chj_dev:.1e}"));

    // QidJ column j equals −(QidX₂ column 5−j), entrywise.
    let (qj, qx) = (lookup("QidJ").unwrap().matrix, lookup("QidX2").unwrap().matrix);
    let rev_ok = (0..6).all(|j| (0..6).all(|i| qj.get(i, j) == -qx.get(i, 5 - j)));
    ok &= rev_ok;
    notes.push(format!("QidJ reversal {}", if rev_ok { "exact" } else { "broken" }));

    let failed = report.checks.iter().filter(|c| !c.ok()).count();
    line(ok, format!("gate suite: {} checks, {failed} failed; {}", report.checks.len(), notes.join("; ")))
}

fn basis_candidates() -> Line {
    let rng = RandomSource::new(SEED);
    let j = validate_basis_candidate(&BasisCandidate::j_gate(), 10_000, &rng).unwrap();
    let bruss = validate_basis_candidate(&BasisCandidate::bruss(), 10_000, &rng).unwrap();
    let bennett = validate_basis_candidate(&BasisCandidate::bennett(), 10_000, &rng).unwrap();

    // Bennett's gate applied twice sends |0⟩ to a multiple of |1⟩.
    let twice = bennett.squared.apply(&StateVector::basis(2, 0).unwrap()).unwrap();
    let flips = twice.equal_up_to_global_phase(&StateVector::basis(2, 1).unwrap(), EPS).unwrap();

    let ok = j.passes()
        && !bruss.randomness_h
        && bruss.zero_fraction_h == 1.0
        && bennett.randomness_x
        && bennett.randomness_h
        && !bennett.double_application
        && flips;
    line(
        ok,
        format!(
            "basis candidates at 10000 samples: J {} ({:.4}/{:.4}); Bruss H zero-fraction {:.4}; Bennett random {}/{}, G^2|0> ~ |1> {flips}",
            if j.passes() { "passes" } else { "fails" },
            j.zero_fraction_x,
            j.zero_fraction_h,
            bruss.zero_fraction_h,
            bennett.randomness_x,
            bennett.randomness_h,
        ),
    )
}

fn detection() -> Line {
    let p10 = 1.0 - 0.75f64.powi(10);
    let monotone = (0..200).all(|k| detection_probability(k + 1) >= detection_probability(k));
    let ok = detection_probability(1) == 0.25
        && (detection_probability(10) - p10).abs() < 1e-15
        && (detection_probability(10) - 0.943686).abs() < 1e-6
        && monotone;
    line(ok, format!("detection probability: P(1) = {}, P(10) = {:.6}, monotone {monotone}", detection_probability(1), detection_probability(10)))
}

fn conversion_soundness() -> Line {
    let mut failures = Vec::new();
    for p in Protocol::ALL {
        let spec = ProtocolSpec::of(p);
        let bases = oracle_bases(p);
        let circuit = ConversionCircuit::for_protocol(p);
        for k in 0..spec.d_e {
            let (value, basis) = (k / spec.bases, k % spec.bases);
            let expected = StateVector::new(bases[basis][value].clone()).unwrap();
            let reg = circuit.convert(&circuit.attach(&StateVector::basis(spec.d_e, k).unwrap()).unwrap()).unwrap();
            let out = reg.slot_state(circuit.output_slot(), EPS).unwrap();
            let same = out.equal_up_to_global_phase(&expected, EPS).unwrap();
            let decoded = reg.apply(&spec.basis_gate(basis).unwrap(), &[circuit.output_slot()]).unwrap();
            let certain = (decoded.slot_probabilities(circuit.output_slot()).unwrap()[value] - 1.0).abs() < EPS;
            if !(same && certain) {
                failures.push(format!("{p} k={k}"));
            }
        }
    }
    line(
        failures.is_empty(),
        format!("conversion soundness over all 18 Eve indices; failures {failures:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 no-Eve correctness", no_eve_correctness),
        ("2 HD-attack transparency", hd_attack_transparency),
        ("3 standard-Eve QBER", standard_eve_qber),
        ("4 standard-Eve knowledge", standard_eve_knowledge),
        ("5 sift fractions", sift_fractions),
        ("6 gate property suite", gate_properties),
        ("7 basis candidates", basis_candidates),
        ("8 detection probability", detection),
        ("9 conversion soundness", conversion_soundness),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let l = run();
        failed += usize::from(!l.ok);
        println!("{} [{name}] {}", if l.ok { "PASS" } else { "FAIL" }, l.text);
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
