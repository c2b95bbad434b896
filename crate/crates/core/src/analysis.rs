//! Per-trial and aggregate statistics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scores of one trial. Fractions are in `[0, 1]`; knowledge is `None` when
/// no eavesdropper was present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub trial: u64,
    pub raw_bits: usize,
    pub sifted_bits: usize,
    pub errors: usize,
    pub qber: f64,
    pub knowledge_alice: Option<f64>,
    pub knowledge_bob: Option<f64>,
    pub matches_control: bool,
    /// The sifted key was empty; qber and knowledge were reported as 0.
    pub empty_key: bool,
}

impl TrialResult {
    pub fn sift_fraction(&self) -> f64 {
        self.sifted_bits as f64 / self.raw_bits as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateStats {
    pub trials: usize,
    pub mean_sifted_bits: f64,
    pub mean_sift_fraction: f64,
    pub mean_qber: f64,
    pub mean_knowledge_alice: Option<f64>,
    pub mean_knowledge_bob: Option<f64>,
    pub match_rate: f64,
}

fn agreement(a: &[bool], b: &[bool]) -> Result<(usize, usize)> {
    if a.len() != b.len() {
        return Err(Error::Contract(format!("key lengths differ: {} vs {}", a.len(), b.len())));
    }
    Ok((a.iter().zip(b).filter(|(x, y)| x == y).count(), a.len()))
}

/// Fraction of differing bits; 0 for empty keys.
pub fn qber(alice: &[bool], bob: &[bool]) -> Result<f64> {
    let (same, len) = agreement(alice, bob)?;
    Ok(if len == 0 { 0.0 } else { (len - same) as f64 / len as f64 })
}

/// Fraction of positions where Eve's bit equals the reference; 0 for empty keys.
pub fn knowledge(eve: &[bool], reference: &[bool]) -> Result<f64> {
    let (same, len) = agreement(eve, reference)?;
    Ok(if len == 0 { 0.0 } else { same as f64 / len as f64 })
}

/// Probability that comparing `compared_bits` sifted bits exposes a full
/// intercept-resend attack on BB84: `1 − (3/4)^K`.
pub fn detection_probability(compared_bits: u32) -> f64 {
    1.0 - 0.75f64.powi(compared_bits.min(i32::MAX as u32) as i32)
}

fn mean(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    (n > 0).then(|| sum / n as f64)
}

pub fn aggregate(results: &[TrialResult]) -> Result<AggregateStats> {
    if results.is_empty() {
        return Err(Error::Contract("cannot aggregate zero trials".into()));
    }
    let n = results.len() as f64;
    Ok(AggregateStats {
        trials: results.len(),
        mean_sifted_bits: mean(results.iter().map(|r| r.sifted_bits as f64)).unwrap(),
        mean_sift_fraction: mean(results.iter().map(TrialResult::sift_fraction)).unwrap(),
        mean_qber: mean(results.iter().map(|r| r.qber)).unwrap(),
        mean_knowledge_alice: mean(results.iter().filter_map(|r| r.knowledge_alice)),
        mean_knowledge_bob: mean(results.iter().filter_map(|r| r.knowledge_bob)),
        match_rate: results.iter().filter(|r| r.matches_control).count() as f64 / n,
    })
}

/// `0.2503` → `"25.03%"`.
pub fn format_percent(fraction: f64) -> String {
    format!("{:.2}%", fraction * 100.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn result(qber: f64, matches: bool) -> TrialResult {
        TrialResult {
            trial: 0,
            raw_bits: 200,
            sifted_bits: 100,
            errors: (qber * 100.0) as usize,
            qber,
            knowledge_alice: None,
            knowledge_bob: None,
            matches_control: matches,
            empty_key: false,
        }
    }

    #[test]
    fn qber_basics() {
        let a = [true, false, true, true];
        let not_a: Vec<bool> = a.iter().map(|b| !b).collect();
        assert_eq!(qber(&a, &a).unwrap(), 0.0);
        assert_eq!(qber(&a, &not_a).unwrap(), 1.0);
        assert_eq!(qber(&[], &[]).unwrap(), 0.0);
        assert!(matches!(qber(&a, &a[..3]), Err(Error::Contract(_))));
    }

    #[test]
    fn knowledge_basics() {
        let r = [true, false, false];
        let flipped: Vec<bool> = r.iter().map(|b| !b).collect();
        assert_eq!(knowledge(&r, &r).unwrap(), 1.0);
        assert_eq!(knowledge(&flipped, &r).unwrap(), 0.0);
        assert_eq!(knowledge(&[], &[]).unwrap(), 0.0);
        assert!(knowledge(&r, &[]).is_err());
    }

    #[test]
    fn detection_probability_values() {
        assert_eq!(detection_probability(0), 0.0);
        assert_eq!(detection_probability(1), 0.25);
        // (3/4)^10 = 59049 / 1048576.
        let expected = 1.0 - 59049.0 / 1048576.0;
        assert!((detection_probability(10) - expected).abs() < 1e-15);
        assert!((detection_probability(10) - 0.9437).abs() < 1e-4);
        assert_eq!(detection_probability(u32::MAX), 1.0);
    }

    #[test]
    fn aggregate_rates() {
        let all_clean = vec![result(0.0, true); 25];
        let a = aggregate(&all_clean).unwrap();
        assert_eq!(a.mean_qber, 0.0);
        assert_eq!(a.match_rate, 1.0);
        assert_eq!(a.mean_knowledge_alice, None);
        assert_eq!(aggregate(&[result(0.1, true), result(0.3, false)]).unwrap().match_rate, 0.5);
        assert!(aggregate(&[]).is_err());
    }

    #[test]
    fn percent_format() {
        assert_eq!(format_percent(0.2503), "25.03%");
        assert_eq!(format_percent(1.0), "100.00%");
    }

    proptest! {
        #[test]
        fn qber_symmetric_and_zero_on_self(a in proptest::collection::vec(any::<bool>(), 0..64),
                                           mask in proptest::collection::vec(any::<bool>(), 64)) {
            let b: Vec<bool> = a.iter().zip(&mask).map(|(x, m)| x ^ m).collect();
            prop_assert_eq!(qber(&a, &a).unwrap(), 0.0);
            prop_assert_eq!(qber(&a, &b).unwrap(), qber(&b, &a).unwrap());
            prop_assert_eq!(knowledge(&a, &a).unwrap(), if a.is_empty() { 0.0 } else { 1.0 });
        }

        #[test]
        fn detection_monotone(k in 0u32..500) {
            prop_assert!(detection_probability(k + 1) >= detection_probability(k));
            prop_assert!((0.0..=1.0).contains(&detection_probability(k)));
        }

        #[test]
        fn aggregate_within_bounds(qs in proptest::collection::vec(0.0f64..=1.0, 1..30)) {
            let rs: Vec<TrialResult> = qs.iter().map(|&q| result(q, q < 0.5)).collect();
            let a = aggregate(&rs).unwrap();
            let lo = qs.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = qs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(a.mean_qber >= lo - 1e-12 && a.mean_qber <= hi + 1e-12);
            prop_assert!((0.0..=1.0).contains(&a.match_rate));
        }
    }
}
