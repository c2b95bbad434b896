use hdqkd_core::experiment::{run_cell, run_grid, table_rows, CellConfig};
use hdqkd_core::protocols::{run_trial, EveModel, Protocol, ProtocolSpec, Scenario};
use hdqkd_core::{RandomSource, StreamTag};
use proptest::prelude::*;

#[test]
fn scenarios_without_eve_share_sifted_keys() {
    let rng = RandomSource::new(31);
    for p in Protocol::ALL {
        let spec = ProtocolSpec::of(p);
        for trial in 0..4 {
            let keys: Vec<_> = Scenario::ALL
                .iter()
                .map(|&s| run_trial(&spec, s, EveModel::None, 200, &rng, trial).unwrap().sifted)
                .collect();
            assert!(keys.windows(2).all(|w| w[0].alice == w[1].alice && w[0].bob == w[1].bob), "{p}");
            assert_eq!(keys[0].alice, keys[0].bob);
        }
    }
}

#[test]
fn standard_eve_breaks_matches_but_keeps_positions() {
    let rng = RandomSource::new(8);
    let spec = ProtocolSpec::of(Protocol::Bb84);
    let clean = run_trial(&spec, Scenario::Control, EveModel::None, 200, &rng, 0).unwrap();
    let tapped = run_trial(&spec, Scenario::Control, EveModel::Standard, 200, &rng, 0).unwrap();
    assert_eq!(clean.sifted.alice.positions, tapped.sifted.alice.positions);
    assert_eq!(clean.sifted.alice, tapped.sifted.alice);
    assert!(!tapped.result.matches_control);
    assert!(tapped.result.qber > 0.0);
}

#[test]
fn cells_are_independent_of_evaluation_order() {
    let cfg = CellConfig::new(Protocol::Ssp, Scenario::Relabel, EveModel::Hd, 4);
    let all = run_cell(&cfg).unwrap();
    let spec = ProtocolSpec::of(Protocol::Ssp);
    let rng = RandomSource::new(4);
    for t in (0..cfg.trials as u64).rev() {
        let single = run_trial(&spec, cfg.scenario, cfg.eve, cfg.raw_bits, &rng, t).unwrap().result;
        assert_eq!(all.trials[t as usize], single);
    }
}

#[test]
fn grid_has_six_rows_per_protocol() {
    assert_eq!(table_rows(Protocol::HdBb84, 0).len(), 6);
    let grid = run_grid(3).unwrap();
    assert_eq!(grid.len(), 3);
    for (_, cells) in &grid {
        let labels: Vec<String> = cells.iter().map(|c| c.config.row_label()).collect();
        assert_eq!(labels[3], "Control_E");
        assert!(cells[3].aggregate.mean_qber > 0.0);
        assert!(cells.iter().enumerate().all(|(i, c)| i == 3 || c.aggregate.mean_qber == 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn streams_are_addressable(seed in any::<u64>(), trial in 0u64..1000, idx in 0u64..64) {
        let rng = RandomSource::new(seed);
        let mut s = rng.stream(trial, StreamTag::BobChoices);
        let seq: Vec<u64> = (0..=idx).map(|_| s.next_u64()).collect();
        prop_assert_eq!(rng.stream(trial, StreamTag::BobChoices).draw_at(idx), seq[idx as usize]);
        prop_assert_ne!(
            rng.stream(trial, StreamTag::BobChoices).draw_at(idx),
            rng.stream(trial, StreamTag::AliceChoices).draw_at(idx)
        );
    }

    #[test]
    fn hd_eve_never_disturbs(seed in any::<u64>(), trial in 0u64..50) {
        let rng = RandomSource::new(seed);
        for p in Protocol::ALL {
            let spec = ProtocolSpec::of(p);
            for s in [Scenario::Conversion, Scenario::Relabel] {
                let r = run_trial(&spec, s, EveModel::Hd, 24, &rng, trial).unwrap().result;
                prop_assert_eq!(r.qber, 0.0);
                prop_assert!(r.matches_control);
            }
        }
    }
}
