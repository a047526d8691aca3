//! Named ready-made configurations: classic seeds and schemes whose
//! counting sequences are well-known, plus closed forms to check a couple
//! of them against.

use crate::labeling::{LabelScheme, Schedule};
use crate::recurrence::ChainSpineParams;
use crate::skeleton::GraftConfig;
use crate::tree::OrderedTree;

/// A named configuration bundle.
pub struct PresetSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub config: GraftConfig,
    pub scheme: LabelScheme,
    /// Present when the preset is a chain-seed spine labeling, carrying the
    /// derived recursion parameters.
    pub chain: Option<ChainSpineParams>,
}

fn config(expr: &str, k: u64) -> GraftConfig {
    GraftConfig::new(OrderedTree::parse(expr).expect("valid seed"), k).expect("valid config")
}

/// All built-in presets.
pub fn all_presets() -> Vec<PresetSpec> {
    vec![
        PresetSpec {
            name: "conolly",
            description: "binary chain seed, one label per node: the classic \
                          slow-growing doubling sequence",
            config: config("(())", 2),
            scheme: LabelScheme::standard(1, 0),
            chain: None,
        },
        PresetSpec {
            name: "conolly-shifted",
            description: "spine labeling of the binary chain seed whose sequence \
                          is the classic one shifted by one index",
            config: config("(())", 2),
            scheme: ChainSpineParams { j: 1, s1: 1, s2: 0, j1: 1, j2: 1 }.scheme(),
            chain: Some(ChainSpineParams { j: 1, s1: 1, s2: 0, j1: 1, j2: 1 }),
        },
        PresetSpec {
            name: "golomb",
            description: "unary height-2 chain seed with a one-label extra slot: \
                          the self-describing run-length sequence",
            config: config("((()))", 1),
            scheme: LabelScheme::with_schedule(1, 1, Schedule::constant(0)),
            chain: None,
        },
        PresetSpec {
            name: "golomb-chain",
            description: "unary height-1 chain seed, one label per node: the same \
                          self-describing sequence from a shorter seed",
            config: config("(())", 1),
            scheme: LabelScheme::standard(1, 0),
            chain: None,
        },
        PresetSpec {
            name: "fig5",
            description: "five-node branching seed with two labels per node: the \
                          worked example with a negative additive constant",
            config: config("(((()))())", 2),
            scheme: LabelScheme::standard(2, 0),
            chain: None,
        },
    ]
}

/// Looks a preset up by name.
pub fn find_preset(name: &str) -> Option<PresetSpec> {
    all_presets().into_iter().find(|p| p.name == name)
}

/// Closed form of the self-describing run-length sequence:
/// `⌊(⌊√(8n)⌋ + 1) / 2⌋`.
pub fn golomb_closed_form(n: u64) -> i64 {
    (((8 * n).isqrt() + 1) / 2) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::leaf_count_seq;

    #[test]
    fn presets_resolve_by_name() {
        for name in ["conolly", "conolly-shifted", "golomb", "golomb-chain", "fig5"] {
            assert!(find_preset(name).is_some(), "{name}");
        }
        assert!(find_preset("nope").is_none());
        assert_eq!(all_presets().len(), 5);
    }

    #[test]
    fn run_length_presets_agree_with_the_closed_form() {
        for name in ["golomb", "golomb-chain"] {
            let p = find_preset(name).unwrap();
            let table = leaf_count_seq(&p.config, &p.scheme, 2000).unwrap();
            for n in 1..=2000u64 {
                assert_eq!(table.r(n).unwrap(), golomb_closed_form(n), "{name} at {n}");
            }
        }
    }

    #[test]
    fn shifted_preset_is_the_classic_sequence_moved_by_one() {
        let classic = find_preset("conolly").unwrap();
        let shifted = find_preset("conolly-shifted").unwrap();
        let a = leaf_count_seq(&classic.config, &classic.scheme, 999).unwrap();
        let b = leaf_count_seq(&shifted.config, &shifted.scheme, 1000).unwrap();
        for n in 2..=1000u64 {
            assert_eq!(b.r(n).unwrap(), a.r(n - 1).unwrap(), "at {n}");
        }
    }
}
