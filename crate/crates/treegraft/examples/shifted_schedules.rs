//! Beyond constant label counts: oversize the extra slot to shift the
//! recursion's index (even negative), vary the supernode counts level by
//! level, and relabel a chain's spine to reproduce the classic sequence
//! shifted by one.
//!
//! Run with: cargo run --example shifted_schedules

use treegraft::labeling::{leaf_count_seq, Schedule};
use treegraft::presets::find_preset;
use treegraft::recurrence::{
    effective_shift, verify_chain_spine, verify_scheduled, ChainSpineParams,
};
use treegraft::recurrence::verify_recursion;
use treegraft::skeleton::GraftConfig;
use treegraft::tree::OrderedTree;
use treegraft::LabelScheme;

fn main() {
    let seed = OrderedTree::parse("(())").unwrap();
    let config = GraftConfig::new(seed, 2).unwrap();

    // 1. The extra node's label count s0 only shifts the recursion: the
    //    effective index offset is s + j - s0, so s0 > s + j drives it
    //    negative — the recursion then reads *ahead* of n.
    println!("== oversized extra slots shift the recursion ==");
    for s0 in [1u64, 2, 3, 4] {
        let scheme = LabelScheme::with_schedule(1, s0, Schedule::constant(0));
        let shift = effective_shift(&scheme);
        let report = verify_recursion(&config, &scheme, 20_000).unwrap();
        println!(
            "  s0 = {s0}: shift = {shift:>2}, checked [{}, {}]: {}",
            report.checked_from,
            report.checked_to,
            if report.passed { "PASS" } else { "FAIL" }
        );
    }
    println!();

    // 2. Supernode counts may differ level by level. The constant-shift
    //    recursion no longer applies, but its schedule-aware form does: the
    //    offset tracks the level of the label the inner term lands on.
    println!("== level-varying supernode schedules ==");
    for (desc, schedule) in [
        ("3 then 1 forever", Schedule::new(vec![3], 1)),
        ("5, 2, then 0 forever", Schedule::new(vec![5, 2], 0)),
    ] {
        let scheme = LabelScheme::with_schedule(1, 1, schedule);
        let report = verify_scheduled(&config, &scheme, 20_000).unwrap();
        println!(
            "  supernodes {desc}: checked [{}, {}]: {}",
            report.checked_from,
            report.checked_to,
            if report.passed { "PASS" } else { "FAIL" }
        );
    }
    println!();

    // 3. Chain spines: on the two-node seed, also let the spine's child
    //    nodes take their own counts (j1 first, then j2). The recursion
    //    picks up an effective constant 2j - j1 - 1 and shift.
    println!("== chain-spine labelings ==");
    for params in [
        ChainSpineParams { j: 1, s1: 0, s2: 0, j1: 1, j2: 1 },
        ChainSpineParams { j: 2, s1: 1, s2: 0, j1: 3, j2: 2 },
        ChainSpineParams { j: 2, s1: 0, s2: 1, j1: 1, j2: 2 },
    ] {
        let report = verify_chain_spine(&params, 20_000).unwrap();
        println!(
            "  {params:?}: nu_eff = {}, s_eff = {}, starts with {} ones: {}, recursion: {}",
            report.nu_eff,
            report.s_eff,
            params.s1 + 1,
            if report.ones_prefix_ok { "yes" } else { "NO" },
            if report.recursion.passed { "PASS" } else { "FAIL" }
        );
    }
    println!();

    // 4. One such spine labeling reproduces the classic doubling sequence
    //    shifted by a single index.
    println!("== the shifted classic ==");
    let classic = find_preset("conolly").unwrap();
    let shifted = find_preset("conolly-shifted").unwrap();
    let a = leaf_count_seq(&classic.config, &classic.scheme, 5000).unwrap();
    let b = leaf_count_seq(&shifted.config, &shifted.scheme, 5000).unwrap();
    let agrees = (2..=5000u64).all(|n| b.r(n).unwrap() == a.r(n - 1).unwrap());
    println!("  shifted(n) == classic(n-1) for n in 2..=5000: {agrees}");
    println!("  shifted prefix: {:?}", &b.values()[..12]);
    println!("  classic prefix: {:?}", &a.values()[..12]);
}
