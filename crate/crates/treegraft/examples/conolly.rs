//! The classic slow-growing doubling sequence from the smallest possible
//! seed: a two-node chain, branching two ways, one label per node.
//!
//! Run with: cargo run --example conolly

use treegraft::frequency::frequency_seq;
use treegraft::labeling::leaf_count_seq;
use treegraft::presets::find_preset;
use treegraft::recurrence::{nu_report, verify_recursion};

fn main() {
    let preset = find_preset("conolly").unwrap();
    println!("{}: {}", preset.name, preset.description);
    println!("seed {}, arity {}", preset.config.seed().to_parens(), preset.config.arity());
    println!();

    let table = leaf_count_seq(&preset.config, &preset.scheme, 1 << 17).unwrap();
    println!("R(1..=24) = {:?}", &table.values()[..24]);

    // The additive constant vanishes here, making the recursion homogeneous.
    let report = nu_report(&preset.config, &preset.scheme, 4096).unwrap();
    println!(
        "nu = {} (counts) = {} (closed form) = {:?} (solved); consistent: {}",
        report.nu_from_counts, report.nu_simplified, report.nu_empirical, report.consistent
    );
    let verify = verify_recursion(&preset.config, &preset.scheme, 1 << 17).unwrap();
    println!(
        "recursion checked for n in [{}, {}]: {}",
        verify.checked_from,
        verify.checked_to,
        if verify.passed { "PASS" } else { "FAIL" }
    );
    println!();

    // How often each value appears. For this sequence the frequency of m is
    // the dyadic valuation of 2m: odd values appear once, multiples of 4
    // three times, and powers of two ever more often.
    let freq = frequency_seq(&table, 32).unwrap();
    println!("value m  : {}", (1..=32).map(|m| format!("{m:>2}")).collect::<Vec<_>>().join(" "));
    println!(
        "freq F(m): {}",
        freq.iter().map(|f| format!("{f:>2}")).collect::<Vec<_>>().join(" ")
    );
    let all_dyadic =
        freq.iter().enumerate().all(|(i, &f)| f == (2 * (i as u64 + 1)).trailing_zeros() as u64);
    println!("F(m) == v2(2m) for m <= 32: {all_dyadic}");
    println!();

    // Values double along the level boundaries: R(N(i)) doubles each level.
    let bounds = table.boundaries();
    for i in 1..=8 {
        let n = bounds[i - 1];
        println!("level {i}: N({i}) = {n:>4}, R(N({i})) = {}", table.r(n).unwrap());
    }
}
