//! The self-describing run-length sequence, grown from a unary chain seed:
//! the sequence 1, 2, 2, 3, 3, 3, 4, ... in which each value m appears
//! exactly m times — here it falls out of counting leaf labels.
//!
//! Run with: cargo run --example golomb

use treegraft::labeling::leaf_count_seq;
use treegraft::presets::{find_preset, golomb_closed_form};
use treegraft::recurrence::{
    eval_recurrence, minimal_agreeing_prefix, nu_report, RecurrenceSpec,
};

fn main() {
    let preset = find_preset("golomb").unwrap();
    println!("{}: {}", preset.name, preset.description);
    println!();

    let n_max = 100_000u64;
    let table = leaf_count_seq(&preset.config, &preset.scheme, n_max).unwrap();
    println!("R(1..=21) = {:?}", &table.values()[..21]);

    // Three independent routes to the same numbers.
    //
    // 1. The closed form: R(n) = round(sqrt(2n)).
    let closed = (1..=n_max).all(|n| table.r(n).unwrap() == golomb_closed_form(n));
    println!("matches round(sqrt(2n)) for n <= {n_max}: {closed}");

    // 2. The one-term nested recursion R(n) = R(n - R(n-1)) + 1.
    let spec = RecurrenceSpec { arity: 1, step: 1, shift: 0, nu: 1, initial: vec![1] };
    let recursed = eval_recurrence(&spec, n_max).unwrap();
    println!("matches R(n) = R(n - R(n-1)) + 1:        {}", recursed == table.values());

    // 3. The tree: nu = 1 three ways.
    let report = nu_report(&preset.config, &preset.scheme, 4096).unwrap();
    println!(
        "nu = {} (counts) = {} (closed form) = {:?} (solved)",
        report.nu_from_counts, report.nu_simplified, report.nu_empirical
    );
    println!();

    // The sequence steps up exactly at labels 1 + m(m+1)/2 — those are the
    // labels that land on leaves, one per run.
    let steps: Vec<u64> =
        (1..=n_max).filter(|&n| table.is_leaf_label(n).unwrap()).take(8).collect();
    println!("first leaf labels (run starts): {steps:?}");
    let triangular = steps
        .iter()
        .enumerate()
        .all(|(m, &n)| n == 1 + (m as u64) * (m as u64 + 1) / 2);
    println!("all of the form 1 + m(m+1)/2: {triangular}");
    println!();

    // A shorter seed gives the identical sequence: the whole height-2 chain
    // is not needed, a single edge suffices.
    let chain = find_preset("golomb-chain").unwrap();
    let chain_table = leaf_count_seq(&chain.config, &chain.scheme, n_max).unwrap();
    println!(
        "two-node chain seed {} reproduces the sequence: {}",
        chain.config.seed().to_parens(),
        chain_table.values() == table.values()
    );

    // And almost none of the initial conditions matter: the recursion locks
    // onto this sequence from a one-value prefix.
    let len = minimal_agreeing_prefix(&preset.config, &preset.scheme, 10_000).unwrap();
    println!("shortest prefix that already determines the tail: {len} value(s)");
}
