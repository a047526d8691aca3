//! Bring your own seed: pass a nested-parenthesis tree and the labeling
//! parameters on the command line, and get the full treatment — sequence,
//! additive constant, recursion check, and a pruning probe.
//!
//! Run with: cargo run --example custom_seed -- "((()()))" 3 2 1
//! Arguments: SEED [K] [J] [S] (defaults: "((()()))" 3 2 1)

use treegraft::labeling::{boundary_label, leaf_count_seq};
use treegraft::recurrence::{effective_shift, nu_report, verify_recursion};
use treegraft::skeleton::GraftConfig;
use treegraft::tree::OrderedTree;
use treegraft::LabelScheme;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let expr = args.first().map(String::as_str).unwrap_or("((()()))");
    let k: u64 = args.get(1).map(|a| a.parse().expect("K must be a number")).unwrap_or(3);
    let j: u64 = args.get(2).map(|a| a.parse().expect("J must be a number")).unwrap_or(2);
    let s: u64 = args.get(3).map(|a| a.parse().expect("S must be a number")).unwrap_or(1);

    let seed = OrderedTree::parse(expr).expect("SEED must be a balanced parenthesis string");
    let config = GraftConfig::new(seed, k).expect("seed needs at least two nodes, k at least 1");
    let scheme = LabelScheme::standard(j, s);
    scheme.validate_for(&config).expect("scheme fits the seed");

    let p = config.seed_height();
    println!("seed {expr} (height {p}), k = {k}, j = {j}, supernode count s = {s}");
    println!("level leaf counts: {:?}", config.level_leaf_counts(p + 2));

    let np1 = boundary_label(&config, &scheme, p + 1);
    let n_max = (np1 + 2000).max(5000);
    let table = leaf_count_seq(&config, &scheme, n_max).unwrap();
    println!("R(1..=24) = {:?}", &table.values()[..24.min(table.values().len())]);
    println!("level boundaries: {:?}", &table.boundaries()[..p + 1]);
    println!();

    let report = nu_report(&config, &scheme, n_max).unwrap();
    println!("alpha = {}, beta = {}", report.alpha, report.beta);
    println!(
        "nu = {} (counts) = {} (closed form) = {:?} (solved); consistent: {}",
        report.nu_from_counts, report.nu_simplified, report.nu_empirical, report.consistent
    );

    let shift = effective_shift(&scheme);
    let terms: Vec<String> = (1..=k)
        .map(|i| {
            let inner_off = i * j;
            let outer_off = shift + (i as i64 - 1) * j as i64;
            let outer = match outer_off {
                0 => format!("R(n - R(n-{inner_off}))"),
                o if o > 0 => format!("R(n - {o} - R(n-{inner_off}))"),
                o => format!("R(n + {} - R(n-{inner_off}))", -o),
            };
            outer
        })
        .collect();
    let nu = report.nu_from_counts;
    let tail = match nu {
        0 => String::new(),
        v if v > 0 => format!(" + {v}"),
        v => format!(" - {}", -v),
    };
    println!("recursion: R(n) = {}{tail}   for n > {np1}", terms.join(" + "));

    let verify = verify_recursion(&config, &scheme, n_max).unwrap();
    println!(
        "checked for n in [{}, {}]: {}",
        verify.checked_from,
        verify.checked_to,
        if verify.passed { "PASS" } else { "FAIL" }
    );
    println!();

    // Prune a mid-range prefix and check self-similarity.
    let n = np1 + (np1 / 2);
    let out = table.prune(n).unwrap();
    println!(
        "prune(prefix of {n} labels) -> {} labels, {} on leaves, equals own prefix: {}",
        out.pruned_label_count, out.pruned_leaf_labels, out.isomorphic_to_prefix
    );
}
