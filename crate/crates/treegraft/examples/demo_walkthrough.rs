//! End-to-end tour on one five-node seed: build the level tower, watch the
//! first labels land, read off the counting sequence, compute the additive
//! constant three independent ways, and prune a prefix back onto itself.
//!
//! Run with: cargo run --example demo_walkthrough

use treegraft::labeling::leaf_count_seq;
use treegraft::recurrence::{effective_shift, initial_conditions, nu_report, verify_recursion};
use treegraft::skeleton::GraftConfig;
use treegraft::tree::OrderedTree;
use treegraft::{label_events, LabelScheme};

fn main() {
    // A seed of height 3: the root carries a height-2 chain and a height-1
    // chain. Two labels per regular node, supernodes skipped entirely.
    let seed = OrderedTree::parse("(((()))())").unwrap();
    let config = GraftConfig::new(seed, 2).unwrap();
    let scheme = LabelScheme::standard(2, 0);

    println!("seed           {}", config.seed().to_parens());
    println!("arity k        {}", config.arity());
    println!("labels/node j  {}", scheme.j());
    println!("seed height p  {}", config.seed_height());
    println!();

    // The tower of level shapes. Levels 1..=p are the seed pruned down;
    // levels above p regrow complete k-ary crowns under the seed's leaves.
    for i in 1..=4 {
        let level = config.build_level(i);
        println!(
            "level {i}: {:12} {} leaves",
            level.shape.to_parens(),
            level.shape.leaf_count()
        );
    }
    println!("leaf counts per level: {:?}", config.level_leaf_counts(4));
    println!();

    // Stream the first labels in assignment order.
    println!("first 8 labels:");
    for ev in label_events(&config, &scheme, 8).unwrap() {
        println!(
            "  label {:>2}  level {}  {:?}{}",
            ev.label,
            ev.level,
            ev.role,
            if ev.is_leaf { "  (on a leaf)" } else { "" }
        );
    }
    println!();

    // The sequence itself: R(n) = leaf labels among the first n labels.
    let table = leaf_count_seq(&config, &scheme, 400).unwrap();
    println!("R(1..=16) = {:?}", &table.values()[..16]);
    println!("level boundaries N(i): {:?}", &table.boundaries()[..4]);
    println!();

    // The additive constant, three ways: from direct label counts on the
    // finite levels, from the closed-form in the leaf counts, and by solving
    // the recursion against the table.
    let report = nu_report(&config, &scheme, 400).unwrap();
    println!("alpha (leaf labels in levels 1..=p)        = {}", report.alpha);
    println!("beta  (penultimate labels in levels 1..=p) = {}", report.beta);
    println!("nu from counts     = {}", report.nu_from_counts);
    println!("nu simplified form = {}", report.nu_simplified);
    println!("nu solved from table = {:?}", report.nu_empirical);
    println!("all three agree    = {}", report.consistent);
    println!();

    // The recursion those constants feed. Initial conditions run through
    // N(p+1); past that every value satisfies the nested form.
    let init = initial_conditions(&config, &scheme).unwrap();
    println!("initial conditions: {} values (through N(p+1))", init.len());
    println!("index shift: {}", effective_shift(&scheme));
    let verify = verify_recursion(&config, &scheme, 100_000).unwrap();
    println!(
        "recursion checked for n in [{}, {}]: {}",
        verify.checked_from,
        verify.checked_to,
        if verify.passed { "PASS" } else { "FAIL" }
    );
    println!();

    // Completeness and pruning. A prefix is complete when every penultimate
    // node that has started its leaf-children block has finished it; pruning
    // a prefix deletes the deepest labels and relabels what survives.
    for n in [18, 23, 27, 32] {
        let complete = table.is_complete(n).unwrap();
        let delta = table.delta(n).unwrap();
        let out = table.prune(n).unwrap();
        println!(
            "n = {n:>2}: R = {:>2}, {} (delta {}), prune -> {:>2} labels, {} on leaves, self-similar: {}",
            table.r(n).unwrap(),
            if complete { "complete  " } else { "incomplete" },
            delta,
            out.pruned_label_count,
            out.pruned_leaf_labels,
            out.isomorphic_to_prefix
        );
    }
}
