//! Value frequencies, decomposed level by level. The run length of each
//! value m splits along the tree's levels, and for plain unit-label schemes
//! each level's block turns into the next by one mechanical rewrite:
//! bump every entry but the last, then weave in k-1 ones.
//!
//! Run with: cargo run --example frequency_blocks

use treegraft::frequency::{block_decomposition, frequency_seq, transform_block, verify_block_transform};
use treegraft::labeling::leaf_count_seq;
use treegraft::skeleton::GraftConfig;
use treegraft::tree::OrderedTree;
use treegraft::LabelScheme;

fn show(name: &str, expr: &str, k: u64, levels: usize) {
    let seed = OrderedTree::parse(expr).unwrap();
    let config = GraftConfig::new(seed, k).unwrap();
    let scheme = LabelScheme::standard(1, 0);

    println!("== {name}: seed {expr}, arity {k} ==");
    let blocks = block_decomposition(&config, &scheme, levels).unwrap();
    for (i, block) in blocks.raw.iter().enumerate().take(5) {
        println!("  level {} block: {:?}", i + 1, block);
    }

    // Starred blocks drop the value shared with the next level and credit
    // it forward; concatenated they tile the frequency sequence exactly.
    let concat = blocks.starred_concat();
    let table = leaf_count_seq(&config, &scheme, 1 << 15).unwrap();
    let freq = frequency_seq(&table, concat.len() as u64).unwrap();
    println!("  starred blocks tile F(1..={}): {}", concat.len(), concat == freq);

    // The rewrite rule, demonstrated on one block and verified on all.
    let p = config.seed_height();
    let from = p.max(2);
    let demo = &blocks.raw[from - 1];
    println!("  level {from} block {:?} -> transformed {:?}", demo, transform_block(demo, k));
    println!("  level {} block        {:?}", from + 1, &blocks.raw[from]);
    let rule = verify_block_transform(&config, &scheme, levels).unwrap();
    println!(
        "  rewrite rule holds for levels {}..={}: {}",
        rule.checked_from,
        rule.checked_to,
        if rule.passed { "yes" } else { "NO" }
    );
    println!();
}

fn main() {
    // The classic doubling sequence: blocks are runs of dyadic valuations.
    show("binary chain", "(())", 2, 12);
    // A ternary graft of the same chain.
    show("ternary chain", "(())", 3, 9);
    // A taller seed: the rule starts at the seed's height instead of 2.
    show("height-3 chain", "(((())))", 2, 12);
}
