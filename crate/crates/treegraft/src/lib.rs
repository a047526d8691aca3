//! Grafted infinite k-ary trees, their leaf-label counting sequences, and
//! the nested recurrences those sequences satisfy.
//!
//! # The construction
//!
//! Start from a finite rooted ordered *seed* tree of height `p` and a
//! branching factor `k`. Stack an infinite tower of *levels* on a downward
//! spine: level `i ≤ p` is the seed pruned down `p − i` times (level 1
//! additionally carries one distinguished *extra* node as the spine's first
//! child), and each level above `p` is the seed with a complete `k`-ary
//! crown of height `i − p` regrown under every leaf. Each level's root — the
//! *supernode* — hangs below the next level's, so the finite shapes knit
//! into one infinite tree ([`skeleton::GraftConfig`]).
//!
//! Nodes then receive consecutive labels `1, 2, 3, …` level by level in a
//! fixed traversal order, with per-role label counts set by a
//! [`LabelScheme`]: regular nodes take `j` labels, the extra node takes its
//! own count, and supernodes follow a per-level [`Schedule`]. The object of
//! interest is the counting sequence
//!
//! ```text
//! R(n) = number of labels 1..=n that sit on leaves of the infinite tree
//! ```
//!
//! materialized by [`leaf_count_seq`] into a [`LeafCountTable`].
//!
//! # What holds, and what this crate checks
//!
//! * **Nested recursion** — past the first `p + 1` levels, `R` satisfies a
//!   `k`-term self-referential recursion with an additive constant `ν` and
//!   an index shift determined by the scheme ([`verify_recursion`], and
//!   [`verify_scheduled`] for level-varying supernode schedules).
//! * **The constant three ways** — `ν` from direct label counts on the
//!   finite levels, from a closed form in the per-level leaf counts, and by
//!   solving the recursion against the table; [`nu_report`] computes and
//!   cross-checks all three.
//! * **Pruning self-similarity** — deleting the deepest labels of a prefix
//!   and relabeling yields the labeled tree's own shorter prefix
//!   ([`LeafCountTable::prune`]); completeness of a prefix is decidable and
//!   quantified by [`LeafCountTable::delta`].
//! * **Prefix irrelevance** — the early values can be overwritten almost
//!   arbitrarily without changing the recursion's tail
//!   ([`perturb_prefix_check`], [`minimal_agreeing_prefix`]).
//! * **Frequencies** — for monotone schemes the run length of each value
//!   decomposes along levels into blocks that tile the frequency sequence
//!   and map level-to-level by one rewrite rule ([`block_decomposition`],
//!   [`verify_block_transform`]).
//! * **Chain spines** — on the two-node seed, separate first/later counts
//!   for the supernode and its spine child still give a two-term recursion
//!   with derived effective constants ([`verify_chain_spine`]); one such
//!   labeling reproduces the classic doubling sequence shifted by one.
//!
//! Well-known members of the family ship as [`presets`]: the classic
//! binary doubling sequence, the self-describing run-length sequence, and a
//! branching example with a negative constant.
//!
//! # Where to start
//!
//! The `examples/` directory is the guided tour — `demo_walkthrough` builds
//! one tree end to end, and each other example exercises one capability.
//! The `treegraft` binary wraps the same API for shell use (`gen`,
//! `verify`, `nu`, `prune`, `freq`, `preset`).

pub mod cli;
pub mod frequency;
pub mod labeling;
pub mod presets;
pub mod recurrence;
pub mod skeleton;
pub mod tree;

pub use frequency::{
    block_decomposition, frequency_seq, transform_block, verify_block_transform,
    BlockTransformReport, FreqError, FrequencyBlocks,
};
pub use labeling::{
    label_events, leaf_count_seq, LabelError, LabelEvent, LabelScheme, LeafCountTable,
    PruneOutcome, Schedule, SchemeFlavor,
};
pub use presets::{all_presets, find_preset, golomb_closed_form, PresetSpec};
pub use recurrence::{
    eval_recurrence, initial_conditions, minimal_agreeing_prefix, nu_report,
    perturb_prefix_check, solve_nu_empirical, verify_chain_spine, verify_recursion,
    verify_scheduled, ChainSpineParams, ChainSpineReport, NuReport, RecurrenceError,
    RecurrenceSpec, VerificationReport, VerifyError, Violation,
};
pub use skeleton::{GraftConfig, NodeRole, SubtreeShape};
pub use tree::{OrderedTree, ParseError, TreeMetrics};
