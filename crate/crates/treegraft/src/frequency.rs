//! Frequency analysis of counting sequences: how often each value is hit,
//! the per-level block decomposition of those frequencies, and the rule
//! that transforms one level's block into the next.
//!
//! The counting sequence is nondecreasing with unit steps, so the
//! occurrences of a value `m` form one contiguous run and `F(m)` is its
//! length. For unit label counts (`j = 1`) the frequency sequence splits
//! into per-level blocks: `F_i` lists the run lengths of the values hit by
//! labels of level `i`. Dropping each block's last entry (its run continues
//! into the next level) and crediting that continuation to the next block's
//! first entry makes the blocks concatenate exactly into `F`.

use serde::Serialize;
use thiserror::Error;

use crate::labeling::{
    boundary_label, leaf_count_seq, LabelError, LabelScheme, LeafCountTable, SchemeFlavor,
};
use crate::skeleton::GraftConfig;

/// Errors from frequency computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreqError {
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("frequency counts need the sequence to pass {m_max}; it tops out at {top}")]
    RangeTooShort { m_max: u64, top: i64 },
    #[error("block decomposition is defined for unit label counts (j = 1)")]
    NeedsUnitJ,
    #[error("this operation is defined for standard-flavor schemes")]
    WrongFlavor,
    #[error("the block transformation rule needs the plain unit scheme with zero supernode counts")]
    NeedsPlainZeroScheme,
    #[error("need at least {need} levels for this check, got {got}")]
    TooFewLevels { need: usize, got: usize },
}

/// `F(m)` for `m = 1..=m_max`: how many indices hit each value. The table
/// must extend past the last requested value so every count is final.
pub fn frequency_seq(table: &LeafCountTable, m_max: u64) -> Result<Vec<u64>, FreqError> {
    let top = *table.values().last().unwrap_or(&0);
    if top <= m_max as i64 {
        return Err(FreqError::RangeTooShort { m_max, top });
    }
    let mut freq = vec![0u64; m_max as usize];
    for &v in table.values() {
        if v >= 1 && v <= m_max as i64 {
            freq[(v - 1) as usize] += 1;
        }
    }
    Ok(freq)
}

/// Per-level frequency blocks and their boundary-adjusted forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrequencyBlocks {
    /// `raw[i-1]` = run lengths of the values hit within level `i`.
    pub raw: Vec<Vec<u64>>,
    /// Same blocks with each last entry dropped and, from the second block
    /// on, the first entry incremented: these concatenate exactly into the
    /// frequency sequence.
    pub starred: Vec<Vec<u64>>,
}

impl FrequencyBlocks {
    /// The concatenation of the starred blocks: a prefix of `F`.
    pub fn starred_concat(&self) -> Vec<u64> {
        self.starred.iter().flatten().copied().collect()
    }
}

/// Splits the frequency sequence into per-level blocks for the first
/// `levels` levels. Defined for standard schemes with `j = 1`.
pub fn block_decomposition(
    config: &GraftConfig,
    scheme: &LabelScheme,
    levels: usize,
) -> Result<FrequencyBlocks, FreqError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(FreqError::WrongFlavor);
    }
    if scheme.j() != 1 {
        return Err(FreqError::NeedsUnitJ);
    }
    if levels == 0 {
        return Err(FreqError::TooFewLevels { need: 1, got: 0 });
    }
    let n_max = boundary_label(config, scheme, levels);
    let table = leaf_count_seq(config, scheme, n_max)?;
    let values = table.values();
    let mut raw = Vec::with_capacity(levels);
    let mut start = 0u64;
    for i in 1..=levels {
        let end = table.boundary(i).expect("level materialized");
        let mut block = Vec::new();
        let mut current: Option<(i64, u64)> = None;
        for n in start + 1..=end {
            let v = values[(n - 1) as usize];
            match current {
                Some((value, count)) if value == v => current = Some((value, count + 1)),
                Some((_, count)) => {
                    block.push(count);
                    current = Some((v, 1));
                }
                None => current = Some((v, 1)),
            }
        }
        if let Some((_, count)) = current {
            block.push(count);
        }
        raw.push(block);
        start = end;
    }
    let starred = raw
        .iter()
        .enumerate()
        .map(|(idx, block)| {
            let mut b = block[..block.len().saturating_sub(1)].to_vec();
            if idx > 0 {
                if let Some(first) = b.first_mut() {
                    *first += 1;
                }
            }
            b
        })
        .collect();
    Ok(FrequencyBlocks { raw, starred })
}

/// The level-step rule for plain unit schemes with zero supernode counts:
/// increment every entry but the last, then insert `k − 1` ones between
/// consecutive entries.
pub fn transform_block(block: &[u64], k: u64) -> Vec<u64> {
    if block.is_empty() {
        return Vec::new();
    }
    let mut bumped: Vec<u64> = block.iter().map(|&v| v + 1).collect();
    *bumped.last_mut().unwrap() -= 1;
    let mut out = Vec::with_capacity(bumped.len() * k as usize);
    for (idx, v) in bumped.into_iter().enumerate() {
        if idx > 0 {
            out.extend(std::iter::repeat(1).take((k - 1) as usize));
        }
        out.push(v);
    }
    out
}

/// Result of checking the block transformation rule level by level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockTransformReport {
    /// First level index whose block was fed through the rule.
    pub checked_from: usize,
    /// Last level index whose block was produced and compared.
    pub checked_to: usize,
    pub failing: Vec<usize>,
    pub passed: bool,
}

/// Verifies `F_{i+1} = transform(F_i)` for `i` from `max(p, 2)` up to
/// `levels − 1`. Requires the plain scheme with `j = 1` and zero supernode
/// counts; below `max(p, 2)` the rule is not claimed and indeed can fail.
pub fn verify_block_transform(
    config: &GraftConfig,
    scheme: &LabelScheme,
    levels: usize,
) -> Result<BlockTransformReport, FreqError> {
    if scheme.flavor() != SchemeFlavor::Standard {
        return Err(FreqError::WrongFlavor);
    }
    if scheme.j() != 1
        || scheme.extra_count() != 1
        || !scheme.supernode_schedule().is_constant()
        || scheme.supernode_schedule().tail() != 0
    {
        return Err(FreqError::NeedsPlainZeroScheme);
    }
    let p = config.seed_height();
    let from = p.max(2);
    if levels < from + 1 {
        return Err(FreqError::TooFewLevels { need: from + 1, got: levels });
    }
    let blocks = block_decomposition(config, scheme, levels)?;
    let k = config.arity();
    let mut failing = Vec::new();
    for i in from..levels {
        let expected = transform_block(&blocks.raw[i - 1], k);
        if expected != blocks.raw[i] {
            failing.push(i + 1);
        }
    }
    Ok(BlockTransformReport {
        checked_from: from,
        checked_to: levels,
        passed: failing.is_empty(),
        failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::Schedule;
    use crate::tree::OrderedTree;

    fn chain(k: u64) -> GraftConfig {
        GraftConfig::new(OrderedTree::parse("(())").unwrap(), k).unwrap()
    }

    #[test]
    fn binary_chain_frequencies_are_dyadic_valuations() {
        let table = leaf_count_seq(&chain(2), &LabelScheme::standard(1, 0), 4000).unwrap();
        let freq = frequency_seq(&table, 256).unwrap();
        for (idx, &f) in freq.iter().enumerate() {
            let m = idx as u64 + 1;
            assert_eq!(f, (2 * m).trailing_zeros() as u64, "F({m})");
        }
    }

    #[test]
    fn frequency_needs_headroom() {
        let table = leaf_count_seq(&chain(2), &LabelScheme::standard(1, 0), 20).unwrap();
        assert!(matches!(
            frequency_seq(&table, 100),
            Err(FreqError::RangeTooShort { m_max: 100, .. })
        ));
    }

    #[test]
    fn blocks_of_the_binary_chain() {
        let blocks =
            block_decomposition(&chain(2), &LabelScheme::standard(1, 0), 4).unwrap();
        assert_eq!(blocks.raw[0], [1, 1]);
        assert_eq!(blocks.raw[1], [1, 1, 1]);
        assert_eq!(blocks.raw[2], [2, 1, 2, 1, 1]);
        assert_eq!(blocks.starred[0], [1]);
        assert_eq!(blocks.starred[1], [2, 1]);
        assert_eq!(blocks.starred[2], [3, 1, 2, 1]);
    }

    #[test]
    fn starred_blocks_concatenate_into_the_frequency_sequence() {
        for k in [1u64, 2, 3] {
            let scheme = LabelScheme::standard(1, 0);
            let blocks = block_decomposition(&chain(k), &scheme, 7).unwrap();
            let concat = blocks.starred_concat();
            let table = leaf_count_seq(&chain(k), &scheme, 60_000).unwrap();
            let freq = frequency_seq(&table, concat.len() as u64).unwrap();
            assert_eq!(concat, freq, "arity {k}");
        }
        // A taller seed with a scheduled extra count.
        let cfg = GraftConfig::new(OrderedTree::parse("((()))").unwrap(), 1).unwrap();
        let scheme = LabelScheme::with_schedule(1, 1, Schedule::constant(0));
        let blocks = block_decomposition(&cfg, &scheme, 8).unwrap();
        let concat = blocks.starred_concat();
        let table = leaf_count_seq(&cfg, &scheme, 2000).unwrap();
        let freq = frequency_seq(&table, concat.len() as u64).unwrap();
        assert_eq!(concat, freq);
    }

    #[test]
    fn transformation_rule_mechanics() {
        assert_eq!(transform_block(&[1, 1, 1], 2), [2, 1, 2, 1, 1]);
        assert_eq!(transform_block(&[2, 1], 1), [3, 1]);
        assert_eq!(transform_block(&[1, 1, 1, 1], 3), [2, 1, 1, 2, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn transformation_rule_holds_from_the_second_level() {
        for k in [1u64, 2, 3] {
            let report =
                verify_block_transform(&chain(k), &LabelScheme::standard(1, 0), 8).unwrap();
            assert_eq!(report.checked_from, 2);
            assert!(report.passed, "arity {k}: failing {:?}", report.failing);
        }
    }

    #[test]
    fn transformation_rule_is_not_claimed_at_the_first_level() {
        // For a height-1 seed the extra node disturbs the first block:
        // feeding it through the rule does not give the second block.
        let blocks =
            block_decomposition(&chain(2), &LabelScheme::standard(1, 0), 2).unwrap();
        assert_ne!(transform_block(&blocks.raw[0], 2), blocks.raw[1]);
    }

    #[test]
    fn taller_seeds_start_the_rule_at_their_height() {
        let cfg = GraftConfig::new(OrderedTree::parse("(((())))").unwrap(), 2).unwrap();
        let report = verify_block_transform(&cfg, &LabelScheme::standard(1, 0), 7).unwrap();
        assert_eq!(report.checked_from, 3);
        assert!(report.passed, "failing {:?}", report.failing);
    }

    #[test]
    fn guards_on_the_transformation_rule() {
        let err = verify_block_transform(&chain(2), &LabelScheme::standard(1, 1), 6).unwrap_err();
        assert!(matches!(err, FreqError::NeedsPlainZeroScheme));
        let err = verify_block_transform(&chain(2), &LabelScheme::standard(2, 0), 6).unwrap_err();
        assert!(matches!(err, FreqError::NeedsPlainZeroScheme));
        let err = block_decomposition(&chain(2), &LabelScheme::standard(2, 0), 4).unwrap_err();
        assert!(matches!(err, FreqError::NeedsUnitJ));
    }
}
