//! Label streams over a grafted tree and the leaf-label counting sequence.
//!
//! Labels are consecutive integers assigned level by level in traversal
//! order. Within a node the labels are contiguous; how many a node gets is
//! decided by a [`LabelScheme`]: regular nodes carry `j` labels, the level
//! roots (supernodes) carry a per-level scheduled count, and the extra node
//! carries its own count. A node may carry zero labels; it still occupies
//! its traversal position.
//!
//! The sequence of interest is `R(n)`: how many of the labels `1..=n` sit in
//! leaves of the infinite tree. [`LeafCountTable`] materializes `R` together
//! with enough per-node structure to answer completeness queries and to
//! prune prefixes.

use serde::Serialize;
use thiserror::Error;

use crate::skeleton::{GraftConfig, NodeRole, SubtreeShape};

/// Which labeling family a scheme belongs to. The flavor decides which
/// nodes get scheduled counts and how pruning rewrites counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SchemeFlavor {
    /// Supernode counts come from a schedule; the extra node has its own
    /// count (equal to `j` in the plain constant case); everything else
    /// carries `j`.
    Standard,
    /// The 2-node-chain-seed family: additionally, the supernode's unique
    /// non-extra depth-1 child in each level carries a scheduled count, and
    /// the extra node carries exactly one label.
    ChainSpine,
}

/// An eventually-constant sequence of counts, indexed from 1: explicit
/// `prefix` values first, then `tail` forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schedule {
    prefix: Vec<u64>,
    tail: u64,
}

impl Schedule {
    pub fn constant(tail: u64) -> Self {
        Schedule { prefix: Vec::new(), tail }
    }

    pub fn new(prefix: Vec<u64>, tail: u64) -> Self {
        Schedule { prefix, tail }
    }

    /// Value at position `m ≥ 1`.
    pub fn value(&self, m: usize) -> u64 {
        assert!(m >= 1, "schedules are indexed from 1");
        self.prefix.get(m - 1).copied().unwrap_or(self.tail)
    }

    pub fn tail(&self) -> u64 {
        self.tail
    }

    /// True when every position equals the tail.
    pub fn is_constant(&self) -> bool {
        self.prefix.iter().all(|&v| v == self.tail)
    }

    /// First position from which all values equal the tail.
    pub fn tail_start(&self) -> usize {
        let mut end = self.prefix.len();
        while end > 0 && self.prefix[end - 1] == self.tail {
            end -= 1;
        }
        end + 1
    }
}

/// Per-node label counts for a grafted tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelScheme {
    flavor: SchemeFlavor,
    j: u64,
    extra_count: u64,
    supernodes: Schedule,
    spine_children: Option<Schedule>,
}

impl LabelScheme {
    /// The plain scheme: `j` labels per regular node (including the extra
    /// node), a constant `s` per supernode.
    pub fn standard(j: u64, s: u64) -> Self {
        LabelScheme {
            flavor: SchemeFlavor::Standard,
            j,
            extra_count: j,
            supernodes: Schedule::constant(s),
            spine_children: None,
        }
    }

    /// Standard flavor with a supernode schedule `s_1, s_2, …` and an
    /// explicit extra-node count `s_0`.
    pub fn with_schedule(j: u64, extra_count: u64, supernodes: Schedule) -> Self {
        LabelScheme {
            flavor: SchemeFlavor::Standard,
            j,
            extra_count,
            supernodes,
            spine_children: None,
        }
    }

    /// Chain-spine flavor: one label in the extra node, scheduled supernode
    /// counts, and a scheduled count on each level's unique spine child.
    pub fn chain_spine(j: u64, supernodes: Schedule, spine_children: Schedule) -> Self {
        LabelScheme {
            flavor: SchemeFlavor::ChainSpine,
            j,
            extra_count: 1,
            supernodes,
            spine_children: Some(spine_children),
        }
    }

    pub fn flavor(&self) -> SchemeFlavor {
        self.flavor
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn extra_count(&self) -> u64 {
        self.extra_count
    }

    pub fn supernode_schedule(&self) -> &Schedule {
        &self.supernodes
    }

    pub fn spine_child_schedule(&self) -> Option<&Schedule> {
        self.spine_children.as_ref()
    }

    /// Checks the scheme makes sense at all (`j ≥ 1`) and fits the config
    /// (the chain-spine flavor is defined only for the 2-node chain seed,
    /// whose levels have a unique depth-1 node besides the extra one).
    pub fn validate_for(&self, config: &GraftConfig) -> Result<(), LabelError> {
        if self.j == 0 {
            return Err(LabelError::ZeroJ);
        }
        if self.flavor == SchemeFlavor::ChainSpine && config.seed().node_count() != 2 {
            return Err(LabelError::ChainSpineSeed);
        }
        Ok(())
    }

    /// Label count for a node in the live tree.
    fn count_for(&self, level: usize, role: NodeRole, spine_child: bool) -> u64 {
        match role {
            NodeRole::Supernode => self.supernodes.value(level),
            NodeRole::Extra => self.extra_count,
            NodeRole::Regular => {
                if spine_child {
                    self.spine_children
                        .as_ref()
                        .map(|s| s.value(level))
                        .unwrap_or(self.j)
                } else {
                    self.j
                }
            }
        }
    }

    /// Label count a surviving node receives when the tree is pruned: the
    /// first supernode turns into the new extra node and every scheduled
    /// count shifts down one level. `level ≥ 2` for non-root survivors.
    fn pruned_count_for(&self, level: usize, role: NodeRole, spine_child: bool) -> u64 {
        match role {
            NodeRole::Supernode if level == 1 => self.extra_count,
            NodeRole::Supernode => self.supernodes.value(level - 1),
            NodeRole::Extra => 0, // the extra node is a leaf: deleted, never asked
            NodeRole::Regular => {
                if spine_child {
                    self.spine_children
                        .as_ref()
                        .map(|s| s.value(level - 1))
                        .unwrap_or(self.j)
                } else {
                    self.j
                }
            }
        }
    }
}

/// Errors from label-stream operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("per-node label count j must be at least 1")]
    ZeroJ,
    #[error("chain-spine schemes require the 2-node chain seed (())")]
    ChainSpineSeed,
    #[error("n_max must be at least 1")]
    EmptyRange,
    #[error("label {0} is outside the materialized range")]
    OutOfRange(u64),
    #[error("pruning is defined for n > N(1) = {n1}")]
    PruneBelowFirstLevel { n1: u64 },
}

/// One label being assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LabelEvent {
    pub label: u64,
    /// Level subtree the label lands in (1-based).
    pub level: u32,
    /// Index of the node within its level, in traversal order (0-based).
    pub node: u32,
    pub role: NodeRole,
    /// Whether the node is a leaf of the infinite tree.
    pub is_leaf: bool,
}

/// A level shape with per-node counts resolved, in traversal order.
struct MaterializedLevel {
    nodes: Vec<LevelNode>,
}

struct LevelNode {
    role: NodeRole,
    depth: u32,
    count: u64,
    is_kleaf: bool,
    is_penultimate: bool,
    spine_child: bool,
    /// Positions (traversal order, within level) of this node's children.
    children: Vec<u32>,
}

fn materialize(shape: &SubtreeShape, scheme: &LabelScheme) -> MaterializedLevel {
    let n = shape.shape.node_count();
    let mut depth = vec![0u32; n];
    for id in shape.shape.pre_order() {
        if let Some(p) = shape.shape.parent(id) {
            depth[id] = depth[p] + 1;
        }
    }
    let order = shape.traversal();
    let mut pos_of = vec![0u32; n];
    for (pos, &id) in order.iter().enumerate() {
        pos_of[id] = pos as u32;
    }
    let nodes = order
        .iter()
        .map(|&id| {
            let role = shape.roles[id];
            let spine_child = scheme.flavor() == SchemeFlavor::ChainSpine
                && depth[id] == 1
                && role == NodeRole::Regular;
            LevelNode {
                role,
                depth: depth[id],
                count: scheme.count_for(shape.level, role, spine_child),
                is_kleaf: shape.k_leaf[id],
                is_penultimate: shape.is_penultimate(id),
                spine_child,
                children: shape.shape.children(id).iter().map(|&c| pos_of[c]).collect(),
            }
        })
        .collect();
    MaterializedLevel { nodes }
}

/// Streaming iterator over [`LabelEvent`]s, in label order.
pub struct LabelEvents {
    config: GraftConfig,
    scheme: LabelScheme,
    n_max: u64,
    next_label: u64,
    level: usize,
    nodes: Vec<LevelNode>,
    node_pos: usize,
    left_in_node: u64,
}

impl LabelEvents {
    fn advance_level(&mut self) {
        self.level += 1;
        self.nodes = materialize(&self.config.build_level(self.level), &self.scheme).nodes;
        self.node_pos = 0;
        self.left_in_node = self.nodes[0].count;
    }
}

impl Iterator for LabelEvents {
    type Item = LabelEvent;

    fn next(&mut self) -> Option<LabelEvent> {
        if self.next_label > self.n_max {
            return None;
        }
        loop {
            if self.level == 0 {
                self.advance_level();
            }
            while self.left_in_node == 0 {
                if self.node_pos + 1 < self.nodes.len() {
                    self.node_pos += 1;
                    self.left_in_node = self.nodes[self.node_pos].count;
                } else {
                    self.advance_level();
                }
            }
            let node = &self.nodes[self.node_pos];
            self.left_in_node -= 1;
            let ev = LabelEvent {
                label: self.next_label,
                level: self.level as u32,
                node: self.node_pos as u32,
                role: node.role,
                is_leaf: node.is_kleaf,
            };
            self.next_label += 1;
            return Some(ev);
        }
    }
}

/// Streams the labels `1..=n_max` with their node metadata.
pub fn label_events(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<LabelEvents, LabelError> {
    scheme.validate_for(config)?;
    if n_max == 0 {
        return Err(LabelError::EmptyRange);
    }
    Ok(LabelEvents {
        config: config.clone(),
        scheme: scheme.clone(),
        n_max,
        next_label: 1,
        level: 0,
        nodes: Vec::new(),
        node_pos: 0,
        left_in_node: 0,
    })
}

/// Per-node record kept by the table, in global traversal order.
#[derive(Debug, Clone)]
struct NodeRecord {
    level: u32,
    role: NodeRole,
    depth: u32,
    count: u64,
    /// First label of the node; for a zero-count node, the next label
    /// emitted at or after its traversal position.
    first_label: u64,
    is_kleaf: bool,
    is_penultimate: bool,
    spine_child: bool,
    /// Global node indices of this node's children (same level).
    children: Vec<u32>,
}

/// Outcome of pruning the prefix holding labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PruneOutcome {
    /// Labels remaining after deletion and count rewriting; call it `n'`.
    pub pruned_label_count: u64,
    /// Leaf labels of the pruned tree (labels on nodes that the pruning
    /// turned into leaves of the infinite pruned tree).
    pub pruned_leaf_labels: i64,
    /// Whether the pruned tree is structurally identical (shape, roles, and
    /// per-node counts) to the prefix of the same tree holding `n'` labels.
    pub isomorphic_to_prefix: bool,
}

/// The materialized counting sequence `R(1..=n_max)` plus the node-level
/// structure needed for completeness and pruning queries.
///
/// All levels touched by the label range are materialized in full, so
/// completeness intervals are exact even near `n_max`.
pub struct LeafCountTable {
    scheme: LabelScheme,
    n_max: u64,
    r: Vec<i64>,
    leaf_label: Vec<bool>,
    label_node: Vec<u32>,
    nodes: Vec<NodeRecord>,
    /// Cumulative label count through each materialized level; the last
    /// entry may exceed `n_max`.
    level_ends: Vec<u64>,
    /// Merged inclusive label ranges `[a, b]` on which the prefix is
    /// incomplete; ends may exceed `n_max` (completion point known exactly
    /// because levels are materialized in full).
    incomplete_runs: Vec<(u64, u64)>,
    /// `pr[n-1]` = leaf-label count of the pruned prefix, valid for n > N(1).
    pr: Vec<i64>,
}

impl LeafCountTable {
    /// Builds the table for a configured tree.
    pub fn build(
        config: &GraftConfig,
        scheme: &LabelScheme,
        n_max: u64,
    ) -> Result<Self, LabelError> {
        scheme.validate_for(config)?;
        let cfg = config.clone();
        Self::from_levels((1..).map(move |i| cfg.build_level(i)), scheme, n_max)
    }

    /// Builds the table from an explicit level source. Levels must be
    /// supplied in order starting at level 1. If the source runs out before
    /// `n_max` labels are emitted, the table simply ends earlier.
    pub fn from_levels<I>(levels: I, scheme: &LabelScheme, n_max: u64) -> Result<Self, LabelError>
    where
        I: IntoIterator<Item = SubtreeShape>,
    {
        if scheme.j() == 0 {
            return Err(LabelError::ZeroJ);
        }
        if n_max == 0 {
            return Err(LabelError::EmptyRange);
        }
        let mut table = LeafCountTable {
            scheme: scheme.clone(),
            n_max,
            r: Vec::new(),
            leaf_label: Vec::new(),
            label_node: Vec::new(),
            nodes: Vec::new(),
            level_ends: Vec::new(),
            incomplete_runs: Vec::new(),
            pr: Vec::new(),
        };
        let mut emitted: u64 = 0;
        let mut running_r: i64 = 0;
        for (idx, shape) in levels.into_iter().enumerate() {
            let level = idx + 1;
            debug_assert_eq!(shape.level, level, "levels must arrive in order from 1");
            let lvl = materialize(&shape, scheme);
            let base = table.nodes.len() as u32;
            for node in lvl.nodes {
                let global = table.nodes.len() as u32;
                let first_label = emitted + 1;
                for _ in 0..node.count {
                    emitted += 1;
                    if emitted <= n_max {
                        if node.is_kleaf {
                            running_r += 1;
                        }
                        table.r.push(running_r);
                        table.leaf_label.push(node.is_kleaf);
                        table.label_node.push(global);
                    }
                }
                table.nodes.push(NodeRecord {
                    level: level as u32,
                    role: node.role,
                    depth: node.depth,
                    count: node.count,
                    first_label,
                    is_kleaf: node.is_kleaf,
                    is_penultimate: node.is_penultimate,
                    spine_child: node.spine_child,
                    children: node.children.iter().map(|&c| base + c).collect(),
                });
            }
            table.level_ends.push(emitted);
            if emitted >= n_max {
                break;
            }
        }
        table.n_max = table.n_max.min(emitted);
        table.compute_incomplete_runs();
        table.compute_pruned_leaf_counts();
        Ok(table)
    }

    /// Largest label materialized (the requested bound, or fewer if a finite
    /// level source ran out first).
    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn scheme(&self) -> &LabelScheme {
        &self.scheme
    }

    /// `R(n)`: leaf labels among `1..=n`.
    pub fn r(&self, n: u64) -> Result<i64, LabelError> {
        self.check_range(n)?;
        Ok(self.r[(n - 1) as usize])
    }

    /// The whole sequence `R(1), …, R(n_max)`.
    pub fn values(&self) -> &[i64] {
        &self.r
    }

    pub fn is_leaf_label(&self, n: u64) -> Result<bool, LabelError> {
        self.check_range(n)?;
        Ok(self.leaf_label[(n - 1) as usize])
    }

    /// Whether label `n` sits on a node all of whose children are leaves of
    /// the infinite tree.
    pub fn is_penultimate_label(&self, n: u64) -> Result<bool, LabelError> {
        self.check_range(n)?;
        Ok(self.nodes[self.label_node[(n - 1) as usize] as usize].is_penultimate)
    }

    /// Level subtree containing label `n`.
    pub fn level_of(&self, n: u64) -> Result<u32, LabelError> {
        self.check_range(n)?;
        Ok(self.nodes[self.label_node[(n - 1) as usize] as usize].level)
    }

    /// `N(i)`: the largest label in levels `1..=i`, if level `i` finished
    /// within the materialized range.
    pub fn boundary(&self, i: usize) -> Option<u64> {
        if i == 0 || i > self.level_ends.len() {
            return None;
        }
        let end = self.level_ends[i - 1];
        (end <= self.n_max).then_some(end)
    }

    /// All level boundaries `N(1), N(2), …` completed within the range.
    pub fn boundaries(&self) -> Vec<u64> {
        self.level_ends.iter().copied().filter(|&e| e <= self.n_max).collect()
    }

    fn check_range(&self, n: u64) -> Result<(), LabelError> {
        if n == 0 || n > self.n_max {
            return Err(LabelError::OutOfRange(n));
        }
        Ok(())
    }

    /// The prefix with labels `1..=n` is *complete* when every penultimate
    /// node it reaches (by traversal position) has all of its children
    /// present with all of their labels.
    pub fn is_complete(&self, n: u64) -> Result<bool, LabelError> {
        self.check_range(n)?;
        Ok(!self.in_incomplete_run(n))
    }

    /// Smallest `d ≥ 0` such that the prefix with `n + d` labels is
    /// complete.
    pub fn delta(&self, n: u64) -> Result<u64, LabelError> {
        self.check_range(n)?;
        match self.incomplete_runs.binary_search_by(|&(a, b)| {
            if b < n {
                std::cmp::Ordering::Less
            } else if a > n {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        }) {
            Ok(idx) => Ok(self.incomplete_runs[idx].1 + 1 - n),
            Err(_) => Ok(0),
        }
    }

    fn in_incomplete_run(&self, n: u64) -> bool {
        self.incomplete_runs
            .binary_search_by(|&(a, b)| {
                if b < n {
                    std::cmp::Ordering::Less
                } else if a > n {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    fn compute_incomplete_runs(&mut self) {
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for node in &self.nodes {
            if !node.is_penultimate {
                continue;
            }
            // The family becomes pending when the node is reached and
            // resolves once every child is fully labeled.
            let open = node.first_label;
            if open > self.n_max {
                continue;
            }
            let mut close = node.first_label + node.count.saturating_sub(1);
            for &c in &node.children {
                let child = &self.nodes[c as usize];
                let thr = child.first_label + child.count.saturating_sub(1);
                close = close.max(thr);
            }
            if close <= open {
                continue;
            }
            let (a, b) = (open, close - 1);
            match runs.last_mut() {
                Some(last) if a <= last.1 + 1 => last.1 = last.1.max(b),
                _ => runs.push((a, b)),
            }
        }
        self.incomplete_runs = runs;
    }

    /// Prefix table of pruned-leaf label counts: for each `n`, the total
    /// (rewritten) label count on surviving penultimate nodes of the prefix.
    fn compute_pruned_leaf_counts(&mut self) {
        let mut deltas = vec![0i64; self.n_max as usize + 1];
        for node in &self.nodes {
            if !node.is_penultimate {
                continue;
            }
            let new_count =
                self.scheme
                    .pruned_count_for(node.level as usize, node.role, node.spine_child) as i64;
            let old_count = node.count as i64;
            if node.count == 0 {
                // Included wholesale once its position is reached.
                if node.first_label <= self.n_max {
                    deltas[node.first_label as usize] += new_count;
                }
                continue;
            }
            let mut prev = 0i64;
            for r in 1..=node.count {
                let n = node.first_label + r - 1;
                if n > self.n_max {
                    break;
                }
                let contrib = (r as i64 + new_count - old_count).clamp(0, new_count);
                deltas[n as usize] += contrib - prev;
                prev = contrib;
            }
        }
        let mut pr = Vec::with_capacity(self.n_max as usize);
        let mut acc = 0i64;
        for n in 1..=self.n_max as usize {
            acc += deltas[n];
            pr.push(acc);
        }
        self.pr = pr;
    }

    /// `PR(n)`: leaf-label count of the pruned prefix, valid for `n > N(1)`.
    pub fn pruned_leaf_count(&self, n: u64) -> Result<i64, LabelError> {
        self.check_range(n)?;
        let n1 = self.level_ends[0];
        if n <= n1 {
            return Err(LabelError::PruneBelowFirstLevel { n1 });
        }
        Ok(self.pr[(n - 1) as usize])
    }

    /// Prunes the prefix with labels `1..=n`: deletes every leaf of the
    /// infinite tree together with its labels, rewrites the surviving
    /// counts (first supernode becomes the new extra node; scheduled counts
    /// shift down one level), and compares the result against this tree's
    /// own prefix of the resulting size.
    pub fn prune(&self, n: u64) -> Result<PruneOutcome, LabelError> {
        self.check_range(n)?;
        let n1 = self.level_ends[0];
        if n <= n1 {
            return Err(LabelError::PruneBelowFirstLevel { n1 });
        }
        let last = self.label_node[(n - 1) as usize] as usize;
        // (level, depth, role, count) in traversal order; depth encodes the
        // shape, so sequence equality is structural equality.
        let mut pruned: Vec<(u32, u32, NodeRole, u64)> = Vec::new();
        let mut total: u64 = 0;
        let mut leaf_labels: i64 = 0;
        for (idx, node) in self.nodes.iter().enumerate().take(last + 1) {
            if node.is_kleaf {
                continue;
            }
            let full_new =
                self.scheme
                    .pruned_count_for(node.level as usize, node.role, node.spine_child);
            let new_count = if idx == last && n < node.first_label + node.count - 1 {
                // The prefix cuts this node short: keep its included labels,
                // adjusted by however much the rewrite grows or shrinks the
                // full node.
                let included = (n - node.first_label + 1) as i64;
                (included + full_new as i64 - node.count as i64).clamp(0, full_new as i64) as u64
            } else {
                full_new
            };
            let (new_level, new_depth, new_role) =
                if node.role == NodeRole::Supernode && node.level == 1 {
                    (1, 1, NodeRole::Extra)
                } else {
                    (node.level - 1, node.depth, node.role)
                };
            total += new_count;
            if node.is_penultimate {
                leaf_labels += new_count as i64;
            }
            pruned.push((new_level, new_depth, new_role, new_count));
        }
        // A node with no labels at the very end of the prefix is not
        // witnessed by any label; the reference prefix always ends on a
        // labeled node.
        while pruned.last().is_some_and(|&(_, _, _, c)| c == 0) {
            pruned.pop();
        }
        let isomorphic = total >= 1 && total <= self.n_max && {
            let ref_last = self.label_node[(total - 1) as usize] as usize;
            let mut reference: Vec<(u32, u32, NodeRole, u64)> = Vec::with_capacity(ref_last + 1);
            for (idx, node) in self.nodes.iter().enumerate().take(ref_last + 1) {
                let count = if idx == ref_last {
                    total - node.first_label + 1
                } else {
                    node.count
                };
                reference.push((node.level, node.depth, node.role, count));
            }
            pruned == reference
        };
        Ok(PruneOutcome {
            pruned_label_count: total,
            pruned_leaf_labels: leaf_labels,
            isomorphic_to_prefix: isomorphic,
        })
    }
}

/// Builds the counting sequence `R(1..=n_max)` for a configured tree.
pub fn leaf_count_seq(
    config: &GraftConfig,
    scheme: &LabelScheme,
    n_max: u64,
) -> Result<LeafCountTable, LabelError> {
    LeafCountTable::build(config, scheme, n_max)
}

/// Total label count of level `i` under a scheme, without streaming.
pub fn labels_in_level(config: &GraftConfig, scheme: &LabelScheme, i: usize) -> u64 {
    materialize(&config.build_level(i), scheme).nodes.iter().map(|n| n.count).sum()
}

/// `N(i)`: the largest label in levels `1..=i` (their total label count).
pub fn boundary_label(config: &GraftConfig, scheme: &LabelScheme, i: usize) -> u64 {
    (1..=i).map(|lvl| labels_in_level(config, scheme, lvl)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::OrderedTree;

    fn demo_config() -> GraftConfig {
        GraftConfig::new(OrderedTree::parse("(((()))())").unwrap(), 2).unwrap()
    }

    fn demo_table(n_max: u64) -> LeafCountTable {
        leaf_count_seq(&demo_config(), &LabelScheme::standard(2, 0), n_max).unwrap()
    }

    #[test]
    fn first_events_of_the_demo_tree() {
        let cfg = demo_config();
        let events: Vec<LabelEvent> =
            label_events(&cfg, &LabelScheme::standard(2, 0), 8).unwrap().collect();
        let brief: Vec<(u64, u32, NodeRole, bool)> =
            events.iter().map(|e| (e.label, e.level, e.role, e.is_leaf)).collect();
        assert_eq!(
            brief,
            vec![
                (1, 1, NodeRole::Extra, true),
                (2, 1, NodeRole::Extra, true),
                (3, 1, NodeRole::Regular, true),
                (4, 1, NodeRole::Regular, true),
                (5, 2, NodeRole::Regular, false),
                (6, 2, NodeRole::Regular, false),
                (7, 2, NodeRole::Regular, true),
                (8, 2, NodeRole::Regular, true),
            ]
        );
    }

    #[test]
    fn demo_tree_counting_sequence() {
        let t = demo_table(40);
        assert_eq!(t.r(7).unwrap(), 5);
        assert_eq!(t.r(20).unwrap(), 10);
        assert_eq!(t.r(27).unwrap(), 14);
        assert_eq!(t.boundaries()[..4], [4, 8, 16, 32]);
        assert_eq!(
            t.values()[..16],
            [1, 2, 3, 4, 4, 4, 5, 6, 6, 6, 6, 6, 7, 8, 9, 10]
        );
    }

    #[test]
    fn counting_is_monotone_with_unit_steps() {
        let t = demo_table(500);
        let mut prev = 0;
        for &v in t.values() {
            assert!(v == prev || v == prev + 1);
            prev = v;
        }
    }

    #[test]
    fn conolly_chain_prefix() {
        let cfg = GraftConfig::new(OrderedTree::parse("(())").unwrap(), 2).unwrap();
        let t = leaf_count_seq(&cfg, &LabelScheme::standard(1, 0), 12).unwrap();
        assert_eq!(t.values(), [1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8]);
        assert_eq!(t.boundary(2), Some(5));
    }

    #[test]
    fn golomb_schedule_prefix() {
        let cfg = GraftConfig::new(OrderedTree::parse("((()))").unwrap(), 1).unwrap();
        let scheme = LabelScheme::with_schedule(1, 1, Schedule::constant(0));
        let t = leaf_count_seq(&cfg, &scheme, 10).unwrap();
        assert_eq!(t.values(), [1, 2, 2, 3, 3, 3, 4, 4, 4, 4]);
        assert_eq!(t.boundaries(), [2, 4, 7]);
    }

    #[test]
    fn chain_spine_conolly_events() {
        let cfg = GraftConfig::new(OrderedTree::parse("(())").unwrap(), 2).unwrap();
        let scheme =
            LabelScheme::chain_spine(1, Schedule::constant(0), Schedule::constant(1));
        let events: Vec<LabelEvent> = label_events(&cfg, &scheme, 5).unwrap().collect();
        let brief: Vec<(u64, NodeRole, bool)> =
            events.iter().map(|e| (e.label, e.role, e.is_leaf)).collect();
        assert_eq!(
            brief,
            vec![
                (1, NodeRole::Extra, true),
                (2, NodeRole::Regular, true),
                (3, NodeRole::Regular, false),
                (4, NodeRole::Regular, true),
                (5, NodeRole::Regular, true),
            ]
        );
        let t = leaf_count_seq(&cfg, &scheme, 12).unwrap();
        assert_eq!(t.values(), [1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8]);
    }

    #[test]
    fn completeness_on_the_demo_tree() {
        let t = demo_table(40);
        assert!(t.is_complete(32).unwrap());
        assert!(!t.is_complete(23).unwrap());
        assert!(t.is_complete(18).unwrap());
        assert_eq!(t.delta(23).unwrap(), 3);
        assert_eq!(t.delta(18).unwrap(), 0);
        // A complete prefix right at an early boundary.
        assert!(t.is_complete(4).unwrap());
        assert!(!t.is_complete(3).unwrap(), "supernode reached, second child unlabeled");
    }

    #[test]
    fn penultimate_labels_on_the_demo_tree() {
        let t = demo_table(40);
        // Labels 21,22 sit on the parent of the first grown leaf pair.
        assert!(t.is_penultimate_label(21).unwrap());
        assert!(t.is_penultimate_label(22).unwrap());
        assert!(!t.is_penultimate_label(23).unwrap());
        assert!(t.is_leaf_label(23).unwrap());
        assert_eq!(t.level_of(23).unwrap(), 4);
        assert_eq!(t.level_of(16).unwrap(), 3);
    }

    #[test]
    fn pruning_the_demo_tree() {
        let t = demo_table(40);
        let out = t.prune(27).unwrap();
        assert_eq!(out.pruned_label_count, 15);
        assert!(out.isomorphic_to_prefix);
        assert_eq!(out.pruned_leaf_labels, 9);
        let out = t.prune(32).unwrap();
        assert_eq!(out.pruned_label_count, 16);
        assert!(out.isomorphic_to_prefix);
        // Below the first level the operation is undefined.
        assert!(matches!(t.prune(3), Err(LabelError::PruneBelowFirstLevel { n1: 4 })));
    }

    #[test]
    fn prune_matches_fast_leaf_counts() {
        let t = demo_table(200);
        for n in 5..=200 {
            let out = t.prune(n).unwrap();
            assert!(out.isomorphic_to_prefix, "prune at {n}");
            assert_eq!(
                out.pruned_leaf_labels,
                t.pruned_leaf_count(n).unwrap(),
                "PR at {n}"
            );
        }
    }

    #[test]
    fn pruning_a_schedule_shifts_counts() {
        let cfg = GraftConfig::new(OrderedTree::parse("((()))").unwrap(), 1).unwrap();
        let scheme = LabelScheme::with_schedule(1, 1, Schedule::constant(0));
        let t = leaf_count_seq(&cfg, &scheme, 30).unwrap();
        let out = t.prune(8).unwrap();
        // 8 labels, 4 of them leaves, extra slot count 1, supernode tail 0.
        assert_eq!(out.pruned_label_count, 5);
        assert!(out.isomorphic_to_prefix);
        assert_eq!(out.pruned_leaf_labels, 3);
    }

    #[test]
    fn level_label_totals() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        assert_eq!(labels_in_level(&cfg, &scheme, 1), 4);
        assert_eq!(labels_in_level(&cfg, &scheme, 4), 16);
        assert_eq!(boundary_label(&cfg, &scheme, 4), 32);
        let t = demo_table(32);
        assert_eq!(t.boundary(4), Some(32));
    }

    #[test]
    fn finite_level_source_caps_the_table() {
        let cfg = demo_config();
        let scheme = LabelScheme::standard(2, 0);
        let levels: Vec<SubtreeShape> = (1..=2).map(|i| cfg.build_level(i)).collect();
        let t = LeafCountTable::from_levels(levels, &scheme, 100).unwrap();
        assert_eq!(t.n_max(), 8);
        assert!(t.r(9).is_err());
    }

    #[test]
    fn scheme_validation() {
        let chainy = LabelScheme::chain_spine(1, Schedule::constant(0), Schedule::constant(1));
        let cfg = demo_config();
        assert_eq!(chainy.validate_for(&cfg), Err(LabelError::ChainSpineSeed));
        let zero = LabelScheme::standard(0, 0);
        assert_eq!(zero.validate_for(&cfg), Err(LabelError::ZeroJ));
    }

    #[test]
    fn schedule_values_and_tail() {
        let s = Schedule::new(vec![5, 3, 0], 0);
        assert_eq!(s.value(1), 5);
        assert_eq!(s.value(3), 0);
        assert_eq!(s.value(17), 0);
        assert!(!s.is_constant());
        assert_eq!(s.tail_start(), 3);
        assert!(Schedule::constant(2).is_constant());
        assert_eq!(Schedule::constant(2).tail_start(), 1);
    }
}
