//! The grafted infinite tree's skeleton: the sequence of finite level
//! subtrees hung off an infinite spine of supernodes.
//!
//! A [`GraftConfig`] is a finite seed tree `T` of height `p ≥ 1` plus a
//! branching factor `k ≥ 1`. Level subtree `i` (written `K_i`) is:
//!
//! * for `2 ≤ i ≤ p`: `T` with its leaves deleted `p − i` times;
//! * for `i = 1`: `T` pruned `p − 1` times (a root plus leaves) with one
//!   **extra node** attached as the leftmost child of the root;
//! * for `i > p`: `T` with each leaf made the root of a complete `k`-ary
//!   subtree of height `i − p`.
//!
//! Each level's root is a *supernode*; the supernodes form an infinite
//! upward chain (supernode `i` is a child of supernode `i + 1`), so no
//! supernode is ever a leaf of the infinite tree. The leaves of the infinite
//! tree are exactly the childless nodes of the level shapes.

use serde::Serialize;
use thiserror::Error;

use crate::tree::{OrderedTree, TreeBuilder};

/// Errors constructing a [`GraftConfig`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("seed tree must have at least 2 nodes")]
    SeedTooSmall,
    #[error("branching factor k must be at least 1")]
    ZeroArity,
}

/// What a node of a level shape is, for labeling purposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeRole {
    /// The level's root, part of the infinite spine.
    Supernode,
    /// The distinguished leftmost child of the first supernode (level 1 only).
    Extra,
    /// Every other node.
    Regular,
}

/// Seed tree plus branching factor; the full description of a grafted tree's
/// shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftConfig {
    seed: OrderedTree,
    arity: u64,
}

impl GraftConfig {
    pub fn new(seed: OrderedTree, arity: u64) -> Result<Self, ConfigError> {
        if seed.node_count() < 2 {
            return Err(ConfigError::SeedTooSmall);
        }
        if arity == 0 {
            return Err(ConfigError::ZeroArity);
        }
        Ok(GraftConfig { seed, arity })
    }

    pub fn seed(&self) -> &OrderedTree {
        &self.seed
    }

    /// Branching factor `k`.
    pub fn arity(&self) -> u64 {
        self.arity
    }

    /// Seed height `p` (level `p` is the seed itself).
    pub fn seed_height(&self) -> usize {
        self.seed.height()
    }

    /// Builds the shape of level `i ≥ 1`.
    pub fn build_level(&self, i: usize) -> SubtreeShape {
        assert!(i >= 1, "levels are numbered from 1");
        let p = self.seed_height();
        let shape = if i == 1 {
            let mut base = self.seed.clone();
            for _ in 0..p - 1 {
                base = base.prune_leaves().expect("seed height bounds the prune count");
            }
            // base is now the root plus its surviving children; put the extra
            // node in front of them.
            let mut b = TreeBuilder::new();
            let root = b.add(None);
            b.add(Some(root)); // the extra node
            for &c in base.children(base.root()) {
                b.graft(Some(root), &base, c);
            }
            b.finish()
        } else if i <= p {
            let mut base = self.seed.clone();
            for _ in 0..p - i {
                base = base.prune_leaves().expect("seed height bounds the prune count");
            }
            base
        } else {
            // Copy the seed, growing a complete k-ary subtree of height
            // i − p below each of its leaves as they are copied.
            let mut b = TreeBuilder::new();
            let root = b.add(None);
            let mut stack: Vec<(usize, usize)> = self
                .seed
                .children(self.seed.root())
                .iter()
                .rev()
                .map(|&c| (c, root))
                .collect();
            while let Some((src, parent)) = stack.pop() {
                let dst = b.add(Some(parent));
                if self.seed.is_leaf(src) {
                    self.attach_complete(&mut b, dst, i - p);
                } else {
                    for &c in self.seed.children(src).iter().rev() {
                        stack.push((c, dst));
                    }
                }
            }
            b.finish()
        };
        SubtreeShape::classify(i, shape)
    }

    /// Attaches a complete `k`-ary tree of the given height below `node`.
    fn attach_complete(&self, b: &mut TreeBuilder, node: usize, height: usize) {
        let mut frontier = vec![node];
        for _ in 0..height {
            let mut next = Vec::with_capacity(frontier.len() * self.arity as usize);
            for parent in frontier {
                for _ in 0..self.arity {
                    next.push(b.add(Some(parent)));
                }
            }
            frontier = next;
        }
    }

    /// Leaf counts `ℓ_1, …, ℓ_levels` of the level subtrees. `ℓ_1` includes
    /// the extra node.
    pub fn level_leaf_counts(&self, levels: usize) -> Vec<u64> {
        (1..=levels).map(|i| self.build_level(i).shape.leaf_count() as u64).collect()
    }
}

/// One level subtree: its shape plus per-node roles and leaf flags.
///
/// `k_leaf[id]` says whether node `id` is a leaf of the *infinite* tree
/// (true exactly for the childless nodes of the shape; the root never
/// qualifies because the spine continues above it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeShape {
    pub level: usize,
    pub shape: OrderedTree,
    pub roles: Vec<NodeRole>,
    pub k_leaf: Vec<bool>,
}

impl SubtreeShape {
    /// Derives roles and leaf flags from a bare shape. Node 1 of level 1 is
    /// the extra node by the leftmost-child construction; callers building
    /// deliberate variants may overwrite `roles` afterwards.
    pub fn classify(level: usize, shape: OrderedTree) -> Self {
        let n = shape.node_count();
        let mut roles = vec![NodeRole::Regular; n];
        roles[shape.root()] = NodeRole::Supernode;
        if level == 1 {
            let extra = shape.children(shape.root())[0];
            roles[extra] = NodeRole::Extra;
        }
        let k_leaf = (0..n).map(|id| shape.is_leaf(id)).collect();
        SubtreeShape { level, shape, roles, k_leaf }
    }

    /// Node ids in the order labels are assigned.
    ///
    /// Levels ≥ 2 use plain pre-order from the supernode. Level 1 starts at
    /// the supernode's first child, then the supernode, then the remaining
    /// children's subtrees in order.
    pub fn traversal(&self) -> Vec<usize> {
        let root = self.shape.root();
        if self.level >= 2 {
            return self.shape.pre_order();
        }
        let kids = self.shape.children(root);
        let mut order = Vec::with_capacity(self.shape.node_count());
        order.push(kids[0]);
        order.push(root);
        for &c in &kids[1..] {
            // Children of the level-1 shape are leaves in the standard
            // construction, but walk subtrees for robustness.
            let mut stack = vec![c];
            while let Some(id) = stack.pop() {
                order.push(id);
                for &g in self.shape.children(id).iter().rev() {
                    stack.push(g);
                }
            }
        }
        order
    }

    /// Nodes all of whose children are leaves of the infinite tree. Level
    /// roots qualify only at level 1: every other supernode has the previous
    /// supernode as an internal child.
    pub fn is_penultimate(&self, id: usize) -> bool {
        if self.k_leaf[id] {
            return false;
        }
        if self.roles[id] == NodeRole::Supernode && self.level >= 2 {
            return false;
        }
        self.shape.children(id).iter().all(|&c| self.k_leaf[c])
    }
}
