//! Finite rooted ordered trees and the leaf-pruning operation.
//!
//! Trees are stored as a flat node arena in pre-order; child order is
//! significant. The text form is nested parentheses: a tree is `(` followed by
//! the serializations of its children followed by `)`, so `()` is a single
//! node and `(()())` is a root with two leaf children.

use std::fmt;

use thiserror::Error;

/// Error produced when parsing a parenthesis expression fails.
///
/// `offset` is the byte position in the input at which the problem was
/// detected (for `UnbalancedOpen` the offset of the `(` left unclosed).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input: expected a tree expression")]
    Empty,
    #[error("unexpected character {found:?} at byte {offset}")]
    UnexpectedChar { offset: usize, found: char },
    #[error("unmatched ')' at byte {offset}")]
    UnbalancedClose { offset: usize },
    #[error("unclosed '(' at byte {offset}")]
    UnbalancedOpen { offset: usize },
    #[error("trailing input at byte {offset}: a tree expression is a single term")]
    TrailingInput { offset: usize },
}

/// Error produced by [`OrderedTree::prune_leaves`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("cannot prune a single-node tree: every node is a leaf")]
    SingleNode,
}

#[derive(Debug, Clone)]
struct TreeNode {
    parent: Option<usize>,
    children: Vec<usize>,
}

/// Summary counts for a tree: height (edge count of a longest root-to-leaf
/// path), total node count, and leaf count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeMetrics {
    pub height: usize,
    pub node_count: usize,
    pub leaf_count: usize,
}

/// A finite rooted tree with ordered children.
///
/// Node ids are indices into an arena held in pre-order: the root is node 0
/// and every node's id is greater than its parent's.
#[derive(Debug, Clone)]
pub struct OrderedTree {
    nodes: Vec<TreeNode>,
}

impl OrderedTree {
    /// A single-node tree.
    pub fn leaf() -> Self {
        OrderedTree {
            nodes: vec![TreeNode { parent: None, children: Vec::new() }],
        }
    }

    /// Parses a nested-parenthesis expression. Whitespace is ignored; the
    /// expression must be a single balanced term.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        let mut nodes: Vec<TreeNode> = Vec::new();
        // Stack of (node id, byte offset of its '(') for currently open nodes.
        let mut open: Vec<(usize, usize)> = Vec::new();
        let mut done = false;
        for (offset, ch) in input.char_indices() {
            match ch {
                '(' => {
                    if done {
                        return Err(ParseError::TrailingInput { offset });
                    }
                    let parent = open.last().map(|&(id, _)| id);
                    let id = nodes.len();
                    nodes.push(TreeNode { parent, children: Vec::new() });
                    if let Some(p) = parent {
                        nodes[p].children.push(id);
                    }
                    open.push((id, offset));
                }
                ')' => {
                    if open.pop().is_none() {
                        return Err(ParseError::UnbalancedClose { offset });
                    }
                    done = open.is_empty();
                }
                c if c.is_whitespace() => {}
                c => {
                    if done || open.is_empty() {
                        return Err(ParseError::TrailingInput { offset });
                    }
                    return Err(ParseError::UnexpectedChar { offset, found: c });
                }
            }
        }
        if let Some(&(_, offset)) = open.last() {
            return Err(ParseError::UnbalancedOpen { offset });
        }
        if nodes.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(OrderedTree { nodes })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn parent(&self, id: usize) -> Option<usize> {
        self.nodes[id].parent
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.nodes[id].children
    }

    pub fn is_leaf(&self, id: usize) -> bool {
        self.nodes[id].children.is_empty()
    }

    /// Number of edges from the root down to `id`.
    pub fn depth(&self, id: usize) -> usize {
        let mut d = 0;
        let mut cur = id;
        while let Some(p) = self.nodes[cur].parent {
            d += 1;
            cur = p;
        }
        d
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }

    pub fn height(&self) -> usize {
        (0..self.nodes.len())
            .filter(|&id| self.is_leaf(id))
            .map(|id| self.depth(id))
            .max()
            .unwrap_or(0)
    }

    pub fn metrics(&self) -> TreeMetrics {
        TreeMetrics {
            height: self.height(),
            node_count: self.node_count(),
            leaf_count: self.leaf_count(),
        }
    }

    /// Node ids in pre-order (children visited left to right).
    pub fn pre_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![0usize];
        while let Some(id) = stack.pop() {
            out.push(id);
            for &c in self.nodes[id].children.iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// Deletes every leaf (all of them at once). This lowers the height by
    /// exactly one and removes `leaf_count` nodes. Fails on a single node,
    /// which has no non-leaf part.
    pub fn prune_leaves(&self) -> Result<OrderedTree, PruneError> {
        if self.nodes.len() == 1 {
            return Err(PruneError::SingleNode);
        }
        let mut keep = vec![false; self.nodes.len()];
        let mut new_id = vec![usize::MAX; self.nodes.len()];
        let mut count = 0;
        for id in 0..self.nodes.len() {
            if !self.is_leaf(id) {
                keep[id] = true;
                new_id[id] = count;
                count += 1;
            }
        }
        let mut nodes = Vec::with_capacity(count);
        for id in 0..self.nodes.len() {
            if keep[id] {
                let parent = self.nodes[id].parent.map(|p| new_id[p]);
                let children = self.nodes[id]
                    .children
                    .iter()
                    .copied()
                    .filter(|&c| keep[c])
                    .map(|c| new_id[c])
                    .collect();
                nodes.push(TreeNode { parent, children });
            }
        }
        Ok(OrderedTree { nodes })
    }

    /// Serializes back to the nested-parenthesis form.
    pub fn to_parens(&self) -> String {
        let mut out = String::with_capacity(self.nodes.len() * 2);
        // Explicit stack: Open pushes the node, Close emits ')'.
        enum Step {
            Open(usize),
            Close,
        }
        let mut stack = vec![Step::Open(0)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Open(id) => {
                    out.push('(');
                    stack.push(Step::Close);
                    for &c in self.nodes[id].children.iter().rev() {
                        stack.push(Step::Open(c));
                    }
                }
                Step::Close => out.push(')'),
            }
        }
        out
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl std::str::FromStr for OrderedTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderedTree::parse(s)
    }
}

impl PartialEq for OrderedTree {
    /// Structural equality including child order. Compared via a parallel
    /// walk so two trees built through different code paths (parse, builder,
    /// pruning) compare by shape rather than by arena layout.
    fn eq(&self, other: &Self) -> bool {
        if self.nodes.len() != other.nodes.len() {
            return false;
        }
        let mut stack = vec![(0usize, 0usize)];
        while let Some((a, b)) = stack.pop() {
            let ca = &self.nodes[a].children;
            let cb = &other.nodes[b].children;
            if ca.len() != cb.len() {
                return false;
            }
            stack.extend(ca.iter().copied().zip(cb.iter().copied()));
        }
        true
    }
}

impl Eq for OrderedTree {}

/// Incremental constructor used by the level builders: nodes must be added
/// parent-before-child and siblings left to right.
#[derive(Debug, Default)]
pub(crate) struct TreeBuilder {
    nodes: Vec<TreeNode>,
}

impl TreeBuilder {
    pub(crate) fn new() -> Self {
        TreeBuilder { nodes: Vec::new() }
    }

    /// Adds a node under `parent` (`None` for the root, exactly once, first).
    pub(crate) fn add(&mut self, parent: Option<usize>) -> usize {
        debug_assert!(parent.is_some() || self.nodes.is_empty());
        let id = self.nodes.len();
        self.nodes.push(TreeNode { parent, children: Vec::new() });
        if let Some(p) = parent {
            self.nodes[p].children.push(id);
        }
        id
    }

    /// Copies the subtree of `src` rooted at `from` under `parent`, returning
    /// the id of the copy's root.
    pub(crate) fn graft(&mut self, parent: Option<usize>, src: &OrderedTree, from: usize) -> usize {
        let top = self.add(parent);
        let mut stack: Vec<(usize, usize)> = src.children(from).iter().rev().map(|&c| (c, top)).collect();
        while let Some((src_id, dst_parent)) = stack.pop() {
            let dst = self.add(Some(dst_parent));
            for &c in src.children(src_id).iter().rev() {
                stack.push((c, dst));
            }
        }
        top
    }

    pub(crate) fn finish(self) -> OrderedTree {
        debug_assert!(!self.nodes.is_empty());
        OrderedTree { nodes: self.nodes }
    }
}
