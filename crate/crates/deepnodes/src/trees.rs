//! Marked ordered trees: the data type, exhaustive enumeration by size,
//! per-tree statistics and a canonical text encoding.
//!
//! An ordered tree in which the rightmost edge at a node may carry a mark,
//! but only when the child it leads to is not a leaf. Height counts NODES:
//! a single node has height 1 (edge-count conventions are common elsewhere,
//! so this is worth stating once and loudly).
//!
//! The canonical encoding is nested parentheses with `*` in front of a
//! marked rightmost child: `()`, `(()())`, `(*(()))`.

use std::fmt;

use thiserror::Error;

/// Trees are fully materialized by [`generate`]; counts grow roughly like
/// `5^n`, so sizes past this bound are refused rather than exhausting
/// memory.
pub const MAX_GENERATE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("tree size must be at least 1")]
    SizeZero,
    #[error("size {0} exceeds the generation bound {MAX_GENERATE}")]
    SizeTooLarge(usize),
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: &'static str },
    #[error("invalid mark at position {pos}: {msg}")]
    InvalidMark { pos: usize, msg: &'static str },
    #[error("invalid tree: {0}")]
    InvalidTree(&'static str),
}

/// An ordered tree node. `marked` means "the edge from my parent to me is
/// marked"; storing the flag on the child keeps generation recursive. The
/// root carries `marked = false`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedTree {
    children: Vec<MarkedTree>,
    marked: bool,
}

/// Statistics of one tree, computed in a single traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    /// Total node count.
    pub nodes: usize,
    /// Nodes on the longest root-to-leaf chain (single node: 1).
    pub height: usize,
    /// Number of nodes at level = height (root is level 1).
    pub deepest: usize,
    /// Number of marked edges.
    pub marks: usize,
}

impl MarkedTree {
    pub fn leaf() -> Self {
        MarkedTree {
            children: Vec::new(),
            marked: false,
        }
    }

    /// Build an unmarked node over the given children; validates the
    /// marking rule on the whole subtree.
    pub fn new(children: Vec<MarkedTree>) -> Result<Self, TreeError> {
        let t = MarkedTree {
            children,
            marked: false,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn children(&self) -> &[MarkedTree] {
        &self.children
    }

    pub fn is_marked(&self) -> bool {
        self.marked
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Check the marking rule everywhere: a marked node is the last child
    /// of its parent and is not a leaf; the root is unmarked.
    pub fn validate(&self) -> Result<(), TreeError> {
        if self.marked {
            return Err(TreeError::InvalidTree("root must not be marked"));
        }
        self.validate_subtree()
    }

    fn validate_subtree(&self) -> Result<(), TreeError> {
        for (i, child) in self.children.iter().enumerate() {
            if child.marked {
                if i + 1 != self.children.len() {
                    return Err(TreeError::InvalidTree(
                        "marked child must be the rightmost",
                    ));
                }
                if child.is_leaf() {
                    return Err(TreeError::InvalidTree("marked edge must not lead to a leaf"));
                }
            }
            child.validate_subtree()?;
        }
        Ok(())
    }

    /// Node count, height, deepest-node count and mark count in one pass.
    pub fn stats(&self) -> TreeStats {
        fn walk(t: &MarkedTree, stats: &mut TreeStats, level: usize) {
            stats.nodes += 1;
            if t.marked {
                stats.marks += 1;
            }
            match level.cmp(&stats.height) {
                std::cmp::Ordering::Greater => {
                    stats.height = level;
                    stats.deepest = 1;
                }
                std::cmp::Ordering::Equal => stats.deepest += 1,
                std::cmp::Ordering::Less => {}
            }
            for c in &t.children {
                walk(c, stats, level + 1);
            }
        }
        let mut stats = TreeStats {
            nodes: 0,
            height: 0,
            deepest: 0,
            marks: 0,
        };
        walk(self, &mut stats, 1);
        stats
    }

    /// Canonical encoding; see the module docs for the grammar.
    pub fn encode(&self) -> String {
        fn rec(t: &MarkedTree, out: &mut String) {
            out.push('(');
            for c in &t.children {
                if c.marked {
                    out.push('*');
                }
                rec(c, out);
            }
            out.push(')');
        }
        let mut s = String::new();
        rec(self, &mut s);
        s
    }

    /// Parse the canonical encoding; rejects malformed input and marks that
    /// violate the marking rule, reporting a byte position.
    pub fn decode(s: &str) -> Result<MarkedTree, TreeError> {
        let bytes = s.as_bytes();
        let mut pos = 0usize;

        fn parse_tree(
            bytes: &[u8],
            pos: &mut usize,
            marked: bool,
        ) -> Result<MarkedTree, TreeError> {
            let start = *pos;
            if bytes.get(*pos) != Some(&b'(') {
                return Err(TreeError::ParseError {
                    pos: *pos,
                    msg: "expected '('",
                });
            }
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match bytes.get(*pos) {
                    Some(b')') => {
                        *pos += 1;
                        break;
                    }
                    Some(b'(') => {
                        children.push(parse_tree(bytes, pos, false)?);
                    }
                    Some(b'*') => {
                        let star = *pos;
                        *pos += 1;
                        let child = parse_tree(bytes, pos, true)?;
                        if child.is_leaf() {
                            return Err(TreeError::InvalidMark {
                                pos: star,
                                msg: "marked edge must not lead to a leaf",
                            });
                        }
                        children.push(child);
                        // the marked child closes the child list
                        if bytes.get(*pos) != Some(&b')') {
                            return Err(TreeError::InvalidMark {
                                pos: star,
                                msg: "marked child must be the rightmost",
                            });
                        }
                        *pos += 1;
                        break;
                    }
                    Some(_) => {
                        return Err(TreeError::ParseError {
                            pos: *pos,
                            msg: "expected '(', '*' or ')'",
                        })
                    }
                    None => {
                        return Err(TreeError::ParseError {
                            pos: start,
                            msg: "unclosed '('",
                        })
                    }
                }
            }
            Ok(MarkedTree { children, marked })
        }

        let tree = parse_tree(bytes, &mut pos, false)?;
        if pos != bytes.len() {
            return Err(TreeError::ParseError {
                pos,
                msg: "trailing input after tree",
            });
        }
        Ok(tree)
    }

    pub(crate) fn with_mark(mut self) -> Self {
        self.marked = true;
        self
    }
}

impl fmt::Display for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// All valid marked ordered trees with exactly `n` nodes, each exactly
/// once, sorted by canonical encoding.
pub fn generate(n: usize) -> Result<Vec<MarkedTree>, TreeError> {
    if n < 1 {
        return Err(TreeError::SizeZero);
    }
    if n > MAX_GENERATE {
        return Err(TreeError::SizeTooLarge(n));
    }
    // Bottom-up memoization. A tree of size k >= 2 is a root over a forest
    // of k-1 nodes; a forest is an ordered list of >= 1 subtrees in which
    // only the last may carry a mark, and a marked subtree has >= 2 nodes.
    let mut trees: Vec<Vec<MarkedTree>> = vec![Vec::new(); n + 1];
    let mut forests: Vec<Vec<Vec<MarkedTree>>> = vec![Vec::new(); n];
    for k in 1..=n {
        trees[k] = if k == 1 {
            vec![MarkedTree::leaf()]
        } else {
            forests[k - 1]
                .iter()
                .map(|forest| MarkedTree {
                    children: forest.clone(),
                    marked: false,
                })
                .collect()
        };
        if k < n {
            forests[k] = forests_of_size(k, &trees, &forests);
        }
    }
    let mut out = std::mem::take(&mut trees[n]);
    out.sort_by_cached_key(MarkedTree::encode);
    Ok(out)
}

/// Ordered lists of at least one subtree totalling `total` nodes; the last
/// entry may be marked when it has >= 2 nodes. Relies on `trees[s]` for
/// `s <= total` and `forests[m]` for `m < total` being filled in.
fn forests_of_size(
    total: usize,
    trees: &[Vec<MarkedTree>],
    forests: &[Vec<Vec<MarkedTree>>],
) -> Vec<Vec<MarkedTree>> {
    let mut out = Vec::new();
    for first_size in 1..=total {
        for first in &trees[first_size] {
            if first_size == total {
                // `first` is the last (and only remaining) child
                out.push(vec![first.clone()]);
                if first_size >= 2 {
                    out.push(vec![first.clone().with_mark()]);
                }
            } else {
                for rest in &forests[total - first_size] {
                    let mut forest = Vec::with_capacity(rest.len() + 1);
                    forest.push(first.clone());
                    forest.extend(rest.iter().cloned());
                    out.push(forest);
                }
            }
        }
    }
    out
}

/// The polynomial `sum_trees t^{deepest(tree)}` over all trees of size `n`,
/// as ascending coefficients of `t^0 .. t^n`. This is the brute-force
/// oracle for the `z^n` coefficient of `G(z, t)`.
pub fn deepest_polynomial(n: usize) -> Result<Vec<num::BigInt>, TreeError> {
    let trees = generate(n)?;
    let mut coeffs = vec![num::BigInt::from(0); n + 1];
    for t in &trees {
        coeffs[t.stats().deepest] += 1;
    }
    Ok(coeffs)
}
