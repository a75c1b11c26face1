//! The join map: a binary trie of depth `n` counting, for each set
//! `S ⊆ {1..n}`, the vertex pairs `{u, v}` with `Z(u) ∩ Z(v) = S`.
//!
//! A node at depth `k` branches on whether coordinate `k + 1` belongs to the
//! set: left child for absent, right child for present. Leaves sit at depth
//! `n` and hold the counts. Only sets with a positive count are stored, and
//! only the internal nodes above them.

use std::fmt::Write;

use crate::bitset::ZeroSet;
use crate::error::{Error, Result};
use crate::polytope::Polytope;

type NodeId = u32;

#[derive(Clone, Debug, Default)]
struct Node {
    children: [Option<NodeId>; 2],
    count: u64,
}

#[derive(Clone, Debug)]
pub struct JoinMap {
    depth: usize,
    // nodes[0] is the root once anything has been inserted.
    nodes: Vec<Node>,
    pair_total: u64,
}

/// Result of an instrumented lookup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lookup {
    pub count: u64,
    /// Trie nodes touched, root and leaf included.
    pub visited: usize,
}

impl JoinMap {
    pub fn new(depth: usize) -> Self {
        Self {
            depth,
            nodes: Vec::new(),
            pair_total: 0,
        }
    }

    /// Builds the join map of `p` by inserting `Z(u) ∩ Z(v)` for each of
    /// the `V(V-1)/2` unordered vertex pairs.
    pub fn build(p: &Polytope) -> Result<Self> {
        let v = p.vertex_count();
        let pairs = (v as u64)
            .checked_mul(v.saturating_sub(1) as u64)
            .ok_or(Error::CountOverflow { vertices: v })?
            / 2;
        let mut map = Self::new(p.n());
        let zs = p.zero_sets();
        for (i, zi) in zs.iter().enumerate() {
            for zj in &zs[i + 1..] {
                map.insert_or_increment(&zi.intersection(zj))?;
            }
        }
        debug_assert_eq!(map.pair_total, pairs);
        Ok(map)
    }

    fn check_width(&self, set: &ZeroSet) -> Result<()> {
        if set.width() == self.depth {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: self.depth,
                found: set.width(),
            })
        }
    }

    /// Adds one to the count stored for `set`, creating the path if needed.
    pub fn insert_or_increment(&mut self, set: &ZeroSet) -> Result<()> {
        self.check_width(set)?;
        if self.nodes.is_empty() {
            self.nodes.push(Node::default());
        }
        let mut cur: usize = 0;
        for k in 0..self.depth {
            let branch = set.contains(k) as usize;
            cur = match self.nodes[cur].children[branch] {
                Some(child) => child as usize,
                None => {
                    let id = self.nodes.len();
                    self.nodes.push(Node::default());
                    self.nodes[cur].children[branch] =
                        Some(NodeId::try_from(id).expect("trie exceeds u32 nodes"));
                    id
                }
            };
        }
        self.nodes[cur].count += 1;
        self.pair_total += 1;
        Ok(())
    }

    /// Count stored for `set`, 0 if absent.
    pub fn lookup(&self, set: &ZeroSet) -> Result<u64> {
        self.lookup_counted(set).map(|l| l.count)
    }

    /// As [`lookup`](Self::lookup), also reporting the number of nodes visited.
    pub fn lookup_counted(&self, set: &ZeroSet) -> Result<Lookup> {
        self.check_width(set)?;
        if self.nodes.is_empty() {
            return Ok(Lookup {
                count: 0,
                visited: 0,
            });
        }
        let mut cur = 0usize;
        let mut visited = 1;
        for k in 0..self.depth {
            match self.nodes[cur].children[set.contains(k) as usize] {
                Some(child) => {
                    cur = child as usize;
                    visited += 1;
                }
                None => return Ok(Lookup { count: 0, visited }),
            }
        }
        Ok(Lookup {
            count: self.nodes[cur].count,
            visited,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of insertions performed; `V(V-1)/2` after a full build.
    pub fn pair_total(&self) -> u64 {
        self.pair_total
    }

    /// Stored sets with their counts, in trie order (absent before present,
    /// coordinate 1 first).
    pub fn leaves(&self) -> Vec<(ZeroSet, u64)> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            return out;
        }
        let mut path = ZeroSet::empty(self.depth);
        self.collect(0, 0, &mut path, &mut out);
        out
    }

    fn collect(&self, node: usize, k: usize, path: &mut ZeroSet, out: &mut Vec<(ZeroSet, u64)>) {
        if k == self.depth {
            out.push((path.clone(), self.nodes[node].count));
            return;
        }
        for (branch, child) in self.nodes[node].children.iter().enumerate() {
            if let Some(c) = child {
                if branch == 1 {
                    path.insert(k);
                }
                self.collect(*c as usize, k + 1, path, out);
                if branch == 1 {
                    path.remove(k);
                }
            }
        }
    }

    /// Indented text rendering, one node per line.
    ///
    /// Each line is `<depth>` followed by the branch taken to reach the node
    /// (`-` for absent, `+` for present, nothing for the root), indented two
    /// spaces per level; leaves append `= <count>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        if !self.nodes.is_empty() {
            self.dump_node(0, 0, "", &mut out);
        }
        out
    }

    fn dump_node(&self, node: usize, k: usize, label: &str, out: &mut String) {
        let indent = "  ".repeat(k);
        if k == self.depth {
            let _ = writeln!(out, "{indent}{k}{label} = {}", self.nodes[node].count);
            return;
        }
        let _ = writeln!(out, "{indent}{k}{label}");
        for (branch, child) in self.nodes[node].children.iter().enumerate() {
            if let Some(c) = child {
                let tag = if branch == 0 { "-" } else { "+" };
                self.dump_node(*c as usize, k + 1, &format!(" {tag}{}", k + 1), out);
            }
        }
    }
}
