//! The auxiliary graph on pairs of vertices of a simple polytope, and the
//! walks through it that find further pairs of complementary vertices.
//!
//! Nodes are unordered vertex pairs sharing at most one facet: type A when
//! they share none (a complementary pair), type B when they share exactly
//! one. An arc joins `{u, x}` and `{u, y}` when `x` and `y` are adjacent and
//! no facet contains all of `u`, `x`, `y`; its facet set holds the facets
//! containing `u` or the edge `xy`.
//!
//! Every type B node has exactly two arcs with equal facet sets and every
//! type A node has `2d` arcs with pairwise distinct facet sets, so a walk
//! leaving a type A node through type B nodes can neither branch nor cycle
//! and must end at a different type A node.

use std::collections::HashSet;
use std::fmt::{self, Write};

use crate::adjacency::PolytopeGraph;
use crate::bitset::FacetSet;
use crate::error::{Error, Result};
use crate::polytope::{Facets, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeType {
    /// No common facet.
    A,
    /// Exactly one common facet, with this id.
    B { facet: usize },
    /// Two or more common facets; the pair is not a node.
    NotANode,
}

/// Classifies the pair `{u, v}` by its number of common facets.
pub fn node_type(p: &Polytope, facets: &Facets, u: usize, v: usize) -> Result<NodeType> {
    p.check_pair(u, v)?;
    let common = facets.common(u, v);
    let mut ids = common.iter();
    Ok(match (ids.next(), ids.next()) {
        (None, _) => NodeType::A,
        (Some(facet), None) => NodeType::B { facet },
        _ => NodeType::NotANode,
    })
}

/// All complementary pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn all_complementary_pairs(p: &Polytope, facets: &Facets) -> Vec<(usize, usize)> {
    let v = p.vertex_count();
    (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .filter(|&(a, b)| facets.of_vertex(a).is_disjoint(facets.of_vertex(b)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AuxNode {
    pub u: usize,
    pub v: usize,
    pub kind: NodeType,
}

impl AuxNode {
    pub fn pair(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_type_a(&self) -> bool {
        self.kind == NodeType::A
    }
}

impl fmt::Display for AuxNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            NodeType::A => "A",
            NodeType::B { .. } => "B",
            NodeType::NotANode => "-",
        };
        write!(f, "{},{}:{}", self.u, self.v, tag)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxArc {
    pub from: AuxNode,
    pub to: AuxNode,
    /// The vertex that stays put.
    pub stationary: usize,
    /// `(x, y)`: the vertex of `from` that moves, and where it moves to.
    pub moved: (usize, usize),
    /// Facets containing the stationary vertex or the edge `xy`.
    pub facet_set: FacetSet,
}

/// A complementary pair found by a walk, with the nodes visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    /// Every node from the starting type A node to the final one.
    pub nodes: Vec<AuxNode>,
}

impl Walk {
    pub fn start(&self) -> &AuxNode {
        &self.nodes[0]
    }

    pub fn end(&self) -> &AuxNode {
        self.nodes.last().expect("walks are non-empty")
    }

    /// Number of arcs traversed.
    pub fn steps(&self) -> usize {
        self.nodes.len() - 1
    }
}

/// Outcome of [`AuxGraph::verify_2d_parity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    pub dimension: usize,
    pub facet_count: usize,
    pub pair_count: usize,
    /// Whether the polytope has exactly `2d` facets, so the parity
    /// statement applies.
    pub applies: bool,
    pub even: bool,
    pub pairwise_disjoint: bool,
}

impl ParityReport {
    /// True unless the statement applies and is violated.
    pub fn holds(&self) -> bool {
        !self.applies || (self.even && self.pairwise_disjoint)
    }
}

/// The auxiliary graph of a simple polytope of dimension at least 2.
///
/// Nodes and arcs are generated on demand from the facet incidences and
/// the polytope graph.
pub struct AuxGraph<'a> {
    polytope: &'a Polytope,
    facets: &'a Facets,
    graph: &'a PolytopeGraph,
    dim: usize,
    node_count: usize,
}

impl<'a> AuxGraph<'a> {
    /// Fails with [`Error::Unsupported`] unless the polytope is simple
    /// (every vertex on `d` facets and of degree `d`) with `d > 1`.
    pub fn new(p: &'a Polytope, facets: &'a Facets, graph: &'a PolytopeGraph) -> Result<Self> {
        let d = p.dimension();
        if d <= 1 {
            return Err(Error::Unsupported(format!(
                "auxiliary graph needs dimension > 1, polytope has dimension {d}"
            )));
        }
        if graph.vertex_count() != p.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "graph has {} vertices, polytope has {}",
                graph.vertex_count(),
                p.vertex_count()
            )));
        }
        for v in 0..p.vertex_count() {
            if facets.of_vertex(v).len() != d || graph.degree(v) != d {
                return Err(Error::Unsupported(format!(
                    "polytope is not simple: vertex {v} lies on {} facets with degree {} (dimension {d})",
                    facets.of_vertex(v).len(),
                    graph.degree(v)
                )));
            }
        }
        let v = p.vertex_count();
        let node_count = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .filter(|&(a, b)| facets.common(a, b).len() <= 1)
            .count();
        Ok(Self {
            polytope: p,
            facets,
            graph,
            dim: d,
            node_count,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Step budget for a single walk: twice the number of nodes.
    pub fn step_budget(&self) -> usize {
        2 * self.node_count
    }

    /// The node `{u, v}`, or `None` if the pair shares two or more facets.
    pub fn node(&self, u: usize, v: usize) -> Result<Option<AuxNode>> {
        let kind = node_type(self.polytope, self.facets, u, v)?;
        Ok((kind != NodeType::NotANode).then(|| AuxNode {
            u: u.min(v),
            v: u.max(v),
            kind,
        }))
    }

    /// All nodes in lexicographic order of their pairs.
    pub fn nodes(&self) -> Vec<AuxNode> {
        let v = self.polytope.vertex_count();
        (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .filter_map(|(a, b)| self.node(a, b).expect("valid pair"))
            .collect()
    }

    /// Arcs leaving `node`. Arcs moving the lower-index vertex come first,
    /// each group ordered by target vertex.
    pub fn arcs_from(&self, node: &AuxNode) -> Result<Vec<AuxArc>> {
        let (u, v) = node.pair();
        if self.node(u, v)?.as_ref() != Some(node) {
            return Err(Error::InvalidArgument(format!("{node} is not a node")));
        }
        let mut arcs = Vec::new();
        for (stationary, mover) in [(v, u), (u, v)] {
            let fixed = self.facets.of_vertex(stationary);
            let on_both = fixed.intersection(self.facets.of_vertex(mover));
            for &target in self.graph.neighbors(mover) {
                if target == stationary {
                    continue;
                }
                let edge_facets = self
                    .facets
                    .of_vertex(mover)
                    .intersection(self.facets.of_vertex(target));
                if !on_both.is_disjoint(self.facets.of_vertex(target)) {
                    continue;
                }
                let Some(to) = self.node(stationary, target)? else {
                    continue;
                };
                arcs.push(AuxArc {
                    from: *node,
                    to,
                    stationary,
                    moved: (mover, target),
                    facet_set: fixed.union(&edge_facets),
                });
            }
        }
        Ok(arcs)
    }

    fn type_a_node(&self, u: usize, v: usize) -> Result<AuxNode> {
        match self.node(u, v)? {
            Some(n) if n.is_type_a() => Ok(n),
            _ => Err(Error::NotComplementary(u, v)),
        }
    }

    /// Follows the unique path that leaves type A node `start` through the
    /// arc to `first`, until it reaches a type A node.
    pub fn follow(&self, start: &AuxNode, first: &AuxNode) -> Result<Walk> {
        let budget = self.step_budget();
        let mut nodes = vec![*start, *first];
        let mut seen: HashSet<(usize, usize)> = nodes.iter().map(AuxNode::pair).collect();
        while !nodes.last().expect("non-empty").is_type_a() {
            if nodes.len() > budget {
                return Err(Error::WalkBudgetExceeded { budget });
            }
            let cur = nodes[nodes.len() - 1];
            let prev = nodes[nodes.len() - 2];
            let next = self
                .arcs_from(&cur)?
                .into_iter()
                .map(|a| a.to)
                .find(|n| n.pair() != prev.pair())
                .ok_or_else(|| Error::Unsupported(format!("type B node {cur} has no forward arc")))?;
            if !seen.insert(next.pair()) {
                return Err(Error::Unsupported(format!(
                    "walk from {start} revisited {next}"
                )));
            }
            nodes.push(next);
        }
        Ok(Walk { nodes })
    }

    /// A complementary pair different from `(u, v)`.
    ///
    /// Moves the lower-index vertex of the pair to its lowest-index
    /// neighbour, then follows the type B chain forward until a type A node.
    pub fn second_pair(&self, u: usize, v: usize) -> Result<Walk> {
        let start = self.type_a_node(u, v)?;
        let (mover, stationary) = (start.u, start.v);
        let target = self.graph.neighbors(mover)[0];
        let first = self
            .node(stationary, target)?
            .expect("moving one end of a complementary pair gives a node");
        self.follow(&start, &first)
    }

    /// Two complementary pairs over four distinct vertices.
    ///
    /// Takes the shortest edge path `u = z_1, …, z_q = v`, finds the first
    /// `i` with `{z_i, v}` complementary and `{z_{i+1}, v}` not, and walks
    /// from `{z_i, v}` through `{z_{i+1}, v}`. The walk passes a type B node,
    /// which forces its end pairs to be disjoint.
    pub fn disjoint_pairs(&self, u: usize, v: usize) -> Result<(Walk, [(usize, usize); 2])> {
        self.type_a_node(u, v)?;
        let path = self
            .graph
            .shortest_path(u, v)
            .ok_or_else(|| Error::Unsupported("polytope graph is disconnected".into()))?;
        let complementary = |z: usize| -> Result<bool> {
            Ok(z != v && self.facets.is_complementary(self.polytope, z, v)?)
        };
        let mut pivot = None;
        for w in path.windows(2) {
            if complementary(w[0])? && !complementary(w[1])? {
                pivot = Some((w[0], w[1]));
                break;
            }
        }
        let (zi, zn) = pivot.expect("path leaves the complementary region before reaching v");
        let start = self.type_a_node(zi, v)?;
        let first = self
            .node(zn, v)?
            .expect("moving one end of a complementary pair gives a node");
        let walk = self.follow(&start, &first)?;
        let pairs = [walk.start().pair(), walk.end().pair()];
        Ok((walk, pairs))
    }

    /// Counts complementary pairs and, for polytopes with exactly `2d`
    /// facets, checks that the count is even and the pairs are disjoint.
    pub fn verify_2d_parity(&self) -> ParityReport {
        let pairs = all_complementary_pairs(self.polytope, self.facets);
        let mut used = HashSet::new();
        let pairwise_disjoint = pairs.iter().all(|&(a, b)| used.insert(a) && used.insert(b));
        ParityReport {
            dimension: self.dim,
            facet_count: self.facets.len(),
            pair_count: pairs.len(),
            applies: self.facets.len() == 2 * self.dim,
            even: pairs.len().is_multiple_of(2),
            pairwise_disjoint,
        }
    }

    /// Graphviz rendering. Nodes are labelled `u,v:A` or `u,v:B`; arcs carry
    /// their facet-set ids. Each arc appears once.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph aux {\n");
        let nodes = self.nodes();
        for n in &nodes {
            let _ = writeln!(out, "  \"{}_{}\" [label=\"{}\"];", n.u, n.v, n);
        }
        for n in &nodes {
            for arc in self.arcs_from(n).expect("node is valid") {
                if arc.to.pair() < n.pair() {
                    continue;
                }
                let ids: Vec<String> = arc.facet_set.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  \"{}_{}\" -- \"{}_{}\" [label=\"{}\"];",
                    n.u,
                    n.v,
                    arc.to.u,
                    arc.to.v,
                    ids.join(",")
                );
            }
        }
        out.push_str("}\n");
        out
    }
}
