//! Vertex adjacency.
//!
//! [`AdjacencyOracle::precompute`] builds the join map, computes the
//! dimension and decides simplicity; afterwards [`AdjacencyOracle::fast_test`]
//! answers a query with one set intersection and one trie lookup. The
//! combinatorial and algebraic tests are slower but correct for every
//! polytope and serve as fallbacks and cross-checks.

use std::collections::VecDeque;

use crate::bitset::ZeroSet;
use crate::error::Result;
use crate::joinmap::JoinMap;
use crate::polytope::Polytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Adjacent,
    NonAdjacent,
    /// Join-map count is 1 on a non-simple polytope, which does not decide
    /// adjacency.
    Indeterminate,
}

/// A fast-test answer with the join-map count behind it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FastAnswer {
    pub verdict: Verdict,
    pub count: u64,
    /// Trie nodes visited by the lookup.
    pub visited: usize,
}

#[derive(Clone, Debug)]
pub struct AdjacencyOracle {
    join_map: JoinMap,
    dim: usize,
    simple: bool,
    zero_sets: Vec<ZeroSet>,
}

impl AdjacencyOracle {
    pub fn precompute(p: &Polytope) -> Result<Self> {
        let join_map = JoinMap::build(p)?;
        let dim = p.dimension();
        let zero_sets = p.zero_sets().to_vec();

        // A polytope is simple iff every vertex has exactly `dim` partners
        // whose join has count 1.
        let mut unit_partners = vec![0usize; zero_sets.len()];
        for (u, zu) in zero_sets.iter().enumerate() {
            for (v, zv) in zero_sets.iter().enumerate().skip(u + 1) {
                if join_map.lookup(&zu.intersection(zv))? == 1 {
                    unit_partners[u] += 1;
                    unit_partners[v] += 1;
                }
            }
        }
        let simple = unit_partners.iter().all(|&c| c == dim);
        Ok(Self {
            join_map,
            dim,
            simple,
            zero_sets,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn join_map(&self) -> &JoinMap {
        &self.join_map
    }

    pub fn vertex_count(&self) -> usize {
        self.zero_sets.len()
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        use crate::error::Error;
        let count = self.zero_sets.len();
        for index in [u, v] {
            if index >= count {
                return Err(Error::VertexOutOfRange { index, count });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    pub fn fast_test(&self, u: usize, v: usize) -> Result<Verdict> {
        self.fast_answer(u, v).map(|a| a.verdict)
    }

    /// Fast test with its join-map count and lookup cost.
    pub fn fast_answer(&self, u: usize, v: usize) -> Result<FastAnswer> {
        self.check_pair(u, v)?;
        let s = self.zero_sets[u].intersection(&self.zero_sets[v]);
        let lookup = self.join_map.lookup_counted(&s)?;
        let verdict = match (lookup.count == 1, self.simple) {
            (false, _) => Verdict::NonAdjacent,
            (true, true) => Verdict::Adjacent,
            (true, false) => Verdict::Indeterminate,
        };
        Ok(FastAnswer {
            verdict,
            count: lookup.count,
            visited: lookup.visited,
        })
    }
}

/// Adjacent iff no third vertex lies on the face `Z(u) ∩ Z(v)`.
pub fn combinatorial_test(p: &Polytope, u: usize, v: usize) -> Result<bool> {
    p.check_pair(u, v)?;
    let s = p.join_zero_set(u, v)?;
    Ok(!p
        .zero_sets()
        .iter()
        .enumerate()
        .any(|(w, z)| w != u && w != v && s.is_subset(z)))
}

/// Adjacent iff the face `Z(u) ∩ Z(v)` has dimension 1, computed as the rank
/// of vertex differences within that face.
pub fn algebraic_test(p: &Polytope, u: usize, v: usize) -> Result<bool> {
    p.check_pair(u, v)?;
    let s = p.join_zero_set(u, v)?;
    Ok(p.face_dimension(&s)? == Some(1))
}

/// The graph of a polytope: vertices joined by edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeGraph {
    neighbors: Vec<Vec<usize>>,
}

impl PolytopeGraph {
    /// Builds the graph from `(u, v)` edges on `vertex_count` vertices.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut neighbors = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for n in &mut neighbors {
            n.sort_unstable();
            n.dedup();
        }
        Self { neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Breadth-first shortest path from `from` to `to`, inclusive. Ties go
    /// to the lowest-index neighbour. `None` if disconnected.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.neighbors.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &self.neighbors[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// Edges of the polytope, sorted, with `u < v`.
///
/// Runs the fast test on every pair; on non-simple polytopes the
/// indeterminate pairs are settled by [`combinatorial_test`].
pub fn all_pairs_adjacency(p: &Polytope) -> Result<Vec<(usize, usize)>> {
    let oracle = AdjacencyOracle::precompute(p)?;
    all_pairs_with(p, &oracle)
}

/// As [`all_pairs_adjacency`], reusing an existing oracle for `p`.
pub fn all_pairs_with(p: &Polytope, oracle: &AdjacencyOracle) -> Result<Vec<(usize, usize)>> {
    let v = p.vertex_count();
    let mut edges = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            let adjacent = match oracle.fast_test(a, b)? {
                Verdict::Adjacent => true,
                Verdict::NonAdjacent => false,
                Verdict::Indeterminate => combinatorial_test(p, a, b)?,
            };
            if adjacent {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

/// The graph of `p`.
pub fn polytope_graph(p: &Polytope) -> Result<PolytopeGraph> {
    Ok(PolytopeGraph::from_edges(
        p.vertex_count(),
        &all_pairs_adjacency(p)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generators;

    #[test]
    fn cube_fast_test_examples() {
        let p = generators::cube(3).unwrap();
        let o = AdjacencyOracle::precompute(&p).unwrap();
        assert_eq!(o.dimension(), 3);
        assert!(o.is_simple());
        // Vertex order is binary on (x1,x2,x3): 0 = (0,0,0), 4 = (1,0,0),
        // 6 = (1,1,0).
        let edge = o.fast_answer(0, 4).unwrap();
        assert_eq!((edge.verdict, edge.count), (Verdict::Adjacent, 1));
        let diag = o.fast_answer(0, 6).unwrap();
        assert_eq!((diag.verdict, diag.count), (Verdict::NonAdjacent, 2));
        assert_eq!(o.fast_test(2, 2), Err(Error::SameVertex(2)));
        assert!(matches!(
            o.fast_test(0, 8),
            Err(Error::VertexOutOfRange { index: 8, .. })
        ));
    }

    #[test]
    fn cube_fallback_tests() {
        let p = generators::cube(3).unwrap();
        assert!(combinatorial_test(&p, 0, 4).unwrap());
        assert!(!combinatorial_test(&p, 0, 6).unwrap());
        assert!(algebraic_test(&p, 0, 4).unwrap());
        assert!(!algebraic_test(&p, 0, 7).unwrap());
        assert_eq!(combinatorial_test(&p, 1, 1), Err(Error::SameVertex(1)));
        assert_eq!(algebraic_test(&p, 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn bipyramid_is_not_simple() {
        let p = generators::bipyramid3();
        let o = AdjacencyOracle::precompute(&p).unwrap();
        assert_eq!(o.dimension(), 3);
        assert!(!o.is_simple());
        let (lo, hi) = generators::BIPYRAMID_APEXES;
        assert_ne!(o.fast_test(lo, hi).unwrap(), Verdict::Adjacent);
        assert!(!combinatorial_test(&p, lo, hi).unwrap());
        // Their join is all of P.
        let s = p.join_zero_set(lo, hi).unwrap();
        assert_eq!(p.face_vertices(&s).unwrap().len(), 5);
    }

    #[test]
    fn prism_top_vertex_and_unmatched_bottom_vertex_span_a_square() {
        let p = generators::prism3();
        // Each vertex pair with distinct triangle corners and distinct
        // heights lies on a square facet.
        let mut found = 0;
        for u in 0..6 {
            for v in u + 1..6 {
                let (pu, pv) = (p.vertex(u).unwrap(), p.vertex(v).unwrap());
                let same_corner = pu[..2] == pv[..2];
                let same_height = pu[3] == pv[3];
                if !same_corner && !same_height {
                    assert!(!algebraic_test(&p, u, v).unwrap());
                    let s = p.join_zero_set(u, v).unwrap();
                    assert_eq!(p.face_dimension(&s).unwrap(), Some(2));
                    found += 1;
                }
            }
        }
        assert_eq!(found, 6);
    }

    #[test]
    fn edge_counts() {
        assert_eq!(all_pairs_adjacency(&generators::cube(3).unwrap()).unwrap().len(), 12);
        assert_eq!(all_pairs_adjacency(&generators::prism3()).unwrap().len(), 9);
        for d in 1..=6 {
            let edges = all_pairs_adjacency(&generators::simplex(d).unwrap()).unwrap();
            assert_eq!(edges.len(), d * (d + 1) / 2);
        }
        // Bipyramid: 3 equator edges + 6 apex edges.
        assert_eq!(all_pairs_adjacency(&generators::bipyramid3()).unwrap().len(), 9);
    }

    #[test]
    fn single_vertex_polytope() {
        let p = generators::simplex(0).unwrap_err();
        assert!(matches!(p, Error::InvalidArgument(_)));
        let p = Polytope::new(vec![], vec![], vec![vec![crate::linalg::rat(1)]]).unwrap();
        let o = AdjacencyOracle::precompute(&p).unwrap();
        assert_eq!(o.dimension(), 0);
        assert!(o.is_simple());
        assert_eq!(o.join_map().pair_total(), 0);
        assert!(all_pairs_adjacency(&p).unwrap().is_empty());
    }

    #[test]
    fn shortest_path_prefers_low_indices() {
        let g = PolytopeGraph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(g.shortest_path(0, 3), Some(vec![0, 1, 3]));
        assert_eq!(g.shortest_path(2, 2), Some(vec![2]));
        let g = PolytopeGraph::from_edges(3, &[(0, 1)]);
        assert_eq!(g.shortest_path(0, 2), None);
    }
}
