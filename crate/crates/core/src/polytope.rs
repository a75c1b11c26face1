//! Polytopes in standard form `{x : Ax = b, x >= 0}` together with an
//! explicit vertex list, and the face operations that only need zero sets.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::bitset::{FacetSet, ZeroSet};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

/// A validated standard-form polytope with its vertices.
///
/// Vertices are addressed `0..V` in the order they were supplied. Zero sets
/// and the dimension are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    vertices: Vec<Vec<Rational>>,
    zero_sets: Vec<ZeroSet>,
    dim: usize,
}

impl Polytope {
    /// Validates the data and builds the polytope.
    ///
    /// Rejects (rather than repairs) vertices that violate `Ax = b` or
    /// `x >= 0`, and duplicate vertices.
    pub fn new(
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        vertices: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let n = match vertices.first() {
            Some(v) => v.len(),
            None => return Err(Error::NoVertices),
        };
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "A has {} rows but b has {} entries",
                a.len(),
                b.len()
            )));
        }
        for (row, r) in a.iter().enumerate() {
            if r.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "row {row} of A has {} entries, expected {n}",
                    r.len()
                )));
            }
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "vertex {i} has {} coordinates, expected {n}",
                    v.len()
                )));
            }
            if let Some(coordinate) = v.iter().position(|x| x.is_negative()) {
                return Err(Error::NegativeCoordinate {
                    vertex: i,
                    coordinate,
                });
            }
            if let Some(row) = a
                .iter()
                .zip(&b)
                .position(|(r, bi)| linalg::dot(r, v) != *bi)
            {
                return Err(Error::EqualityViolated { vertex: i, row });
            }
        }
        let mut seen: BTreeMap<&[Rational], usize> = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if let Some(&first) = seen.get(v.as_slice()) {
                return Err(Error::DuplicateVertex { first, second: i });
            }
            seen.insert(v, i);
        }

        let zero_sets = vertices
            .iter()
            .map(|v| ZeroSet::from_indices(n, (0..n).filter(|&i| v[i].is_zero())))
            .collect();
        let dim = linalg::affine_rank(vertices.iter().map(Vec::as_slice));
        Ok(Self {
            a,
            b,
            vertices,
            zero_sets,
            dim,
        })
    }

    /// Number of coordinates `n`.
    pub fn n(&self) -> usize {
        self.vertices[0].len()
    }

    /// Number of equality rows `m`.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Number of vertices `V`.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> Result<&[Rational]> {
        self.check_index(index)?;
        Ok(&self.vertices[index])
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index,
                count: self.vertices.len(),
            })
        }
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_index(u)?;
        self.check_index(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(())
    }

    fn check_width(&self, set: &ZeroSet) -> Result<()> {
        if set.width() == self.n() {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: self.n(),
                found: set.width(),
            })
        }
    }

    /// Coordinates at which the vertex is exactly zero.
    pub fn zero_set(&self, vertex: usize) -> Result<&ZeroSet> {
        self.check_index(vertex)?;
        Ok(&self.zero_sets[vertex])
    }

    pub fn zero_sets(&self) -> &[ZeroSet] {
        &self.zero_sets
    }

    /// `Z(u) ∩ Z(v)`, the zero set of the join of two vertices.
    pub fn join_zero_set(&self, u: usize, v: usize) -> Result<ZeroSet> {
        self.check_index(u)?;
        self.check_index(v)?;
        Ok(self.zero_sets[u].intersection(&self.zero_sets[v]))
    }

    /// Dimension of the polytope: rank of the vertex differences `v - v0`.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Vertices whose zero set contains `set`, in increasing index order.
    pub fn face_vertices(&self, set: &ZeroSet) -> Result<Vec<usize>> {
        self.check_width(set)?;
        Ok(self
            .zero_sets
            .iter()
            .enumerate()
            .filter(|(_, z)| set.is_subset(z))
            .map(|(i, _)| i)
            .collect())
    }

    /// Dimension of the face on which every coordinate in `set` vanishes,
    /// or `None` when no vertex lies on it.
    pub fn face_dimension(&self, set: &ZeroSet) -> Result<Option<usize>> {
        let verts = self.face_vertices(set)?;
        Ok(self.span_dimension(&verts))
    }

    /// Affine dimension of a set of vertices; `None` for the empty set.
    pub fn span_dimension(&self, vertices: &[usize]) -> Option<usize> {
        if vertices.is_empty() {
            return None;
        }
        Some(linalg::affine_rank(
            vertices.iter().map(|&i| self.vertices[i].as_slice()),
        ))
    }

    /// Finds the facets among the coordinate faces. See [`Facets`].
    pub fn detect_facets(&self) -> Facets {
        Facets::detect(self)
    }
}

/// A facet, recorded by the coordinates whose vanishing defines it and the
/// vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub id: usize,
    pub coordinates: ZeroSet,
    pub vertices: Vec<usize>,
}

/// Facet structure of a polytope.
///
/// Each coordinate `i` defines the candidate face `{x_i = 0}`. Candidates
/// of dimension `dim P - 1` are facets; coordinates sharing a vertex set are
/// merged into one facet. Coordinates whose face is empty, lower
/// dimensional, or all of `P` are listed in `non_facet_coordinates`.
/// Facet ids are assigned in order of each facet's smallest coordinate.
#[derive(Clone, Debug)]
pub struct Facets {
    facets: Vec<Facet>,
    non_facet_coordinates: ZeroSet,
    facet_coordinates: ZeroSet,
    vertex_facets: Vec<FacetSet>,
}

impl Facets {
    fn detect(p: &Polytope) -> Self {
        let n = p.n();
        let d = p.dimension();
        let mut by_vertices: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut facets: Vec<Facet> = Vec::new();
        let mut non_facet = ZeroSet::empty(n);
        for i in 0..n {
            let set = ZeroSet::from_indices(n, [i]);
            let verts = p.face_vertices(&set).expect("width matches");
            let is_facet = d >= 1 && p.span_dimension(&verts) == Some(d - 1);
            if !is_facet {
                non_facet.insert(i);
                continue;
            }
            match by_vertices.get(&verts) {
                Some(&id) => facets[id].coordinates.insert(i),
                None => {
                    let id = facets.len();
                    by_vertices.insert(verts.clone(), id);
                    facets.push(Facet {
                        id,
                        coordinates: set,
                        vertices: verts,
                    });
                }
            }
        }
        let facet_coordinates = ZeroSet::full(n).difference(&non_facet);
        let mut vertex_facets = vec![FacetSet::empty(facets.len()); p.vertex_count()];
        for f in &facets {
            for &v in &f.vertices {
                vertex_facets[v].insert(f.id);
            }
        }
        Self {
            facets,
            non_facet_coordinates: non_facet,
            facet_coordinates,
            vertex_facets,
        }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn get(&self, id: usize) -> Option<&Facet> {
        self.facets.get(id)
    }

    pub fn non_facet_coordinates(&self) -> &ZeroSet {
        &self.non_facet_coordinates
    }

    /// Union of the coordinates of all facets.
    pub fn facet_coordinates(&self) -> &ZeroSet {
        &self.facet_coordinates
    }

    /// Ids of the facets containing vertex `v`.
    pub fn of_vertex(&self, v: usize) -> &FacetSet {
        &self.vertex_facets[v]
    }

    /// Ids of the facets containing both vertices.
    pub fn common(&self, u: usize, v: usize) -> FacetSet {
        self.vertex_facets[u].intersection(&self.vertex_facets[v])
    }

    /// Whether `u` and `v` lie on no common facet, i.e. their join is `P`.
    ///
    /// Tested on zero sets: `Z(u) ∩ Z(v)` must contain no facet coordinate.
    /// Facet coordinates never vanish on all of `P`, so this is exactly the
    /// condition `Z(u ∨ v) = Z(P)` restricted to facets.
    pub fn is_complementary(&self, p: &Polytope, u: usize, v: usize) -> Result<bool> {
        p.check_pair(u, v)?;
        Ok(p.zero_sets[u]
            .intersection(&p.zero_sets[v])
            .is_disjoint(&self.facet_coordinates))
    }
}
