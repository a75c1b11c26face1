//! Fixture polytopes in standard form.
//!
//! Most fixtures start from an inequality description `Cx <= γ` with a known
//! vertex list and pass through [`slack_embed`], which introduces one slack
//! coordinate `γ_j - c_j·x` per inequality. Vertices of every generated
//! polytope are sorted lexicographically by their standard-form coordinates.
//!
//! Coordinates used:
//! - `cube(d)`: `[0,1]^d`; slacks `x_1..x_d` then `1-x_1..1-x_d`.
//! - `simplex(d)`: built directly as `{x in R^{d+1} : Σx = 1, x >= 0}`.
//! - `prism3()`: triangle `(0,0),(1,0),(0,1)` times `[0,1]`; slacks
//!   `x, y, 1-x-y, z, 1-z`.
//! - `bipyramid3()`: equator `(0,0,0),(3,0,0),(0,3,0)`, apexes `(1,1,±1)`
//!   over the centroid; upper facets first, then lower.
//! - `truncated_cube()`: unit cube with the corner `(1,1,1)` cut by
//!   `x+y+z <= 5/2` through the midpoints of its three edges.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, rat, ratio, Rational};
use crate::polytope::Polytope;

/// Largest dimension accepted by [`cube`]; the vertex count is `2^d`.
pub const MAX_CUBE_DIM: usize = 16;

/// Vertex indices of the two apexes of [`bipyramid3`].
pub const BIPYRAMID_APEXES: (usize, usize) = (0, 3);

/// One inequality `normal · x <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub normal: Vec<Rational>,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(normal: Vec<Rational>, rhs: Rational) -> Self {
        Self { normal, rhs }
    }

    fn slack(&self, x: &[Rational]) -> Rational {
        &self.rhs - linalg::dot(&self.normal, x)
    }
}

/// A full-dimensional polytope given by facet inequalities and its vertices.
#[derive(Clone, Debug)]
pub struct HPolytope {
    inequalities: Vec<Inequality>,
    vertices: Vec<Vec<Rational>>,
}

impl HPolytope {
    /// Checks that every vertex satisfies every inequality, that each listed
    /// point is a vertex, that each inequality is tight on a facet, and that
    /// the inequality normals have full rank (no lineality direction).
    pub fn new(inequalities: Vec<Inequality>, vertices: Vec<Vec<Rational>>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidHRepresentation(msg));
        let Some(d) = vertices.first().map(Vec::len) else {
            return invalid("no vertices".into());
        };
        if d == 0 {
            return invalid("ambient dimension is 0".into());
        }
        if let Some(i) = vertices.iter().position(|v| v.len() != d) {
            return invalid(format!("vertex {i} does not have {d} coordinates"));
        }
        if let Some(j) = inequalities.iter().position(|h| h.normal.len() != d) {
            return invalid(format!("inequality {j} does not have {d} coefficients"));
        }
        let distinct: BTreeSet<&Vec<Rational>> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return invalid("duplicate vertices".into());
        }
        if linalg::affine_rank(vertices.iter().map(Vec::as_slice)) != d {
            return invalid("vertices are not full-dimensional".into());
        }
        let normals: Vec<Vec<Rational>> = inequalities.iter().map(|h| h.normal.clone()).collect();
        if linalg::rank(&normals)? != d {
            return invalid("inequality normals do not span; polytope is unbounded".into());
        }
        for (i, v) in vertices.iter().enumerate() {
            if let Some(j) = inequalities.iter().position(|h| h.slack(v).is_negative()) {
                return invalid(format!("vertex {i} violates inequality {j}"));
            }
            let tight: Vec<Vec<Rational>> = inequalities
                .iter()
                .filter(|h| h.slack(v).is_zero())
                .map(|h| h.normal.clone())
                .collect();
            if linalg::rank(&tight)? != d {
                return invalid(format!("point {i} is not a vertex"));
            }
        }
        for (j, h) in inequalities.iter().enumerate() {
            let on: Vec<&[Rational]> = vertices
                .iter()
                .filter(|v| h.slack(v).is_zero())
                .map(Vec::as_slice)
                .collect();
            if on.is_empty() || linalg::affine_rank(on) != d - 1 {
                return invalid(format!("inequality {j} does not define a facet"));
            }
        }
        Ok(Self {
            inequalities,
            vertices,
        })
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Indices of the inequalities tight at vertex `i`.
    pub fn tight_set(&self, i: usize) -> Vec<usize> {
        self.inequalities
            .iter()
            .enumerate()
            .filter(|(_, h)| h.slack(&self.vertices[i]).is_zero())
            .map(|(j, _)| j)
            .collect()
    }
}

/// Rewrites `Cx <= γ` in standard form over the slacks `s = γ - Cx`.
///
/// The equality rows span the left null space of `C` (relations `wᵀs = wᵀγ`
/// for `wᵀC = 0`), in reduced row echelon form. Vertex images keep the
/// input order; use [`sorted`] for the canonical ordering.
pub fn slack_embed(h: &HPolytope) -> Result<Polytope> {
    let k = h.inequalities.len();
    let d = h.vertices[0].len();
    let transposed: Vec<Vec<Rational>> = (0..d)
        .map(|c| h.inequalities.iter().map(|q| q.normal[c].clone()).collect())
        .collect();
    let a = linalg::rref(&linalg::null_space(&transposed, k)?)?;
    let gamma: Vec<Rational> = h.inequalities.iter().map(|q| q.rhs.clone()).collect();
    let b = a.iter().map(|row| linalg::dot(row, &gamma)).collect();
    let vertices = h
        .vertices
        .iter()
        .map(|v| h.inequalities.iter().map(|q| q.slack(v)).collect())
        .collect();
    Polytope::new(a, b, vertices)
}

/// The same polytope with vertices in lexicographic order.
pub fn sorted(p: Polytope) -> Polytope {
    let mut vertices = p.vertices().to_vec();
    vertices.sort();
    Polytope::new(p.a().to_vec(), p.b().to_vec(), vertices).expect("reordering keeps validity")
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn embed(inequalities: Vec<Inequality>, vertices: Vec<Vec<Rational>>) -> Polytope {
    let h = HPolytope::new(inequalities, vertices).expect("fixture is a valid H-polytope");
    sorted(slack_embed(&h).expect("fixture embeds"))
}

fn cube_inequalities(d: usize) -> Vec<Inequality> {
    let unit = |i: usize, s: i64| (0..d).map(|j| rat(if i == j { s } else { 0 })).collect();
    (0..d)
        .map(|i| Inequality::new(unit(i, -1), rat(0)))
        .chain((0..d).map(|i| Inequality::new(unit(i, 1), rat(1))))
        .collect()
}

fn cube_vertices(d: usize) -> Vec<Vec<Rational>> {
    (0..1u64 << d)
        .map(|mask| (0..d).map(|i| rat((mask >> i & 1) as i64)).collect())
        .collect()
}

/// The unit `d`-cube, `1 <= d <= MAX_CUBE_DIM`.
pub fn cube(d: usize) -> Result<Polytope> {
    if d == 0 || d > MAX_CUBE_DIM {
        return Err(Error::InvalidArgument(format!(
            "cube dimension must be in 1..={MAX_CUBE_DIM}, got {d}"
        )));
    }
    Ok(embed(cube_inequalities(d), cube_vertices(d)))
}

/// The standard `d`-simplex with the `d + 1` unit vectors as vertices.
pub fn simplex(d: usize) -> Result<Polytope> {
    if d == 0 {
        return Err(Error::InvalidArgument("simplex dimension must be >= 1".into()));
    }
    let n = d + 1;
    let vertices = (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect();
    Ok(sorted(Polytope::new(vec![vec![rat(1); n]], vec![rat(1)], vertices)?))
}

/// Triangular prism.
pub fn prism3() -> Polytope {
    let inequalities = vec![
        Inequality::new(ints(&[-1, 0, 0]), rat(0)),
        Inequality::new(ints(&[0, -1, 0]), rat(0)),
        Inequality::new(ints(&[1, 1, 0]), rat(1)),
        Inequality::new(ints(&[0, 0, -1]), rat(0)),
        Inequality::new(ints(&[0, 0, 1]), rat(1)),
    ];
    let vertices = [[0, 0], [1, 0], [0, 1]]
        .iter()
        .flat_map(|&[x, y]| [ints(&[x, y, 0]), ints(&[x, y, 1])])
        .collect();
    embed(inequalities, vertices)
}

/// Triangular bipyramid; the apexes are [`BIPYRAMID_APEXES`].
pub fn bipyramid3() -> Polytope {
    let inequalities = vec![
        Inequality::new(ints(&[0, -1, 1]), rat(0)),
        Inequality::new(ints(&[-1, 0, 1]), rat(0)),
        Inequality::new(ints(&[1, 1, 1]), rat(3)),
        Inequality::new(ints(&[0, -1, -1]), rat(0)),
        Inequality::new(ints(&[-1, 0, -1]), rat(0)),
        Inequality::new(ints(&[1, 1, -1]), rat(3)),
    ];
    let vertices = vec![
        ints(&[0, 0, 0]),
        ints(&[3, 0, 0]),
        ints(&[0, 3, 0]),
        ints(&[1, 1, 1]),
        ints(&[1, 1, -1]),
    ];
    embed(inequalities, vertices)
}

/// Unit cube with one corner truncated.
pub fn truncated_cube() -> Polytope {
    let mut inequalities = cube_inequalities(3);
    inequalities.push(Inequality::new(ints(&[1, 1, 1]), ratio(5, 2)));
    let half = ratio(1, 2);
    let mut vertices: Vec<Vec<Rational>> = cube_vertices(3)
        .into_iter()
        .filter(|v| v.iter().any(Zero::is_zero))
        .collect();
    for i in 0..3 {
        let mut v = ints(&[1, 1, 1]);
        v[i] = half.clone();
        vertices.push(v);
    }
    embed(inequalities, vertices)
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 5] = ["cube", "simplex", "prism3", "bipyramid3", "truncated_cube"];

/// Looks up a generator by name. `cube` and `simplex` need a dimension.
pub fn by_name(name: &str, d: Option<usize>) -> Result<Polytope> {
    let need_dim = || {
        d.ok_or_else(|| Error::InvalidArgument(format!("generator {name} needs a dimension")))
    };
    let no_dim = |p: Polytope| match d {
        None => Ok(p),
        Some(_) => Err(Error::InvalidArgument(format!(
            "generator {name} takes no dimension"
        ))),
    };
    match name {
        "cube" => cube(need_dim()?),
        "simplex" => simplex(need_dim()?),
        "prism3" => no_dim(prism3()),
        "bipyramid3" => no_dim(bipyramid3()),
        "truncated_cube" => no_dim(truncated_cube()),
        other => Err(Error::InvalidArgument(format!(
            "unknown generator {other:?}; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}
