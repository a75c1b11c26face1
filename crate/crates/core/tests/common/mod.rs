#![allow(dead_code)]

use std::collections::BTreeMap;

use polyjoin::generators::{self, slack_embed, sorted, HPolytope, Inequality};
use polyjoin::linalg::{self, rat, ratio, Rational};
use polyjoin::Polytope;

pub fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rat(x)).collect()
}

fn embed(inequalities: Vec<Inequality>, vertices: Vec<Vec<Rational>>) -> Polytope {
    sorted(slack_embed(&HPolytope::new(inequalities, vertices).unwrap()).unwrap())
}

pub fn triangle() -> (Vec<Inequality>, Vec<Vec<Rational>>) {
    (
        vec![
            Inequality::new(ints(&[-1, 0]), rat(0)),
            Inequality::new(ints(&[0, -1]), rat(0)),
            Inequality::new(ints(&[1, 1]), rat(1)),
        ],
        vec![ints(&[0, 0]), ints(&[1, 0]), ints(&[0, 1])],
    )
}

pub fn interval() -> (Vec<Inequality>, Vec<Vec<Rational>>) {
    (
        vec![
            Inequality::new(ints(&[-1]), rat(0)),
            Inequality::new(ints(&[1]), rat(1)),
        ],
        vec![ints(&[0]), ints(&[1])],
    )
}

/// Cartesian product of two inequality descriptions.
pub fn product(
    (ia, va): (Vec<Inequality>, Vec<Vec<Rational>>),
    (ib, vb): (Vec<Inequality>, Vec<Vec<Rational>>),
) -> (Vec<Inequality>, Vec<Vec<Rational>>) {
    let (da, db) = (va[0].len(), vb[0].len());
    let pad = |h: &Inequality, before: usize, after: usize| {
        let mut normal = vec![rat(0); before];
        normal.extend(h.normal.iter().cloned());
        normal.extend(std::iter::repeat_n(rat(0), after));
        Inequality::new(normal, h.rhs.clone())
    };
    let ineq = ia
        .iter()
        .map(|h| pad(h, 0, db))
        .chain(ib.iter().map(|h| pad(h, da, 0)))
        .collect();
    let verts = va
        .iter()
        .flat_map(|x| vb.iter().map(move |y| x.iter().chain(y).cloned().collect()))
        .collect();
    (ineq, verts)
}

pub fn triangle_x_triangle() -> Polytope {
    let (i, v) = product(triangle(), triangle());
    embed(i, v)
}

pub fn prism_x_interval() -> Polytope {
    let (i, v) = product(product(triangle(), interval()), interval());
    embed(i, v)
}

/// `[0,1]^d` with every vertex in `cut` (bit masks, bit `i` = coordinate
/// `i`) sliced off at distance 1/3 along its edges. Simple for any `cut`.
pub fn truncated_cube_family(d: usize, cut: &[u64]) -> Polytope {
    let mut ineq: Vec<Inequality> = (0..d)
        .map(|i| {
            let mut n = vec![rat(0); d];
            n[i] = rat(-1);
            Inequality::new(n, rat(0))
        })
        .chain((0..d).map(|i| {
            let mut n = vec![rat(0); d];
            n[i] = rat(1);
            Inequality::new(n, rat(1))
        }))
        .collect();
    let mut verts = Vec::new();
    for mask in 0..1u64 << d {
        let w: Vec<i64> = (0..d).map(|i| (mask >> i & 1) as i64).collect();
        if !cut.contains(&mask) {
            verts.push(ints(&w));
            continue;
        }
        // sum_i |x_i - w_i| >= 1/3, written as <= with the sign flipped.
        let normal = w.iter().map(|&wi| rat(if wi == 0 { -1 } else { 1 })).collect();
        let ones = w.iter().sum::<i64>();
        ineq.push(Inequality::new(normal, rat(ones) - ratio(1, 3)));
        for i in 0..d {
            let mut v: Vec<Rational> = ints(&w);
            v[i] = if w[i] == 0 { ratio(1, 3) } else { ratio(2, 3) };
            verts.push(v);
        }
    }
    embed(ineq, verts)
}

/// Square pyramid: base [0,1]^2, apex (1/2, 1/2, 1). Not simple.
pub fn square_pyramid() -> Polytope {
    let ineq = vec![
        Inequality::new(ints(&[0, 0, -1]), rat(0)),
        Inequality::new(ints(&[-2, 0, 1]), rat(0)),
        Inequality::new(ints(&[2, 0, 1]), rat(2)),
        Inequality::new(ints(&[0, -2, 1]), rat(0)),
        Inequality::new(ints(&[0, 2, 1]), rat(2)),
    ];
    let verts = vec![
        ints(&[0, 0, 0]),
        ints(&[1, 0, 0]),
        ints(&[0, 1, 0]),
        ints(&[1, 1, 0]),
        vec![ratio(1, 2), ratio(1, 2), rat(1)],
    ];
    embed(ineq, verts)
}

/// Every fixture polytope with a name and whether it is simple.
pub fn fixtures() -> Vec<(String, Polytope, bool)> {
    let mut out = Vec::new();
    for d in 1..=5 {
        out.push((format!("cube({d})"), generators::cube(d).unwrap(), true));
    }
    for d in 1..=6 {
        out.push((format!("simplex({d})"), generators::simplex(d).unwrap(), true));
    }
    out.push(("prism3".into(), generators::prism3(), true));
    out.push(("truncated_cube".into(), generators::truncated_cube(), true));
    out.push(("bipyramid3".into(), generators::bipyramid3(), false));
    out.push(("triangle_x_triangle".into(), triangle_x_triangle(), true));
    out.push(("prism_x_interval".into(), prism_x_interval(), true));
    out.push(("square_pyramid".into(), square_pyramid(), false));
    out.push((
        "cube(3) cut at 0,3,5,6".into(),
        truncated_cube_family(3, &[0, 3, 5, 6]),
        true,
    ));
    out
}

/// Every distinct face of `p` found by trying all coordinate subsets, as
/// (vertex list, dimension). Exponential in `n`; for small fixtures only.
pub fn brute_force_faces(p: &Polytope) -> Vec<(Vec<usize>, usize)> {
    let n = p.n();
    assert!(n <= 16, "brute force over 2^{n} subsets");
    let mut faces: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for mask in 0u32..1 << n {
        let verts: Vec<usize> = (0..p.vertex_count())
            .filter(|&w| {
                let x = p.vertex(w).unwrap();
                (0..n).all(|i| mask >> i & 1 == 0 || x[i] == rat(0))
            })
            .collect();
        if verts.is_empty() || faces.contains_key(&verts) {
            continue;
        }
        let dim = linalg::affine_rank(verts.iter().map(|&w| p.vertex(w).unwrap()));
        faces.insert(verts, dim);
    }
    faces.into_iter().collect()
}

/// The smallest face containing both vertices, by exhaustive search.
pub fn minimal_face(faces: &[(Vec<usize>, usize)], u: usize, v: usize) -> (Vec<usize>, usize) {
    faces
        .iter()
        .filter(|(verts, _)| verts.contains(&u) && verts.contains(&v))
        .min_by_key(|(verts, dim)| (*dim, verts.len()))
        .cloned()
        .expect("P itself contains every vertex")
}
