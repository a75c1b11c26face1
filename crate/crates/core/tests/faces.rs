mod common;

use polyjoin::{linalg, ZeroSet};
use proptest::prelude::*;

use common::{brute_force_faces, fixtures, minimal_face};

#[test]
fn join_zero_set_gives_the_minimal_face() {
    for (name, p, _) in fixtures() {
        if p.vertex_count() > 32 {
            continue;
        }
        let faces = brute_force_faces(&p);
        for u in 0..p.vertex_count() {
            for v in u + 1..p.vertex_count() {
                let (verts, dim) = minimal_face(&faces, u, v);
                let s = p.join_zero_set(u, v).unwrap();
                assert_eq!(p.face_vertices(&s).unwrap(), verts, "{name} ({u},{v})");
                assert_eq!(p.face_dimension(&s).unwrap(), Some(dim), "{name} ({u},{v})");
            }
        }
    }
}

#[test]
fn face_vertices_of_empty_set_and_of_vertex_zero_sets() {
    for (name, p, _) in fixtures() {
        let all = p.face_vertices(&ZeroSet::empty(p.n())).unwrap();
        assert_eq!(all.len(), p.vertex_count(), "{name}");
        for u in 0..p.vertex_count() {
            assert_eq!(p.face_vertices(p.zero_set(u).unwrap()).unwrap(), vec![u], "{name}");
        }
    }
}

#[test]
fn dimension_is_bounded_by_constraint_rank() {
    for (name, p, _) in fixtures() {
        let bound = p.n() - linalg::rank(p.a()).unwrap();
        assert!(p.dimension() <= bound, "{name}: {} > {bound}", p.dimension());
    }
}

#[test]
fn facets_of_simple_fixtures() {
    for (name, p, simple) in fixtures() {
        let f = p.detect_facets();
        let d = p.dimension();
        for facet in f.facets() {
            assert_eq!(p.span_dimension(&facet.vertices), Some(d - 1), "{name}");
        }
        let mut sets: Vec<_> = f.facets().iter().map(|x| x.vertices.clone()).collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), f.len(), "{name}: facets must be distinct");
        if simple {
            for v in 0..p.vertex_count() {
                assert_eq!(f.of_vertex(v).len(), d, "{name} vertex {v}");
            }
        }
    }
}

#[test]
fn complementarity_matches_facet_incidence() {
    for (name, p, _) in fixtures() {
        let f = p.detect_facets();
        for u in 0..p.vertex_count() {
            for v in u + 1..p.vertex_count() {
                let by_incidence = f.common(u, v).is_empty();
                // Equivalently the join is all of P.
                let join = p.join_zero_set(u, v).unwrap();
                let join_is_p = p.face_vertices(&join).unwrap().len() == p.vertex_count();
                assert_eq!(f.is_complementary(&p, u, v).unwrap(), by_incidence, "{name}");
                assert_eq!(join_is_p, by_incidence, "{name} ({u},{v})");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncated_cubes_are_simple_with_expected_facets(
        cut in proptest::collection::btree_set(0u64..8, 0..=8)
    ) {
        let cut: Vec<u64> = cut.into_iter().collect();
        let p = common::truncated_cube_family(3, &cut);
        let f = p.detect_facets();
        prop_assert_eq!(p.dimension(), 3);
        prop_assert_eq!(f.len(), 6 + cut.len());
        prop_assert_eq!(p.vertex_count(), 8 + 2 * cut.len());
        for v in 0..p.vertex_count() {
            prop_assert_eq!(f.of_vertex(v).len(), 3);
        }
        let faces = brute_force_faces(&p);
        for u in 0..p.vertex_count() {
            for v in u + 1..p.vertex_count() {
                let s = p.join_zero_set(u, v).unwrap();
                prop_assert_eq!(p.face_vertices(&s).unwrap(), minimal_face(&faces, u, v).0);
            }
        }
    }
}
