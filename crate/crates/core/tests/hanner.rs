mod common;

use common::{brute_mis, has_p4_by_orderings, orthant_volume};
use mahler_core::hanner::{
    enumerate_p4_free, enumerate_standard_hanner, graph_from_polytope, graph_vertex_set, hanner_from_tree,
    is_dual_01, polytope_from_graph, tree_from_cograph, HannerTree, SumOp,
};
use mahler_core::polytope::{coordinate_section, volume};
use mahler_core::rational::{int, rat};
use mahler_core::volume_product::{mahler_bound, product};
use mahler_core::{Graph, Polytope};
use proptest::prelude::*;

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs)).prop_map(|(n, code)| Graph::from_pair_code(n, code))
    })
}

#[test]
fn p4_freeness_matches_ordering_oracle_up_to_six() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        for code in 0u64..1 << pairs {
            let g = Graph::from_pair_code(n, code);
            assert_eq!(g.is_p4_free(), !has_p4_by_orderings(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn labeled_counts_match_exhaustive_filter() {
    for n in 1..=5 {
        let pairs = n * (n - 1) / 2;
        let oracle = (0u64..1 << pairs)
            .filter(|&c| !has_p4_by_orderings(&Graph::from_pair_code(n, c)))
            .count();
        assert_eq!(enumerate_p4_free(n, false).unwrap().len(), oracle);
    }
}

#[test]
fn path_graph_examples() {
    let p4 = Graph::path(4);
    assert_eq!(p4.complement().edges(), vec![(0, 2), (0, 3), (1, 3)]);
    assert_eq!(p4.maximal_independent_sets(), vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
    let k = polytope_from_graph(&p4).unwrap();
    assert_eq!(k.vertices().len(), 12);
    assert_eq!(volume(&k), rat(10, 3));
}

#[test]
fn tree_example_volume_against_orthant_oracle() {
    let t = HannerTree::node(
        SumOp::L1,
        vec![
            HannerTree::node(SumOp::Linf, vec![HannerTree::leaf(0), HannerTree::leaf(1)]),
            HannerTree::leaf(2),
        ],
    );
    let k = hanner_from_tree(&t).unwrap();
    // double pyramid over a square: 2 · (1/3) · 4 · 1
    assert_eq!(volume(&k), rat(8, 3));
    assert_eq!(orthant_volume(&k), rat(8, 3));
    let cube = HannerTree::node(SumOp::Linf, (0..4).map(HannerTree::leaf).collect());
    assert_eq!(hanner_from_tree(&cube).unwrap(), Polytope::cube(4));
}

#[test]
fn every_sign_pattern_is_extreme() {
    for g in enumerate_p4_free(4, false).unwrap() {
        let points = graph_vertex_set(&g);
        let k = polytope_from_graph(&g).unwrap();
        assert_eq!(k.vertices().len(), points.len());
        for i in 0..points.len() {
            let mut rest = points.clone();
            rest.remove(i);
            // dropping ±e_i can push the origin onto the boundary, which also proves extremality
            match Polytope::from_vertices(4, rest) {
                Ok(smaller) => assert_ne!(smaller, k),
                Err(e) => assert!(matches!(e, mahler_core::Error::OriginNotInterior)),
            }
        }
    }
}

#[test]
fn hanner_invariants_up_to_five() {
    for n in 1..=5 {
        let bound = mahler_bound(n);
        assert_eq!(bound, common::pow_int(4, n) / common::factorial(n));
        for e in enumerate_standard_hanner(n, false).unwrap() {
            let g = &e.graph;
            let k = &e.polytope;
            assert!(k.is_unconditional());
            assert!(is_dual_01(k));
            assert_eq!(product(k), bound);
            assert_eq!(k.polar(), polytope_from_graph(&g.complement()).unwrap());
            assert_eq!(&graph_from_polytope(k).unwrap(), g);
            let t = tree_from_cograph(g).unwrap();
            assert_eq!(&hanner_from_tree(&t).unwrap(), k);
            if n >= 2 {
                for j in 0..n {
                    let s = coordinate_section(k, j).unwrap();
                    assert_eq!(graph_from_polytope(&s).unwrap(), g.without_vertex(j));
                }
            }
        }
    }
}

#[test]
fn dual_01_negative_example() {
    assert!(is_dual_01(&Polytope::cube(3)));
    let k = Polytope::cube(2).scale_axes(&[rat(1, 2), int(1)]).unwrap();
    assert!(!is_dual_01(&k));
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arbitrary_graph(8)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn independent_sets_match_subset_oracle(g in arbitrary_graph(8)) {
        prop_assert_eq!(g.maximal_independent_sets(), brute_mis(&g));
    }

    #[test]
    fn relabeled_graphs_are_isomorphic(g in arbitrary_graph(6), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabeled(&perm);
        prop_assert!(g.is_isomorphic(&h));
        prop_assert_eq!(g.canonical_code(), h.canonical_code());
    }

    #[test]
    fn graph_json_round_trip(g in arbitrary_graph(8)) {
        prop_assert_eq!(Graph::from_json_str(&g.to_json().to_string()).unwrap(), g);
    }
}
