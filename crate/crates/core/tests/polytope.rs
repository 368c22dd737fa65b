mod common;

use common::{brute_facets, brute_hausdorff_sq, brute_vertices, diagonal_grid_search, orthant_volume, r};
use mahler_core::hanner::polytope_from_graph;
use mahler_core::polytope::{
    banach_mazur_diag_upper, coordinate_projection, coordinate_section, hausdorff_distance_sq, l1_sum,
    linf_sum, membership, normalize_unconditional, volume, Location,
};
use mahler_core::rational::{int, rat, unit, vector};
use mahler_core::stability::random_unconditional;
use mahler_core::volume_product::product;
use mahler_core::{Error, Graph, Polytope, RVector, Rational};
use num::One;
use proptest::prelude::*;

fn path_polytope() -> Polytope {
    polytope_from_graph(&Graph::path(4)).unwrap()
}

fn unit_system(k: &Polytope) -> Vec<(RVector, Rational)> {
    k.facet_normals().iter().map(|a| (a.clone(), Rational::one())).collect()
}

#[test]
fn enumeration_agrees_with_subset_oracle() {
    let bodies = vec![
        Polytope::cube(3),
        Polytope::cross_polytope(3),
        path_polytope(),
        random_unconditional(3, 2, 11).unwrap(),
    ];
    for k in &bodies {
        assert_eq!(brute_vertices(k.dim(), &unit_system(k)), k.vertices());
        assert_eq!(brute_facets(k.dim(), k.vertices()), k.facet_normals());
    }
}

#[test]
fn path_polytope_facets_and_polar() {
    let p = path_polytope();
    // |x1|+|x2| <= 1, |x2|+|x3| <= 1, |x3|+|x4| <= 1 in sign-expanded form
    let mut normals = Vec::new();
    for (a, b) in [(0, 1), (1, 2), (2, 3)] {
        for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut v = vector(&[0, 0, 0, 0]);
            v[a] = int(sa);
            v[b] = int(sb);
            normals.push(v);
        }
    }
    assert_eq!(Polytope::from_unit_normals(4, normals).unwrap(), p);
    let supports: std::collections::BTreeSet<Vec<usize>> = p
        .polar()
        .vertices()
        .iter()
        .map(|v| (0..4).filter(|&i| v[i] != int(0)).collect())
        .collect();
    let expected: std::collections::BTreeSet<Vec<usize>> =
        [vec![0, 1], vec![1, 2], vec![2, 3]].into_iter().collect();
    assert_eq!(supports, expected);
    assert_eq!(membership(&vector(&[1, 0, 0, 1]), &p).unwrap(), Location::Boundary);
}

#[test]
fn sections_projections_and_volumes() {
    assert_eq!(coordinate_section(&Polytope::cube(3), 2).unwrap(), Polytope::cube(2));
    assert_eq!(
        coordinate_section(&Polytope::cross_polytope(3), 2).unwrap(),
        Polytope::cross_polytope(2)
    );
    assert_eq!(
        coordinate_projection(&Polytope::cross_polytope(3), 2).unwrap(),
        Polytope::cross_polytope(2)
    );
    let s = coordinate_section(&path_polytope(), 3).unwrap();
    assert_eq!(volume(&s), rat(8, 3));
    assert_eq!(orthant_volume(&s), rat(8, 3));
    assert_eq!(volume(&Polytope::cross_polytope(3)), rat(4, 3));
    assert_eq!(volume(&path_polytope()), rat(10, 3));
}

#[test]
fn projection_strictly_contains_section_without_unconditionality() {
    // a parallelogram sheared along x2
    let k = Polytope::from_vertices(
        2,
        vec![vector(&[1, 1]), vector(&[-1, -1]), vector(&[1, -1]), vector(&[-1, 1]), vector(&[2, 1]), vector(&[-2, -1])],
    )
    .unwrap();
    assert!(!k.is_unconditional());
    let proj = coordinate_projection(&k, 1).unwrap();
    let sec = coordinate_section(&k, 1).unwrap();
    let witness = vector(&[2]);
    assert!(proj.contains(&witness) && !sec.contains(&witness));
    assert!(proj.contains_body(&sec));
}

#[test]
fn sums_and_duality_examples() {
    let i = Polytope::interval(int(1)).unwrap();
    assert_eq!(l1_sum(&i, &i).unwrap(), Polytope::cross_polytope(2));
    assert_eq!(linf_sum(&i, &i).unwrap(), Polytope::cube(2));
    let k = linf_sum(&Polytope::cross_polytope(2), &i).unwrap();
    assert_eq!(volume(&k), int(4));
    let dual = l1_sum(&Polytope::cube(2), &i).unwrap();
    assert_eq!(k.polar(), dual);
    assert_eq!(volume(&k.polar()), volume(&dual));
    assert!(matches!(
        mahler_core::polytope::l1_sum_on(&i, &[0], &i, &[0]),
        Err(Error::InvalidSum(_))
    ));
}

#[test]
fn unconditionality_and_normalization() {
    let skew = Polytope::from_vertices(
        2,
        vec![vector(&[1, 1]), vector(&[-1, -1]), vec![int(1), rat(-1, 2)], vec![int(-1), rat(1, 2)]],
    )
    .unwrap();
    assert!(!skew.is_unconditional());
    assert!(matches!(normalize_unconditional(&skew), Err(Error::NotUnconditional)));
    let big = Polytope::cube(3).dilate(&int(3)).unwrap();
    assert_eq!(normalize_unconditional(&big).unwrap(), Polytope::cube(3));
    let stretched = Polytope::cross_polytope(2).scale_axes(&[int(2), rat(1, 2)]).unwrap();
    assert_eq!(normalize_unconditional(&stretched).unwrap(), Polytope::cross_polytope(2));
}

#[test]
fn polarity_requires_interior_origin() {
    let off = vec![vector(&[1, 0]), vector(&[0, 1]), vector(&[1, 1])];
    assert!(matches!(Polytope::from_vertices(2, off), Err(Error::OriginNotInterior)));
}

#[test]
fn hausdorff_against_active_set_oracle() {
    let pairs = vec![
        (Polytope::cube(3), Polytope::cross_polytope(3)),
        (Polytope::cube(2), Polytope::cube(2).dilate(&rat(1, 2)).unwrap()),
        (path_polytope(), Polytope::cube(4)),
        (random_unconditional(3, 2, 4).unwrap(), Polytope::cross_polytope(3)),
    ];
    for (a, b) in &pairs {
        assert_eq!(hausdorff_distance_sq(a, b).unwrap(), brute_hausdorff_sq(a, b));
    }
    assert_eq!(
        hausdorff_distance_sq(&Polytope::cube(3), &Polytope::cross_polytope(3)).unwrap(),
        rat(4, 3)
    );
}

#[test]
fn banach_mazur_diagonal_bound() {
    let tol = rat(1, 1000);
    let sq = Polytope::cube(2);
    let diamond = Polytope::cross_polytope(2);
    let bound = banach_mazur_diag_upper(&sq, &diamond, &tol).unwrap();
    // positive diagonal maps cannot rotate; the best factor is exactly 2
    let oracle = diagonal_grid_search(&sq, &diamond, 4, 16);
    assert_eq!(oracle, int(2));
    assert_eq!(bound, int(2));
    let stretched = sq.scale_axes(&[int(2), int(1)]).unwrap();
    assert_eq!(banach_mazur_diag_upper(&sq, &stretched, &tol).unwrap(), int(1));
    let skew = Polytope::from_vertices(2, vec![vector(&[1, 1]), vector(&[-1, -1]), vector(&[1, -1]), vector(&[-1, 1]), vector(&[2, 1]), vector(&[-2, -1])]).unwrap();
    assert!(banach_mazur_diag_upper(&skew, &sq, &tol).is_err());
}

fn unconditional_body() -> impl Strategy<Value = Polytope> {
    (2usize..=3, 1usize..=3, any::<u64>()).prop_map(|(n, m, seed)| random_unconditional(n, m, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bipolar_identity(k in unconditional_body()) {
        prop_assert_eq!(k.polar().polar(), k);
    }

    #[test]
    fn product_is_diagonal_invariant(k in unconditional_body(), d in prop::collection::vec(1i64..=6, 3)) {
        let scale: Vec<Rational> = (0..k.dim()).map(|i| r(d[i], 1 + d[(i + 1) % 3])).collect();
        prop_assert_eq!(product(&k.scale_axes(&scale).unwrap()), product(&k));
    }

    #[test]
    fn product_is_linear_invariant(k in unconditional_body(), a in -3i64..=3, b in -3i64..=3) {
        // two shears and a scaling; singular draws are skipped
        let n = k.dim();
        let mut rows: Vec<RVector> = (0..n).map(|i| unit(n, i)).collect();
        rows[0][1] = int(a);
        rows[1][0] = int(b);
        rows[n - 1][n - 1] = int(2);
        let t = mahler_core::linalg::RMatrix::new(rows).unwrap();
        if let Ok(image) = k.linear_image(&t) {
            prop_assert_eq!(product(&image), product(&k));
        }
    }

    #[test]
    fn section_equals_projection_for_unconditional(k in unconditional_body(), j in 0usize..3) {
        let j = j % k.dim();
        let sec = coordinate_section(&k, j).unwrap();
        prop_assert_eq!(&coordinate_projection(&k, j).unwrap(), &sec);
        prop_assert_eq!(coordinate_section(&k.polar(), j).unwrap(), sec.polar());
    }

    #[test]
    fn l1_linf_duality(a in unconditional_body(), b in unconditional_body()) {
        prop_assume!(a.dim() + b.dim() <= 5);
        let lhs = l1_sum(&a, &b).unwrap().polar();
        prop_assert_eq!(lhs, linf_sum(&a.polar(), &b.polar()).unwrap());
    }

    #[test]
    fn normalized_bodies_are_sandwiched(k in unconditional_body()) {
        let n = k.dim();
        let kn = normalize_unconditional(&k).unwrap();
        prop_assert!(Polytope::cube(n).contains_body(&kn));
        prop_assert!(kn.contains_body(&Polytope::cross_polytope(n)));
        for i in 0..n {
            prop_assert_eq!(kn.locate(&unit(n, i)).unwrap(), Location::Boundary);
        }
    }

    #[test]
    fn volume_matches_orthant_oracle(k in unconditional_body()) {
        prop_assert_eq!(volume(&k), orthant_volume(&k));
    }
}
