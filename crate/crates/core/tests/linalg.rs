mod common;

use common::cofactor_det;
use mahler_core::linalg::{determinant, solve_linear, RMatrix};
use mahler_core::rational::{int, rat, vector};
use mahler_core::{RVector, Rational};
use proptest::prelude::*;

fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
}

fn to_rows(m: &[Vec<i64>]) -> Vec<RVector> {
    m.iter().map(|r| vector(r)).collect()
}

#[test]
fn hand_checked_values() {
    assert_eq!(determinant(&RMatrix::identity(3)).unwrap(), int(1));
    let m = RMatrix::from_i64(&[vec![1, 2], vec![3, 4]]).unwrap();
    assert_eq!(determinant(&m).unwrap(), int(-2));
    let d = RMatrix::from_i64(&[vec![2, 0], vec![0, 4]]).unwrap();
    assert_eq!(solve_linear(&d, &vector(&[1, 1])).unwrap(), Some(vec![rat(1, 2), rat(1, 4)]));
    assert_eq!(
        solve_linear(&RMatrix::identity(3), &vector(&[1, 2, 3])).unwrap(),
        Some(vector(&[1, 2, 3]))
    );
}

#[test]
fn singular_and_non_square_inputs() {
    let s = RMatrix::from_i64(&[vec![1, 2], vec![2, 4]]).unwrap();
    assert_eq!(solve_linear(&s, &vector(&[1, 1])).unwrap(), None);
    let rect = RMatrix::from_i64(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
    assert!(determinant(&rect).is_err());
    assert!(solve_linear(&rect, &vector(&[1, 1])).is_err());
}

proptest! {
    #[test]
    fn determinant_matches_cofactor_expansion(m in small_matrix(5)) {
        let rows = to_rows(&m);
        let fast = determinant(&RMatrix::new(rows.clone()).unwrap()).unwrap();
        prop_assert_eq!(fast, cofactor_det(&rows));
    }

    #[test]
    fn determinant_is_multiplicative(a in small_matrix(4), b in small_matrix(4)) {
        let (a, b) = (RMatrix::from_i64(&a).unwrap(), RMatrix::from_i64(&b).unwrap());
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn solve_has_zero_residual(m in small_matrix(4), b in prop::collection::vec(-5i64..=5, 4), den in 1i64..7) {
        let rows: Vec<RVector> = m.iter().map(|r| r.iter().map(|&x| rat(x, den)).collect()).collect();
        let mat = RMatrix::new(rows.clone()).unwrap();
        let rhs = vector(&b);
        match solve_linear(&mat, &rhs).unwrap() {
            Some(x) => prop_assert_eq!(mat.mul_vec(&x).unwrap(), rhs),
            None => prop_assert_eq!(cofactor_det(&rows), Rational::from_integer(0.into())),
        }
    }
}
