//! Double-description vertex enumeration in exact integer arithmetic.
//!
//! A bounded system `{x : <a_i, x> <= b_i}` is homogenized to the cone
//! `{(s, x) : b_i s - <a_i, x> >= 0, s >= 0}`; its extreme rays with `s > 0`
//! are the vertices. Rays are kept as primitive integer vectors and
//! adjacency is decided combinatorially from zero sets.

use fixedbitset::FixedBitSet;
use num::{BigInt, Signed, Zero};

use crate::linalg::{independent_subset, integer_row, make_primitive, solve_linear, RMatrix};
use crate::rational::{RVector, Rational};

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum DdFailure {
    /// The constraint normals do not span the ambient space.
    RankDeficient(usize),
    /// Some extreme ray lies at infinity.
    Unbounded,
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: FixedBitSet,
}

fn eval(row: &[BigInt], ray: &[BigInt]) -> BigInt {
    row.iter().zip(ray).fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
}

/// Extreme rays of the pointed cone `{y : <row, y> >= 0}`.
fn cone_extreme_rays(rows: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>, DdFailure> {
    let m = rows.len();
    let rational_rows: Vec<RVector> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect();
    let basis = independent_subset(&rational_rows);
    if basis.len() < d {
        return Err(DdFailure::RankDeficient(basis.len()));
    }
    let b = RMatrix::new(basis.iter().map(|&i| rational_rows[i].clone()).collect())
        .expect("basis rows share a length");

    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for k in 0..d {
        let rhs = crate::rational::unit(d, k);
        let sol = solve_linear(&b, &rhs)
            .expect("square basis")
            .expect("independent rows are nonsingular");
        let (mut coords, _) = integer_row(&sol);
        make_primitive(&mut coords);
        let mut zeros = FixedBitSet::with_capacity(m);
        for (pos, &row) in basis.iter().enumerate() {
            if pos != k {
                zeros.insert(row);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut in_basis = FixedBitSet::with_capacity(m);
    for &i in &basis {
        in_basis.insert(i);
    }

    for (i, row) in rows.iter().enumerate() {
        if in_basis.contains(i) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| eval(row, &r.coords)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&k| values[k].is_negative()).collect();
        for (k, v) in values.iter().enumerate() {
            if v.is_zero() {
                rays[k].zeros.insert(i);
            }
        }
        if negative.is_empty() {
            continue;
        }

        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                common.set(i, false);
                if common.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(r, ray)| r == p || r == q || !common.is_subset(&ray.zeros));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&values[p], &values[q]);
                let mut coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cq, cp)| vp * cq - vq * cp)
                    .collect();
                make_primitive(&mut coords);
                common.insert(i);
                created.push(Ray {
                    coords,
                    zeros: common,
                });
            }
        }

        let mut keep = Vec::with_capacity(rays.len() - negative.len() + created.len());
        for (k, ray) in rays.into_iter().enumerate() {
            if !values[k].is_negative() {
                keep.push(ray);
            }
        }
        keep.extend(created);
        rays = keep;
    }

    Ok(rays.into_iter().map(|r| r.coords).collect())
}

/// Vertices of the bounded polyhedron `{x : <a, x> <= b}` given as
/// `(a, b)` pairs in dimension `dim`.
pub(crate) fn enumerate_vertices(
    dim: usize,
    constraints: &[(RVector, Rational)],
) -> Result<Vec<RVector>, DdFailure> {
    let d = dim + 1;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(constraints.len() + 1);
    let mut homogenizing = vec![BigInt::zero(); d];
    homogenizing[0] = BigInt::from(1);
    rows.push(homogenizing);
    for (a, b) in constraints {
        let mut row: RVector = Vec::with_capacity(d);
        row.push(b.clone());
        row.extend(a.iter().map(|x| -x));
        let (mut ints, _) = integer_row(&row);
        make_primitive(&mut ints);
        rows.push(ints);
    }

    let rays = cone_extreme_rays(&rows, d)?;
    let mut vertices = Vec::with_capacity(rays.len());
    for ray in rays {
        if !ray[0].is_positive() {
            return Err(DdFailure::Unbounded);
        }
        let s = &ray[0];
        vertices.push(
            ray[1..]
                .iter()
                .map(|x| Rational::new(x.clone(), s.clone()))
                .collect(),
        );
    }
    Ok(vertices)
}
