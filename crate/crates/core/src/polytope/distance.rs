//! Exact Hausdorff distance and a diagonal Banach–Mazur upper bound.

use num::{BigInt, One, Signed, Zero};

use super::faces::face_lattice;
use super::{normalize_unconditional, Polytope};
use crate::error::{Error, Result};
use crate::linalg::{rank, solve_linear, RMatrix};
use crate::rational::{dot, norm_sq, sub, RVector, Rational};

/// Affine hull data of one face: base point, spanning directions and the
/// Gram matrix of those directions.
struct FaceFrame {
    base: RVector,
    basis: Vec<RVector>,
    gram: Option<RMatrix>,
    facets: Vec<usize>,
}

struct Projector<'a> {
    body: &'a Polytope,
    frames: Vec<FaceFrame>,
}

impl<'a> Projector<'a> {
    fn new(body: &'a Polytope) -> Self {
        let frames = face_lattice(body)
            .into_iter()
            .map(|face| {
                let verts: Vec<&RVector> = face.vertices.iter().map(|&i| &body.vertices()[i]).collect();
                let base = verts[0].clone();
                let mut basis: Vec<RVector> = Vec::with_capacity(face.dim);
                for v in &verts[1..] {
                    if basis.len() == face.dim {
                        break;
                    }
                    let d = sub(v, &base);
                    let mut trial = basis.clone();
                    trial.push(d.clone());
                    if rank(&trial) == trial.len() {
                        basis.push(d);
                    }
                }
                let gram = (!basis.is_empty()).then(|| {
                    RMatrix::new(
                        basis
                            .iter()
                            .map(|u| basis.iter().map(|w| dot(u, w)).collect())
                            .collect(),
                    )
                    .expect("square gram matrix")
                });
                let facets = body
                    .facet_normals()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| verts.iter().all(|v| dot(a, v).is_one()))
                    .map(|(i, _)| i)
                    .collect();
                FaceFrame {
                    base,
                    basis,
                    gram,
                    facets,
                }
            })
            .collect();
        Projector { body, frames }
    }

    fn distance_sq(&self, x: &[Rational]) -> Rational {
        let values: Vec<Rational> = self.body.facet_normals().iter().map(|a| dot(a, x)).collect();
        if values.iter().all(|v| *v <= Rational::one()) {
            return Rational::zero();
        }
        let mut best: Option<Rational> = None;
        for frame in &self.frames {
            // the nearest face lies in some facet that sees x
            if !frame.facets.iter().any(|&f| values[f] > Rational::one()) {
                continue;
            }
            let offset = sub(x, &frame.base);
            let foot = match &frame.gram {
                None => frame.base.clone(),
                Some(gram) => {
                    let rhs: RVector = frame.basis.iter().map(|u| dot(u, &offset)).collect();
                    let coeffs = solve_linear(gram, &rhs)
                        .expect("square")
                        .expect("independent directions");
                    let mut p = frame.base.clone();
                    for (c, u) in coeffs.iter().zip(&frame.basis) {
                        for (pi, ui) in p.iter_mut().zip(u) {
                            *pi += c * ui;
                        }
                    }
                    p
                }
            };
            if !self.body.contains(&foot) {
                continue;
            }
            let d = norm_sq(&sub(x, &foot));
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
        best.expect("an outside point has a nearest boundary face")
    }
}

/// Squared Euclidean distance from `x` to `k`.
pub fn point_distance_sq(x: &[Rational], k: &Polytope) -> Result<Rational> {
    if x.len() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            got: x.len(),
        });
    }
    Ok(Projector::new(k).distance_sq(x))
}

/// Squared Hausdorff distance. For polytopes the outer maxima are attained
/// at vertices.
pub fn hausdorff_distance_sq(a: &Polytope, b: &Polytope) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if a == b {
        return Ok(Rational::zero());
    }
    // for two unconditional bodies every vertex has the distance of its
    // nonnegative sign image
    let both_unconditional = a.is_unconditional() && b.is_unconditional();
    let one_sided = |from: &Polytope, to: &Polytope| -> Rational {
        if to.contains_body(from) {
            return Rational::zero();
        }
        let proj = Projector::new(to);
        from.vertices()
            .iter()
            .filter(|v| !both_unconditional || v.iter().all(|x| !x.is_negative()))
            .map(|v| proj.distance_sq(v))
            .max()
            .unwrap_or_else(Rational::zero)
    };
    let ab = one_sided(a, b);
    let ba = one_sided(b, a);
    Ok(if ab > ba { ab } else { ba })
}

/// Sandwich factor of `T a` against `b` for the positive diagonal `t`:
/// the least `d` with `b ⊆ c T a ⊆ d b` for some `c > 0`.
fn diagonal_ratio(a: &Polytope, b: &Polytope, t: &[Rational]) -> Rational {
    let outer = a
        .vertices()
        .iter()
        .map(|v| {
            let tv: RVector = v.iter().zip(t).map(|(x, s)| x * s).collect();
            b.gauge(&tv)
        })
        .max()
        .unwrap_or_else(Rational::zero);
    let inner = b
        .vertices()
        .iter()
        .map(|w| {
            let tw: RVector = w.iter().zip(t).map(|(x, s)| x / s).collect();
            a.gauge(&tw)
        })
        .max()
        .unwrap_or_else(Rational::zero);
    outer * inner
}

fn round_down_dyadic(x: &Rational, bits: u32) -> Rational {
    let denom = BigInt::one() << bits;
    let scaled = (x * Rational::from_integer(denom.clone())).floor();
    Rational::new(scaled.to_integer(), denom)
}

/// Upper bound on the Banach–Mazur distance between two unconditional
/// bodies, minimizing the sandwich factor over positive diagonal maps only.
///
/// Each diagonal entry is tuned by ternary search on a dyadic grid (the log
/// of the factor is convex in the log of each entry), sweeping coordinates
/// until a sweep improves by less than `tol`. The returned value is the exact
/// factor of the best map found, so it is always a valid upper bound.
pub fn banach_mazur_diag_upper(a: &Polytope, b: &Polytope, tol: &Rational) -> Result<Rational> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if !tol.is_positive() {
        return Err(Error::precondition("tolerance must be positive"));
    }
    let a = normalize_unconditional(a)?;
    let b = normalize_unconditional(b)?;
    let n = a.dim();
    let mut t = vec![Rational::one(); n];
    let mut best = diagonal_ratio(&a, &b, &t);

    let mut bits = 4u32;
    while Rational::new(BigInt::from(8), BigInt::one() << bits) > *tol {
        bits += 1;
    }
    let span = Rational::from_integer(BigInt::from(4 * n as i64));

    for _sweep in 0..50 {
        let before = best.clone();
        for i in 1..n {
            let mut lo = span.recip();
            let mut hi = span.clone();
            let eval = |ti: &Rational, t: &[Rational]| {
                let mut trial = t.to_vec();
                trial[i] = ti.clone();
                diagonal_ratio(&a, &b, &trial)
            };
            while &hi - &lo > *tol {
                let third = (&hi - &lo) / Rational::from_integer(BigInt::from(3));
                let mut m1 = round_down_dyadic(&(&lo + &third), bits);
                let mut m2 = round_down_dyadic(&(&hi - &third), bits);
                if m1 <= lo {
                    m1 = lo.clone();
                }
                if m2 <= m1 {
                    break;
                }
                if m2 >= hi {
                    m2 = hi.clone();
                }
                if eval(&m1, &t) <= eval(&m2, &t) {
                    hi = m2;
                } else {
                    lo = m1;
                }
            }
            for cand in [lo, hi] {
                let v = eval(&cand, &t);
                if v < best {
                    best = v;
                    t[i] = cand;
                }
            }
        }
        if &before - &best < *tol {
            break;
        }
    }
    Ok(best)
}
