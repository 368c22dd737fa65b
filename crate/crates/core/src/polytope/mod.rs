//! Convex polytopes with the origin in their interior, held in both
//! vertex and facet form.
//!
//! Facets are stored as normals `a` of the inequality `<a, x> <= 1`, which is
//! always possible when the origin is interior. With that convention polarity
//! is a swap of the two lists. Both lists are deduplicated, irredundant and
//! sorted lexicographically, so set equality is list equality.

mod dd;
mod distance;
mod faces;
mod io;

use std::collections::HashSet;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank, solve_linear, RMatrix};
use crate::rational::{dot, RVector, Rational};

pub use distance::{banach_mazur_diag_upper, hausdorff_distance_sq, point_distance_sq};
pub use faces::{face_lattice, volume, Face};
pub use io::{PolytopeJson, HalfspaceJson};

/// A finite point set; after canonicalization every point is extreme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    pub dim: usize,
    pub vertices: Vec<RVector>,
}

/// `<normal, x> <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: RVector,
    pub offset: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    pub dim: usize,
    pub halfspaces: Vec<Halfspace>,
}

/// Position of a point relative to a polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RVector>,
    normals: Vec<RVector>,
}

fn check_dims(dim: usize, points: &[RVector]) -> Result<()> {
    if dim == 0 {
        return Err(Error::precondition("ambient dimension must be at least 1"));
    }
    if let Some(p) = points.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: p.len(),
        });
    }
    Ok(())
}

fn sorted_unique(mut v: Vec<RVector>) -> Vec<RVector> {
    v.sort();
    v.dedup();
    v
}

/// Keeps the points whose tight constraints (among `normals`, offset 1) have
/// full rank.
fn tight_full_rank(dim: usize, points: Vec<RVector>, normals: &[RVector]) -> Vec<RVector> {
    points
        .into_iter()
        .filter(|p| {
            let tight: Vec<RVector> = normals
                .iter()
                .filter(|a| dot(a, p).is_one())
                .cloned()
                .collect();
            tight.len() >= dim && rank(&tight) == dim
        })
        .collect()
}

fn unit_offset_system(normals: &[RVector]) -> Vec<(RVector, Rational)> {
    normals.iter().map(|a| (a.clone(), Rational::one())).collect()
}

impl Polytope {
    /// Convex hull of `points`, which must contain the origin in the interior
    /// of their hull.
    pub fn from_vertices(dim: usize, points: Vec<RVector>) -> Result<Self> {
        check_dims(dim, &points)?;
        let points = sorted_unique(points);
        let r = rank(&points);
        if r < dim {
            return Err(Error::Degenerate { rank: r, dim });
        }
        let normals = match dd::enumerate_vertices(dim, &unit_offset_system(&points)) {
            Ok(n) => sorted_unique(n),
            Err(dd::DdFailure::RankDeficient(rank)) => return Err(Error::Degenerate { rank, dim }),
            Err(dd::DdFailure::Unbounded) => return Err(Error::OriginNotInterior),
        };
        let vertices = tight_full_rank(dim, points, &normals);
        Ok(Polytope {
            dim,
            vertices,
            normals,
        })
    }

    /// Intersection of `halfspaces`; every offset must be positive.
    pub fn from_halfspaces(dim: usize, halfspaces: &[Halfspace]) -> Result<Self> {
        check_dims(
            dim,
            &halfspaces.iter().map(|h| h.normal.clone()).collect::<Vec<_>>(),
        )?;
        let mut normals = Vec::with_capacity(halfspaces.len());
        for h in halfspaces {
            if h.normal.iter().all(Zero::is_zero) {
                if h.offset.is_negative() {
                    return Err(Error::precondition("empty halfspace system"));
                }
                continue;
            }
            if !h.offset.is_positive() {
                return Err(Error::OriginNotInterior);
            }
            normals.push(h.normal.iter().map(|x| x / &h.offset).collect());
        }
        Self::from_unit_normals(dim, normals)
    }

    /// `{x : <a, x> <= 1 for every a in normals}`.
    pub fn from_unit_normals(dim: usize, normals: Vec<RVector>) -> Result<Self> {
        check_dims(dim, &normals)?;
        let normals = sorted_unique(normals);
        let vertices = match dd::enumerate_vertices(dim, &unit_offset_system(&normals)) {
            Ok(v) => sorted_unique(v),
            Err(_) => return Err(Error::Unbounded),
        };
        let normals = tight_full_rank(dim, normals, &vertices);
        Ok(Polytope {
            dim,
            vertices,
            normals,
        })
    }

    /// `[-a, a]` on the real line.
    pub fn interval(half_length: Rational) -> Result<Self> {
        if !half_length.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        let inv = half_length.recip();
        Ok(Polytope {
            dim: 1,
            vertices: vec![vec![-half_length.clone()], vec![half_length]],
            normals: vec![vec![-inv.clone()], vec![inv]],
        })
    }

    /// The cube `B_inf^n`, built from its facets.
    pub fn cube(n: usize) -> Self {
        let normals = (0..n)
            .flat_map(|i| {
                [1, -1].into_iter().map(move |s| {
                    let mut a = crate::rational::zeros(n);
                    a[i] = crate::rational::int(s);
                    a
                })
            })
            .collect();
        Self::from_unit_normals(n, normals).expect("cube is bounded")
    }

    /// The cross-polytope `B_1^n`, built from its vertices.
    pub fn cross_polytope(n: usize) -> Self {
        let points = (0..n)
            .flat_map(|i| {
                [1, -1].into_iter().map(move |s| {
                    let mut a = crate::rational::zeros(n);
                    a[i] = crate::rational::int(s);
                    a
                })
            })
            .collect();
        Self::from_vertices(n, points).expect("cross-polytope has interior")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RVector] {
        &self.vertices
    }

    /// Facet normals `a` with `<a, x> <= 1`.
    pub fn facet_normals(&self) -> &[RVector] {
        &self.normals
    }

    pub fn vrep(&self) -> VPolytope {
        VPolytope {
            dim: self.dim,
            vertices: self.vertices.clone(),
        }
    }

    pub fn hrep(&self) -> HPolytope {
        HPolytope {
            dim: self.dim,
            halfspaces: self
                .normals
                .iter()
                .map(|a| Halfspace {
                    normal: a.clone(),
                    offset: Rational::one(),
                })
                .collect(),
        }
    }

    /// The polar body `{y : <x, y> <= 1 for all x}`.
    pub fn polar(&self) -> Polytope {
        Polytope {
            dim: self.dim,
            vertices: self.normals.clone(),
            normals: self.vertices.clone(),
        }
    }

    /// Minkowski gauge `min{s >= 0 : x in sK}`.
    pub fn gauge(&self, x: &[Rational]) -> Rational {
        self.normals
            .iter()
            .map(|a| dot(a, x))
            .fold(Rational::zero(), |m, v| if v > m { v } else { m })
    }

    pub fn locate(&self, x: &[Rational]) -> Result<Location> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        let g = self.gauge(x);
        Ok(if g < Rational::one() {
            Location::Interior
        } else if g.is_one() {
            Location::Boundary
        } else {
            Location::Outside
        })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.gauge(x) <= Rational::one()
    }

    /// `other` is a subset of `self`.
    pub fn contains_body(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// Image under `x -> (d_1 x_1, ..., d_n x_n)` with every `d_i > 0`.
    pub fn scale_axes(&self, d: &[Rational]) -> Result<Polytope> {
        if d.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: d.len(),
            });
        }
        if d.iter().any(|x| !x.is_positive()) {
            return Err(Error::precondition("diagonal entries must be positive"));
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(d).map(|(x, s)| x * s).collect())
            .collect();
        let normals = self
            .normals
            .iter()
            .map(|a| a.iter().zip(d).map(|(x, s)| x / s).collect())
            .collect();
        Ok(Polytope {
            dim: self.dim,
            vertices: sorted_unique(vertices),
            normals: sorted_unique(normals),
        })
    }

    /// `c K` for `c > 0`.
    pub fn dilate(&self, c: &Rational) -> Result<Polytope> {
        self.scale_axes(&vec![c.clone(); self.dim])
    }

    /// Image under an invertible linear map `t`.
    pub fn linear_image(&self, t: &RMatrix) -> Result<Polytope> {
        if t.nrows() != self.dim || t.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: t.nrows(),
            });
        }
        let transpose = RMatrix::new(
            (0..self.dim)
                .map(|j| (0..self.dim).map(|i| t.get(i, j).clone()).collect())
                .collect(),
        )?;
        let vertices = self
            .vertices
            .iter()
            .map(|v| t.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        let mut normals = Vec::with_capacity(self.normals.len());
        for a in &self.normals {
            match solve_linear(&transpose, a)? {
                Some(b) => normals.push(b),
                None => return Err(Error::precondition("linear map is singular")),
            }
        }
        Ok(Polytope {
            dim: self.dim,
            vertices: sorted_unique(vertices),
            normals: sorted_unique(normals),
        })
    }

    /// Vertex set closed under every coordinate sign flip.
    pub fn is_unconditional(&self) -> bool {
        let set: HashSet<&RVector> = self.vertices.iter().collect();
        self.vertices.iter().all(|v| {
            (0..self.dim).all(|i| {
                if v[i].is_zero() {
                    return true;
                }
                let mut w = v.clone();
                w[i] = -&w[i];
                set.contains(&w)
            })
        })
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        let set: HashSet<&RVector> = self.vertices.iter().collect();
        self.vertices
            .iter()
            .all(|v| set.contains(&v.iter().map(|x| -x).collect::<RVector>()))
    }

    /// `max_{x in K} x_i` for each axis.
    pub fn axis_extents(&self) -> Vec<Rational> {
        (0..self.dim)
            .map(|i| {
                self.vertices
                    .iter()
                    .map(|v| &v[i])
                    .max()
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect()
    }

    /// `B_1^n ⊆ K ⊆ B_inf^n` with every `e_i` on the boundary.
    pub fn is_normalized(&self) -> bool {
        self.axis_extents().iter().all(One::is_one)
            && (0..self.dim).all(|i| {
                let e = crate::rational::unit(self.dim, i);
                self.gauge(&e).is_one()
            })
    }
}

/// Irredundant halfspace description of `conv(v)` (offsets normalized to 1).
pub fn facet_enumeration(v: &VPolytope) -> Result<HPolytope> {
    Ok(Polytope::from_vertices(v.dim, v.vertices.clone())?.hrep())
}

/// Exact extreme points of a bounded halfspace system containing 0 inside.
pub fn vertex_enumeration(h: &HPolytope) -> Result<VPolytope> {
    Ok(Polytope::from_halfspaces(h.dim, &h.halfspaces)?.vrep())
}

pub fn polar(k: &Polytope) -> Polytope {
    k.polar()
}

pub fn membership(x: &[Rational], k: &Polytope) -> Result<Location> {
    k.locate(x)
}

pub fn is_unconditional(k: &Polytope) -> bool {
    k.is_unconditional()
}

/// Section by the coordinate hyperplane `x_j = 0`, re-indexed to dimension
/// `n - 1`.
pub fn coordinate_section(k: &Polytope, j: usize) -> Result<Polytope> {
    let axes: Vec<usize> = (0..k.dim).filter(|&i| i != j).collect();
    coordinate_subspace_section(k, &axes)
}

/// Section by the coordinate subspace spanned by `axes` (sorted, distinct),
/// expressed in those coordinates.
pub fn coordinate_subspace_section(k: &Polytope, axes: &[usize]) -> Result<Polytope> {
    validate_axes(k.dim, axes)?;
    if axes.is_empty() {
        return Err(Error::precondition("section must keep at least one axis"));
    }
    let normals: Vec<RVector> = k
        .normals
        .iter()
        .map(|a| axes.iter().map(|&i| a[i].clone()).collect::<RVector>())
        .filter(|a| a.iter().any(|x| !x.is_zero()))
        .collect();
    Polytope::from_unit_normals(axes.len(), normals)
}

/// Orthogonal projection onto `e_j^perp`, re-indexed to dimension `n - 1`.
pub fn coordinate_projection(k: &Polytope, j: usize) -> Result<Polytope> {
    if j >= k.dim || k.dim < 2 {
        return Err(Error::precondition(format!(
            "cannot project a {}-dimensional body along axis {j}",
            k.dim
        )));
    }
    let points = k
        .vertices
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect();
    Polytope::from_vertices(k.dim - 1, points)
}

fn validate_axes(dim: usize, axes: &[usize]) -> Result<()> {
    if axes.windows(2).any(|w| w[0] >= w[1]) || axes.iter().any(|&i| i >= dim) {
        return Err(Error::precondition(format!(
            "axes {axes:?} are not sorted distinct indices below {dim}"
        )));
    }
    Ok(())
}

fn embed(v: &[Rational], axes: &[usize], n: usize) -> RVector {
    let mut out = crate::rational::zeros(n);
    for (x, &i) in v.iter().zip(axes) {
        out[i] = x.clone();
    }
    out
}

fn check_complementary(a: &Polytope, a_axes: &[usize], b: &Polytope, b_axes: &[usize]) -> Result<usize> {
    if a_axes.len() != a.dim || b_axes.len() != b.dim {
        return Err(Error::InvalidSum(
            "axis lists must match the summand dimensions".into(),
        ));
    }
    let n = a.dim + b.dim;
    let mut seen = vec![false; n];
    for &i in a_axes.iter().chain(b_axes) {
        if i >= n || seen[i] {
            return Err(Error::InvalidSum(format!(
                "coordinate supports {a_axes:?} and {b_axes:?} overlap or leave gaps"
            )));
        }
        seen[i] = true;
    }
    Ok(n)
}

/// ℓ1-sum `conv(A ∪ B)` with `A` placed on `a_axes` and `B` on `b_axes` of
/// `R^{dim A + dim B}`.
pub fn l1_sum_on(a: &Polytope, a_axes: &[usize], b: &Polytope, b_axes: &[usize]) -> Result<Polytope> {
    let n = check_complementary(a, a_axes, b, b_axes)?;
    let points = a
        .vertices
        .iter()
        .map(|v| embed(v, a_axes, n))
        .chain(b.vertices.iter().map(|v| embed(v, b_axes, n)))
        .collect();
    Polytope::from_vertices(n, points)
}

/// ℓ∞-sum `A + B` (Minkowski sum) on complementary axes.
pub fn linf_sum_on(a: &Polytope, a_axes: &[usize], b: &Polytope, b_axes: &[usize]) -> Result<Polytope> {
    let n = check_complementary(a, a_axes, b, b_axes)?;
    let mut points = Vec::with_capacity(a.vertices.len() * b.vertices.len());
    for va in &a.vertices {
        let base = embed(va, a_axes, n);
        for vb in &b.vertices {
            let mut p = base.clone();
            for (x, &i) in vb.iter().zip(b_axes) {
                p[i] = x.clone();
            }
            points.push(p);
        }
    }
    Polytope::from_vertices(n, points)
}

fn split_axes(a: &Polytope, b: &Polytope) -> (Vec<usize>, Vec<usize>) {
    ((0..a.dim).collect(), (a.dim..a.dim + b.dim).collect())
}

/// ℓ1-sum with `A` on the leading coordinates and `B` on the trailing ones.
pub fn l1_sum(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    let (aa, ba) = split_axes(a, b);
    l1_sum_on(a, &aa, b, &ba)
}

/// ℓ∞-sum with `A` on the leading coordinates and `B` on the trailing ones.
pub fn linf_sum(a: &Polytope, b: &Polytope) -> Result<Polytope> {
    let (aa, ba) = split_axes(a, b);
    linf_sum_on(a, &aa, b, &ba)
}

/// Diagonal image with `B_1^n ⊆ DK ⊆ B_inf^n`, touching every facet
/// `|x_i| = 1`.
pub fn normalize_unconditional(k: &Polytope) -> Result<Polytope> {
    if !k.is_unconditional() {
        return Err(Error::NotUnconditional);
    }
    let d: Vec<Rational> = k.axis_extents().iter().map(Rational::recip).collect();
    k.scale_axes(&d)
}
