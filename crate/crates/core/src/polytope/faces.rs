//! Face lattice and exact volume.
//!
//! Faces are vertex-index sets. Volume comes from a pulling triangulation of
//! the boundary: each face is coned from its smallest vertex over the
//! sub-faces missing that vertex, and each boundary simplex is coned to the
//! origin, so `vol = Σ |det(v_1, ..., v_n)| / n!`.

use std::collections::HashMap;
use std::rc::Rc;

use fixedbitset::FixedBitSet;
use num::{BigInt, One, Signed, Zero};

use super::Polytope;
use crate::linalg::{bareiss_det, integer_row};
use crate::rational::{dot, factorial, Rational};

/// A nonempty proper face, identified by the indices of its vertices in
/// [`Polytope::vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

pub(crate) struct Incidence {
    facets: Vec<FixedBitSet>,
}

impl Incidence {
    pub(crate) fn new(k: &Polytope) -> Self {
        let nv = k.vertices().len();
        let facets = k
            .facet_normals()
            .iter()
            .map(|a| {
                let mut set = FixedBitSet::with_capacity(nv);
                for (i, v) in k.vertices().iter().enumerate() {
                    if dot(a, v).is_one() {
                        set.insert(i);
                    }
                }
                set
            })
            .collect();
        Incidence { facets }
    }

    /// Facets of the face `s`: the inclusion-maximal proper nonempty sets
    /// among `s ∩ F` over all facets `F`.
    pub(crate) fn subfaces(&self, s: &FixedBitSet) -> Vec<FixedBitSet> {
        let size = s.count_ones(..);
        let mut candidates: Vec<FixedBitSet> = Vec::new();
        for f in &self.facets {
            let mut c = s.clone();
            c.intersect_with(f);
            let count = c.count_ones(..);
            if count == 0 || count == size || candidates.contains(&c) {
                continue;
            }
            candidates.push(c);
        }
        candidates
            .iter()
            .filter(|c| {
                !candidates
                    .iter()
                    .any(|d| d != *c && c.is_subset(d))
            })
            .cloned()
            .collect()
    }
}

/// All nonempty proper faces, from facets down to vertices.
pub fn face_lattice(k: &Polytope) -> Vec<Face> {
    let inc = Incidence::new(k);
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut layer: Vec<FixedBitSet> = inc.facets.clone();
    let mut out = Vec::new();
    let mut dim = k.dim();
    while dim > 0 {
        dim -= 1;
        let mut next = Vec::new();
        for s in layer {
            if seen.contains_key(&s) {
                continue;
            }
            seen.insert(s.clone(), dim);
            if dim > 0 {
                next.extend(inc.subfaces(&s));
            }
            out.push(Face {
                vertices: s.ones().collect(),
                dim,
            });
        }
        layer = next;
    }
    out
}

struct Triangulator<'a> {
    inc: &'a Incidence,
    memo: HashMap<FixedBitSet, Rc<Vec<Vec<usize>>>>,
}

impl Triangulator<'_> {
    /// Simplices (as vertex index lists of length `dim + 1`) triangulating the
    /// face `s` of dimension `dim`.
    fn triangulate(&mut self, s: &FixedBitSet, dim: usize) -> Rc<Vec<Vec<usize>>> {
        if let Some(t) = self.memo.get(s) {
            return Rc::clone(t);
        }
        let apex = s.minimum().expect("faces are nonempty");
        let result = if dim == 0 {
            vec![vec![apex]]
        } else {
            let mut simplices = Vec::new();
            for t in self.inc.subfaces(s) {
                if t.contains(apex) {
                    continue;
                }
                for sigma in self.triangulate(&t, dim - 1).iter() {
                    let mut simplex = Vec::with_capacity(dim + 1);
                    simplex.push(apex);
                    simplex.extend_from_slice(sigma);
                    simplices.push(simplex);
                }
            }
            simplices
        };
        let rc = Rc::new(result);
        self.memo.insert(s.clone(), Rc::clone(&rc));
        rc
    }
}

/// Exact Lebesgue volume.
pub fn volume(k: &Polytope) -> Rational {
    let n = k.dim();
    let inc = Incidence::new(k);
    let rows: Vec<(Vec<BigInt>, BigInt)> = k.vertices().iter().map(|v| integer_row(v)).collect();
    let integral = rows.iter().all(|(_, s)| s.is_one());

    let mut tri = Triangulator {
        inc: &inc,
        memo: HashMap::new(),
    };
    let mut int_sum = BigInt::zero();
    let mut sum = Rational::zero();
    for facet in &inc.facets {
        for simplex in tri.triangulate(facet, n - 1).iter() {
            let m: Vec<Vec<BigInt>> = simplex.iter().map(|&i| rows[i].0.clone()).collect();
            let d = bareiss_det(m).abs();
            if integral {
                int_sum += d;
            } else {
                let scale = simplex.iter().fold(BigInt::one(), |acc, &i| acc * &rows[i].1);
                sum += Rational::new(d, scale);
            }
        }
    }
    if integral {
        sum = Rational::from_integer(int_sum);
    }
    sum / factorial(n)
}
