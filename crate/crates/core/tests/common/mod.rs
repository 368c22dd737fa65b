//! Independent brute-force oracles. Nothing here calls the library's linear
//! algebra, conversion or volume code.
#![allow(dead_code)]

use mahler_core::{Graph, Polytope, RVector, Rational};
use num::{One, Signed, Zero};

pub fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Rational::zero();
    for (c, head) in m[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = head * cofactor_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Cramer's rule; `None` when singular.
pub fn cramer(m: &[Vec<Rational>], b: &[Rational]) -> Option<RVector> {
    let d = cofactor_det(m);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..m.len())
            .map(|c| {
                let replaced: Vec<Vec<Rational>> = m
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| {
                        let mut row = row.clone();
                        row[c] = bi.clone();
                        row
                    })
                    .collect();
                cofactor_det(&replaced) / &d
            })
            .collect(),
    )
}

/// Row rank by plain fraction Gaussian elimination.
pub fn rank(rows: &[RVector]) -> usize {
    let mut m: Vec<RVector> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Vertices of `{x : <a_i, x> <= b_i}` by solving every `n`-subset of tight
/// constraints and keeping the feasible solutions.
pub fn brute_vertices(n: usize, cons: &[(RVector, Rational)]) -> Vec<RVector> {
    let mut out: Vec<RVector> = Vec::new();
    for s in subsets(cons.len(), n) {
        let m: Vec<RVector> = s.iter().map(|&i| cons[i].0.clone()).collect();
        let b: RVector = s.iter().map(|&i| cons[i].1.clone()).collect();
        if let Some(x) = cramer(&m, &b) {
            if cons.iter().all(|(a, bi)| dot(a, &x) <= *bi) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

/// Facet normals `a` (with `<a, x> <= 1`) of the hull of points containing 0
/// in its interior: hyperplanes through `n`-subsets of the points with every
/// point on the inner side.
pub fn brute_facets(n: usize, points: &[RVector]) -> Vec<RVector> {
    let ones = vec![Rational::one(); n];
    let mut out: Vec<RVector> = Vec::new();
    for s in subsets(points.len(), n) {
        let m: Vec<RVector> = s.iter().map(|&i| points[i].clone()).collect();
        if let Some(a) = cramer(&m, &ones) {
            if points.iter().all(|p| dot(&a, p) <= Rational::one()) && !out.contains(&a) {
                out.push(a);
            }
        }
    }
    out.sort();
    out
}

fn affine_dim(points: &[&RVector]) -> usize {
    let diffs: Vec<RVector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(points[0]).map(|(x, y)| x - y).collect())
        .collect();
    if diffs.is_empty() {
        0
    } else {
        rank(&diffs)
    }
}

/// Volume of `{x : <a_i, x> <= b_i}` when the origin lies in the polytope
/// (possibly on its boundary): cone over the facets missing the origin, with
/// each facet split by its barycentric subdivision.
fn volume_with_origin(n: usize, cons: &[(RVector, Rational)]) -> Rational {
    let verts = brute_vertices(n, cons);
    if verts.len() <= n {
        return Rational::zero();
    }
    let tight = |c: &(RVector, Rational)| -> Vec<usize> {
        (0..verts.len()).filter(|&i| dot(&c.0, &verts[i]) == c.1).collect()
    };
    let dim_of = |s: &[usize]| affine_dim(&s.iter().map(|&i| &verts[i]).collect::<Vec<_>>());
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut facets: Vec<(Vec<usize>, bool)> = Vec::new();
    for c in cons {
        let s = tight(c);
        if !s.is_empty() && dim_of(&s) == n - 1 && !facets.iter().any(|(f, _)| *f == s) {
            facets.push((s.clone(), c.1.is_zero()));
            faces.push(s);
        }
    }
    // close under intersection
    let mut i = 0;
    while i < faces.len() {
        for j in 0..i {
            let s: Vec<usize> = faces[i].iter().filter(|x| faces[j].contains(x)).copied().collect();
            if !s.is_empty() && !faces.contains(&s) {
                faces.push(s);
            }
        }
        i += 1;
    }
    let centroid = |s: &[usize]| -> RVector {
        let k = Rational::from_integer((s.len() as i64).into());
        (0..n).map(|c| s.iter().map(|&v| verts[v][c].clone()).sum::<Rational>() / &k).collect()
    };
    let dims: Vec<usize> = faces.iter().map(|f| dim_of(f)).collect();
    let nfact: Rational = (1..=n as i64).map(|k| Rational::from_integer(k.into())).product();

    fn flags(
        faces: &[Vec<usize>],
        dims: &[usize],
        chain: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let cur = *chain.last().expect("nonempty chain");
        if dims[cur] == 0 {
            out.push(chain.clone());
            return;
        }
        for (k, f) in faces.iter().enumerate() {
            if dims[k] + 1 == dims[cur] && f.iter().all(|x| faces[cur].contains(x)) {
                chain.push(k);
                flags(faces, dims, chain, out);
                chain.pop();
            }
        }
    }

    let mut total = Rational::zero();
    for (fi, (_, through_origin)) in facets.iter().enumerate() {
        if *through_origin {
            continue;
        }
        let mut chains = Vec::new();
        flags(&faces, &dims, &mut vec![fi], &mut chains);
        for chain in chains {
            let m: Vec<RVector> = chain.iter().map(|&k| centroid(&faces[k])).collect();
            total += cofactor_det(&m).abs() / &nfact;
        }
    }
    total
}

/// Volume as the sum over the `2^n` closed orthants of the volume of each
/// piece, every piece computed from scratch.
pub fn orthant_volume(k: &Polytope) -> Rational {
    let n = k.dim();
    let mut total = Rational::zero();
    for signs in 0u32..1 << n {
        // bit i set selects x_i <= 0
        let sign = |i: usize, x: &Rational| if signs >> i & 1 == 1 { -x } else { x.clone() };
        // inside the orthant, <a,x> <= <b,x> whenever b dominates a coordinatewise
        // after the sign change, so dominated constraints are redundant there
        let normals = k.facet_normals();
        let dominated = |a: &RVector| {
            normals.iter().any(|b| b != a && (0..n).all(|i| sign(i, &b[i]) >= sign(i, &a[i])))
        };
        let mut cons: Vec<(RVector, Rational)> = normals
            .iter()
            .filter(|a| !dominated(a))
            .map(|a| (a.clone(), Rational::one()))
            .collect();
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = if signs >> i & 1 == 1 { Rational::one() } else { -Rational::one() };
            cons.push((e, Rational::zero()));
        }
        total += volume_with_origin(n, &cons);
    }
    total
}

/// Squared distance from `x` to `{y : <a_i, y> <= 1}` by projecting onto every
/// active set of at most `n` constraints and keeping feasible feet.
pub fn brute_point_distance_sq(x: &[Rational], normals: &[RVector]) -> Rational {
    let n = x.len();
    if normals.iter().all(|a| dot(a, x) <= Rational::one()) {
        return Rational::zero();
    }
    let mut best: Option<Rational> = None;
    for size in 1..=n {
        for s in subsets(normals.len(), size) {
            let rows: Vec<&RVector> = s.iter().map(|&i| &normals[i]).collect();
            let gram: Vec<RVector> = rows.iter().map(|u| rows.iter().map(|w| dot(u, w)).collect()).collect();
            let rhs: RVector = rows.iter().map(|a| dot(a, x) - Rational::one()).collect();
            let Some(lambda) = cramer(&gram, &rhs) else { continue };
            let mut y = x.to_vec();
            for (l, a) in lambda.iter().zip(&rows) {
                for (yi, ai) in y.iter_mut().zip(a.iter()) {
                    *yi -= l * ai;
                }
            }
            if normals.iter().all(|a| dot(a, &y) <= Rational::one()) {
                let d: Rational = x.iter().zip(&y).map(|(p, q)| (p - q) * (p - q)).sum();
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
    }
    best.expect("a feasible projection exists")
}

pub fn brute_hausdorff_sq(a: &Polytope, b: &Polytope) -> Rational {
    let side = |from: &Polytope, to: &Polytope| {
        from.vertices()
            .iter()
            .map(|v| brute_point_distance_sq(v, to.facet_normals()))
            .max()
            .unwrap_or_else(Rational::zero)
    };
    let (x, y) = (side(a, b), side(b, a));
    if x > y {
        x
    } else {
        y
    }
}

/// Induced P4 test by trying every ordering of every 4-subset.
pub fn has_p4_by_orderings(g: &Graph) -> bool {
    let n = g.n();
    let perms: Vec<[usize; 4]> = {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        if (0..4).all(|i| p.iter().filter(|&&x| x == i).count() == 1) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    };
    subsets(n, 4).iter().any(|s| {
        perms.iter().any(|p| {
            let [a, b, c, d] = p.map(|i| s[i]);
            g.has_edge(a, b)
                && g.has_edge(b, c)
                && g.has_edge(c, d)
                && !g.has_edge(a, c)
                && !g.has_edge(a, d)
                && !g.has_edge(b, d)
        })
    })
}

/// Maximal independent sets by checking every vertex subset.
pub fn brute_mis(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let independent = |m: u32| (0..n).all(|i| (0..n).all(|j| m >> i & 1 == 0 || m >> j & 1 == 0 || !g.has_edge(i, j)));
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|&m| independent(m) && (0..n).all(|v| m >> v & 1 == 1 || !independent(m | 1 << v)))
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Gauge from facet normals.
pub fn gauge(normals: &[RVector], x: &[Rational]) -> Rational {
    normals.iter().map(|a| dot(a, x)).max().unwrap_or_else(Rational::zero)
}

/// Best sandwich factor over diagonal maps `diag(t_1, ..., t_n)` with every
/// `t_i` on the grid `{k/den : 1 <= k <= max}`.
pub fn diagonal_grid_search(a: &Polytope, b: &Polytope, den: i64, max: i64) -> Rational {
    let n = a.dim();
    let mut best: Option<Rational> = None;
    let grid: Vec<Rational> = (1..=max).map(|k| r(k, den)).collect();
    let mut idx = vec![0usize; n];
    loop {
        let t: Vec<Rational> = idx.iter().map(|&i| grid[i].clone()).collect();
        let outer = a
            .vertices()
            .iter()
            .map(|v| gauge(b.facet_normals(), &v.iter().zip(&t).map(|(x, s)| x * s).collect::<Vec<_>>()))
            .max()
            .unwrap();
        let inner = b
            .vertices()
            .iter()
            .map(|w| gauge(a.facet_normals(), &w.iter().zip(&t).map(|(x, s)| x / s).collect::<Vec<_>>()))
            .max()
            .unwrap();
        let d = outer * inner;
        if best.as_ref().is_none_or(|x| d < *x) {
            best = Some(d);
        }
        let Some(i) = idx.iter().position(|&k| k + 1 < grid.len()) else { break };
        idx[i] += 1;
        idx[..i].iter_mut().for_each(|k| *k = 0);
    }
    best.unwrap()
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(|k| Rational::from_integer(k.into())).product()
}

pub fn pow_int(b: i64, e: usize) -> Rational {
    (0..e).map(|_| Rational::from_integer(b.into())).product()
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}
