//! Volume products and the section, bound-body and constant inequalities
//! that control stability near the cube.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::{coordinate_section, volume, Location, Polytope};
use crate::rational::{self, factorial, int, pow, unit, ExactValue, RVector, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct VolumeProductReport {
    pub id: String,
    pub dim: usize,
    pub vol: Rational,
    pub vol_polar: Rational,
    pub product: Rational,
    pub mahler_bound: Rational,
    pub excess: Rational,
    /// `product >= mahler_bound`.
    pub verdict: bool,
    pub unconditional: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ReportJson<'a> {
    id: &'a str,
    dim: usize,
    vol_k: ExactValue,
    vol_polar: ExactValue,
    product: ExactValue,
    mahler_bound: ExactValue,
    excess: ExactValue,
    verdict: bool,
    unconditional: bool,
}

impl VolumeProductReport {
    pub const CSV_HEADER: [&'static str; 13] = [
        "id", "dim", "vol", "vol_float", "vol_polar", "vol_polar_float", "product", "product_float",
        "mahler_bound", "excess", "excess_float", "verdict", "unconditional",
    ];

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            id: &self.id,
            dim: self.dim,
            vol_k: (&self.vol).into(),
            vol_polar: (&self.vol_polar).into(),
            product: (&self.product).into(),
            mahler_bound: (&self.mahler_bound).into(),
            excess: (&self.excess).into(),
            verdict: self.verdict,
            unconditional: self.unconditional,
        })
        .expect("serializable")
    }

    pub fn csv_record(&self) -> Vec<String> {
        let e = rational::to_exact_string;
        let a = |r: &Rational| rational::to_f64(r).to_string();
        vec![
            self.id.clone(),
            self.dim.to_string(),
            e(&self.vol),
            a(&self.vol),
            e(&self.vol_polar),
            a(&self.vol_polar),
            e(&self.product),
            a(&self.product),
            e(&self.mahler_bound),
            e(&self.excess),
            a(&self.excess),
            self.verdict.to_string(),
            self.unconditional.to_string(),
        ]
    }

    /// Writes reports as CSV with a header row.
    pub fn write_csv<W: std::io::Write>(reports: &[VolumeProductReport], out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let wrap = |e: csv::Error| Error::Parse(format!("csv: {e}"));
        w.write_record(Self::CSV_HEADER).map_err(wrap)?;
        for r in reports {
            w.write_record(r.csv_record()).map_err(wrap)?;
        }
        w.flush().map_err(|source| Error::Io {
            path: "<csv>".into(),
            source,
        })
    }

    /// A shortfall by an unconditional body would contradict the known
    /// lower bound for that class.
    pub fn is_falsification(&self) -> bool {
        self.unconditional && !self.verdict
    }
}

/// `|K| |K°|` compared to the cube's value in the same dimension.
pub fn volume_product(k: &Polytope, id: &str) -> VolumeProductReport {
    let vol = volume(k);
    let vol_polar = volume(&k.polar());
    let product = &vol * &vol_polar;
    let mahler_bound = mahler_bound(k.dim());
    let excess = &product - &mahler_bound;
    VolumeProductReport {
        id: id.to_string(),
        dim: k.dim(),
        verdict: !excess.is_negative(),
        unconditional: k.is_unconditional(),
        vol,
        vol_polar,
        product,
        mahler_bound,
        excess,
    }
}

/// Just the product `|K| |K°|`.
pub fn product(k: &Polytope) -> Rational {
    volume(k) * volume(&k.polar())
}

/// Volume product of the cube `B_inf^n`, computed from its two volumes.
pub fn mahler_bound(n: usize) -> Rational {
    product(&Polytope::cube(n))
}

/// Volume of `conv(points)` for any full-dimensional point set: the hull is
/// translated so that the vertex mean sits at the origin.
pub fn hull_volume(dim: usize, points: &[RVector]) -> Result<Rational> {
    if points.is_empty() {
        return Err(Error::Degenerate { rank: 0, dim });
    }
    let count = Rational::from_integer(points.len().into());
    let mut mean = rational::zeros(dim);
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        mean = rational::add(&mean, p);
    }
    let mean: RVector = mean.iter().map(|x| x / &count).collect();
    let shifted = points.iter().map(|p| rational::sub(p, &mean)).collect();
    Ok(volume(&Polytope::from_vertices(dim, shifted)?))
}

fn require_unconditional(k: &Polytope) -> Result<()> {
    if k.is_unconditional() {
        Ok(())
    } else {
        Err(Error::NotUnconditional)
    }
}

fn require_dim_at_least(k: &Polytope, n: usize) -> Result<()> {
    if k.dim() < n {
        return Err(Error::precondition(format!(
            "needs dimension at least {n}, got {}",
            k.dim()
        )));
    }
    Ok(())
}

/// `(n-1)`-volume of `K ∩ e_j^⊥`; a point has volume 1 when `n = 1`.
fn section_volume(k: &Polytope, j: usize) -> Result<Rational> {
    if k.dim() == 1 {
        return Ok(Rational::one());
    }
    Ok(volume(&coordinate_section(k, j)?))
}

/// The vector with coordinates `2 |K ∩ e_i^⊥| / (n |K|)`, which lies in the
/// polar of an unconditional body. Membership is verified; a miss is
/// reported as [`Error::Falsified`].
pub fn section_membership_vector(k: &Polytope) -> Result<RVector> {
    require_unconditional(k)?;
    let n = k.dim();
    let denom = Rational::from_integer(n.into()) * volume(k);
    let v: RVector = (0..n)
        .map(|i| Ok(int(2) * section_volume(k, i)? / &denom))
        .collect::<Result<_>>()?;
    if k.polar().locate(&v)? == Location::Outside {
        return Err(Error::Falsified(format!(
            "section vector {} lies outside the polar body",
            fmt_vec(&v)
        )));
    }
    Ok(v)
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(rational::to_exact_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeyerReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub section_products: Vec<Rational>,
    /// `lhs >= rhs`.
    pub holds: bool,
    pub equality: bool,
}

/// `P(K) >= (4/n^2) Σ_j P(K ∩ e_j^⊥)` for unconditional `K`, `n >= 2`.
pub fn meyer_inequality_check(k: &Polytope) -> Result<MeyerReport> {
    require_unconditional(k)?;
    require_dim_at_least(k, 2)?;
    let n = k.dim();
    let lhs = product(k);
    let section_products: Vec<Rational> = (0..n)
        .map(|j| Ok(product(&coordinate_section(k, j)?)))
        .collect::<Result<_>>()?;
    let sum: Rational = section_products.iter().sum();
    let rhs = Rational::new(4.into(), (n * n).into()) * sum;
    Ok(MeyerReport {
        holds: lhs >= rhs,
        equality: lhs == rhs,
        lhs,
        rhs,
        section_products,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Lemma1Outcome {
    /// `P(K) > (1 + eps) P(B_inf^n)`: the check does not apply.
    HypothesisViolated { product: Rational, allowed: Rational },
    /// Margins `(1 + n eps) P(B_inf^{n-1}) - P(K ∩ e_j^⊥)`; a negative
    /// margin contradicts the section inequality.
    Checked { margins: Vec<Rational>, holds: bool },
}

impl Lemma1Outcome {
    pub fn conclusion_violated(&self) -> bool {
        matches!(self, Lemma1Outcome::Checked { holds: false, .. })
    }
}

/// If `P(K) <= (1 + eps) P(B_inf^n)` then every coordinate section satisfies
/// `P(K ∩ e_j^⊥) <= (1 + n eps) P(B_inf^{n-1})`.
pub fn lemma1_conclusion_check(k: &Polytope, eps: &Rational) -> Result<Lemma1Outcome> {
    require_unconditional(k)?;
    require_dim_at_least(k, 2)?;
    if eps.is_negative() {
        return Err(Error::precondition("eps must be nonnegative"));
    }
    let n = k.dim();
    let p = product(k);
    let allowed = (Rational::one() + eps) * mahler_bound(n);
    if p > allowed {
        return Ok(Lemma1Outcome::HypothesisViolated { product: p, allowed });
    }
    let cap = (Rational::one() + Rational::from_integer(n.into()) * eps) * mahler_bound(n - 1);
    let margins: Vec<Rational> = (0..n)
        .map(|j| Ok(&cap - product(&coordinate_section(k, j)?)))
        .collect::<Result<_>>()?;
    let holds = margins.iter().all(|m| !m.is_negative());
    Ok(Lemma1Outcome::Checked { margins, holds })
}

/// The least `eps >= 0` with `P(K) <= (1 + eps) P(B_inf^n)`.
pub fn measured_eps(k: &Polytope) -> Rational {
    let e = product(k) / mahler_bound(k.dim()) - Rational::one();
    if e.is_negative() {
        Rational::zero()
    } else {
        e
    }
}

fn check_t(n: usize, t: &Rational) -> Result<()> {
    if n < 2 {
        return Err(Error::precondition("dimension must be at least 2"));
    }
    let lo = Rational::new((n - 1).into(), n.into());
    if *t < lo || *t > Rational::one() {
        return Err(Error::precondition(format!(
            "t = {t} outside [{lo}, 1]"
        )));
    }
    Ok(())
}

/// `B_inf^n ∩ {Σ|x_i| <= n t}` for `(n-1)/n <= t <= 1`.
pub fn truncated_cube(n: usize, t: &Rational) -> Result<Polytope> {
    check_t(n, t)?;
    let nt = Rational::from_integer(n.into()) * t;
    let mut normals: Vec<RVector> = Polytope::cube(n).facet_normals().to_vec();
    for signs in 0u32..1 << n {
        normals.push(
            (0..n)
                .map(|i| if signs >> i & 1 == 1 { -nt.recip() } else { nt.recip() })
                .collect(),
        );
    }
    Polytope::from_unit_normals(n, normals)
}

/// Data of the bound-body construction: `p = (t, ..., t)` on the boundary
/// of the body and `q > 0` with `Σ q_i = 1/t`, so `<p, q> = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma2Instance {
    pub n: usize,
    pub t: Rational,
    pub p: RVector,
    pub q: RVector,
    /// `1 - 1/(n-1)!`.
    pub c_n: Rational,
}

impl Lemma2Instance {
    /// `q` defaults to `(1/(nt), ..., 1/(nt))`.
    pub fn new(n: usize, t: Rational, q: Option<RVector>) -> Result<Self> {
        check_t(n, &t)?;
        let q = match q {
            None => vec![(Rational::from_integer(n.into()) * &t).recip(); n],
            Some(q) => {
                if q.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: q.len(),
                    });
                }
                if q.iter().any(|x| !x.is_positive()) || q.iter().sum::<Rational>() != t.recip() {
                    return Err(Error::precondition(
                        "q must be positive with coordinates summing to 1/t",
                    ));
                }
                q
            }
        };
        Ok(Lemma2Instance {
            p: vec![t.clone(); n],
            c_n: Rational::one() - factorial(n - 1).recip(),
            n,
            t,
            q,
        })
    }

    /// `|P| = 1 - (1 - t)/(n-1)!`.
    pub fn vol_p_formula(&self) -> Rational {
        Rational::one() - (Rational::one() - &self.t) / factorial(self.n - 1)
    }

    /// `|Q| = 1/(n! t)`.
    pub fn vol_q_formula(&self) -> Rational {
        (factorial(self.n) * &self.t).recip()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma2Bodies {
    /// Vertex lists of `P` and `Q` (neither contains 0 in its interior).
    pub p_points: Vec<RVector>,
    pub q_points: Vec<RVector>,
    pub vol_p: Rational,
    pub vol_q: Rational,
    pub formulas_match: bool,
}

/// `P = conv({p} ∪ {0/1 vectors with at most n-1 ones})` and
/// `Q = conv({q, 0, e_1, ..., e_n})`, with volumes from the general routine
/// compared to the closed forms.
pub fn lemma2_build_pq(inst: &Lemma2Instance) -> Result<Lemma2Bodies> {
    let n = inst.n;
    let mut p_points: Vec<RVector> = (0u32..(1 << n) - 1)
        .map(|mask| {
            (0..n)
                .map(|i| Rational::from_integer((mask >> i & 1).into()))
                .collect()
        })
        .collect();
    p_points.push(inst.p.clone());
    let mut q_points: Vec<RVector> = vec![rational::zeros(n), inst.q.clone()];
    q_points.extend((0..n).map(|i| unit(n, i)));
    let vol_p = hull_volume(n, &p_points)?;
    let vol_q = hull_volume(n, &q_points)?;
    Ok(Lemma2Bodies {
        formulas_match: vol_p == inst.vol_p_formula() && vol_q == inst.vol_q_formula(),
        p_points,
        q_points,
        vol_p,
        vol_q,
    })
}

/// `1 + 2^{-n-1} (1 - 1/(n-1)!) (1 - t)`, for `n >= 3`.
pub fn lemma2_lower_bound(n: usize, t: &Rational) -> Result<Rational> {
    if n < 3 {
        return Err(Error::precondition("the bound-body factor needs n >= 3"));
    }
    check_t(n, t)?;
    let c_n = Rational::one() - factorial(n - 1).recip();
    Ok(Rational::one() + pow(&int(2), -(n as i32) - 1) * c_n * (Rational::one() - t))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma2Check {
    pub n: usize,
    pub t: Rational,
    pub product: Rational,
    /// `4^n |P| |Q|`, the symmetric-quadrant Cauchy–Schwarz value.
    pub quadrant_bound: Rational,
    pub factor: Rational,
    /// `factor · |B_1^n| |B_inf^n|`.
    pub bound: Rational,
    pub formulas_match: bool,
    /// `product >= quadrant_bound >= bound`.
    pub holds: bool,
    pub strict: bool,
}

/// Runs the bound-body chain on the truncated cube with parameter `t`:
/// `|K||K°| >= 4^n |P||Q| >= factor · 4^n/n!`.
pub fn lemma2_truncated_cube_check(n: usize, t: &Rational) -> Result<Lemma2Check> {
    let factor = lemma2_lower_bound(n, t)?;
    let k = truncated_cube(n, t)?;
    let product = product(&k);
    let inst = Lemma2Instance::new(n, t.clone(), None)?;
    let bodies = lemma2_build_pq(&inst)?;
    let quadrant_bound = pow(&int(4), n as i32) * &bodies.vol_p * &bodies.vol_q;
    let bound = &factor * mahler_bound(n);
    Ok(Lemma2Check {
        n,
        t: t.clone(),
        holds: product >= quadrant_bound && quadrant_bound >= bound,
        strict: product > bound,
        formulas_match: bodies.formulas_match,
        product,
        quadrant_bound,
        factor,
        bound,
    })
}

/// `eps = min{γ/3, βγ/(12n), 1/(2n)}` and `tau = min{α, n}`.
pub fn combine_stability_constants(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    n: usize,
) -> Result<(Rational, Rational)> {
    if !(alpha.is_positive() && beta.is_positive() && gamma.is_positive()) || n == 0 {
        return Err(Error::precondition("constants and dimension must be positive"));
    }
    let nn = Rational::from_integer(n.into());
    let candidates = [
        gamma / int(3),
        beta * gamma / (int(12) * &nn),
        (int(2) * &nn).recip(),
    ];
    let eps = candidates.into_iter().min().expect("nonempty");
    let tau = rational::min(alpha, &nn).clone();
    Ok((eps, tau))
}

/// Euclidean unit-ball volume, `v_n = v_{n-2} · 2π/n`.
pub fn ball_volume_f64(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => ball_volume_f64(n - 2) * 2.0 * std::f64::consts::PI / n as f64,
    }
}

/// Floating sanity check of the upper bound `P(K) <= P(B_2^n)`, with a
/// relative slack of `1e-9` for rounding.
pub fn santalo_sanity(product: &Rational, n: usize) -> bool {
    let ball = ball_volume_f64(n);
    rational::to_f64(product) <= ball * ball * (1.0 + 1e-9)
}
