//! Reconstruction of a nearby Hanner polytope from coordinate sections, and
//! seeded perturbation experiments around Hanner polytopes.
//!
//! The reconstruction classifies every coordinate pair by the gauge of
//! `e_i + e_j` in the normalized 2-dimensional section, glues the section
//! graphs upward over all coordinate subsets, and then distinguishes the
//! cube/cross case, the 4-dimensional path case and the generic case.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hanner::{enumerate_standard_hanner, polytope_from_graph};
use crate::polytope::{
    coordinate_section, coordinate_subspace_section, hausdorff_distance_sq, normalize_unconditional,
    Location, Polytope,
};
use crate::rational::{self, int, rat, ExactValue, RVector, Rational};
use crate::volume_product::{lemma2_lower_bound, mahler_bound, product};

/// Denominator of the random dyadic factors used by the generators.
const GRID: i64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseTag {
    #[serde(rename = "generic")]
    Generic,
    #[serde(rename = "caseI-cube")]
    CaseICube,
    #[serde(rename = "caseI-cross")]
    CaseICross,
    #[serde(rename = "caseII-path")]
    CaseIIPath,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Generic => "generic",
            CaseTag::CaseICube => "caseI-cube",
            CaseTag::CaseICross => "caseI-cross",
            CaseTag::CaseIIPath => "caseII-path",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReconstructOptions {
    /// Half-width of the undecided band around the midpoint `3/2` between
    /// the square (gauge 1) and the diamond (gauge 2): with `g` the gauge of
    /// `e_i + e_j`, the pair is an edge if `2g/3 > 1 + band` and a non-edge if
    /// `2g/3 < 1 - band`.
    pub band: Rational,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions { band: rat(1, 10) }
    }
}

/// Cube-case refinement data, computed on the normalized body (or on its
/// polar in the cross case).
#[derive(Clone, Debug, PartialEq)]
pub struct CaseIDiagnostics {
    /// Least `δ` with `(1 - δ) B_inf^{n-1} ⊆ K ∩ e_j^⊥` for every `j`.
    pub delta_tilde: Rational,
    /// Diagonal boundary parameter of `((1 - δ)^{-1} K) ∩ B_inf^n`.
    pub t: Rational,
    pub hypotheses_hold: bool,
    pub lemma2_factor: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilityRecord {
    pub body_id: String,
    pub nearest_graph: Graph,
    pub glued_graph: Graph,
    pub glued_p4_free: bool,
    /// Squared Hausdorff distance from the normalized body to the candidate.
    pub distance_sq: Rational,
    /// `P(K) - 4^n/n!`.
    pub excess: Rational,
    pub case_tag: CaseTag,
    pub seed: u64,
    pub case_i: Option<CaseIDiagnostics>,
}

impl StabilityRecord {
    pub fn to_json(&self) -> serde_json::Value {
        let case_i = self.case_i.as_ref().map(|d| {
            serde_json::json!({
                "deltaTilde": ExactValue::from(&d.delta_tilde),
                "t": ExactValue::from(&d.t),
                "hypothesesHold": d.hypotheses_hold,
                "lemma2Factor": d.lemma2_factor.as_ref().map(ExactValue::from),
            })
        });
        serde_json::json!({
            "bodyId": self.body_id,
            "nearestHannerGraph": self.nearest_graph.to_json(),
            "gluedGraph": self.glued_graph.to_json(),
            "gluedP4Free": self.glued_p4_free,
            "distanceSq": ExactValue::from(&self.distance_sq),
            "productExcess": ExactValue::from(&self.excess),
            "caseTag": self.case_tag,
            "seed": self.seed,
            "caseI": case_i,
        })
    }
}

/// Unites section graphs: `sections[j]` lives on the vertices other than `j`,
/// re-indexed in increasing order. Edge statuses must agree wherever two
/// sections both see a pair; each section is then the induced subgraph of
/// the result on its vertices.
pub fn glue_graphs(sections: &[Graph]) -> Result<Graph> {
    let n = sections.len();
    if n < 2 {
        return Err(Error::precondition("gluing needs at least two sections"));
    }
    if let Some((j, g)) = sections.iter().enumerate().find(|(_, g)| g.n() != n - 1) {
        return Err(Error::InconsistentSections(format!(
            "section {} has {} vertices, expected {}",
            j + 1,
            g.n(),
            n - 1
        )));
    }
    let local = |v: usize, j: usize| if v < j { v } else { v - 1 };
    let mut glued = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            let mut status: Option<(usize, bool)> = None;
            for j in (0..n).filter(|&j| j != a && j != b) {
                let e = sections[j].has_edge(local(a, j), local(b, j));
                match status {
                    None => status = Some((j, e)),
                    Some((j0, e0)) if e0 != e => {
                        return Err(Error::InconsistentSections(format!(
                            "pair {{{}, {}}} is an edge in section {} but not in section {}",
                            a + 1,
                            b + 1,
                            if e0 { j0 + 1 } else { j + 1 },
                            if e0 { j + 1 } else { j0 + 1 },
                        )));
                    }
                    _ => {}
                }
            }
            if let Some((_, true)) = status {
                glued.add_edge(a, b);
            }
        }
    }
    for (j, g) in sections.iter().enumerate() {
        if glued.without_vertex(j) != *g {
            return Err(Error::InconsistentSections(format!(
                "section {} is not an induced subgraph of the glued graph",
                j + 1
            )));
        }
    }
    Ok(glued)
}

/// Edge status of the pair `(a, b)` from the 2-dimensional section of a
/// normalized body.
fn classify_pair(k: &Polytope, a: usize, b: usize, band: &Rational) -> Result<bool> {
    let section = coordinate_subspace_section(k, &[a, b])?;
    let g = section.gauge(&[int(1), int(1)]);
    let x = &g * rat(2, 3);
    if x > Rational::one() + band {
        Ok(true)
    } else if x < Rational::one() - band {
        Ok(false)
    } else {
        Err(Error::AmbiguousSection {
            i: a + 1,
            j: b + 1,
            gauge: rational::to_exact_string(&g),
        })
    }
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Section graphs over every coordinate subset of size at least 2, glued
/// bottom-up; returns the graph on all coordinates.
fn glued_section_graph(k: &Polytope, band: &Rational) -> Result<Graph> {
    let n = k.dim();
    if n == 1 {
        return Ok(Graph::empty(1));
    }
    let mut memo: HashMap<u32, Graph> = HashMap::new();
    let mut masks: Vec<u32> = (0u32..1 << n).filter(|m| m.count_ones() >= 2).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let verts = mask_vertices(mask);
        let g = if verts.len() == 2 {
            let mut g = Graph::empty(2);
            if classify_pair(k, verts[0], verts[1], band)? {
                g.add_edge(0, 1);
            }
            g
        } else {
            let sections: Vec<Graph> = verts.iter().map(|&v| memo[&(mask & !(1 << v))].clone()).collect();
            glue_graphs(&sections)?
        };
        memo.insert(mask, g);
    }
    Ok(memo.remove(&((1u32 << n) - 1)).expect("full mask computed"))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalPoint {
    pub t: Rational,
    /// Every coordinate section is the full cube `B_inf^{n-1}` and
    /// `t >= (n-1)/n`.
    pub hypotheses_hold: bool,
}

/// The `t` with `(t, ..., t)` on the boundary of a normalized unconditional
/// body, together with a check of the cube-section hypotheses.
pub fn diagonal_boundary_point(k: &Polytope) -> Result<DiagonalPoint> {
    if !k.is_unconditional() {
        return Err(Error::NotUnconditional);
    }
    if !k.is_normalized() {
        return Err(Error::NotNormalized("every e_i must lie on the boundary".into()));
    }
    let n = k.dim();
    let t = k.gauge(&vec![int(1); n]).recip();
    let mut hypotheses_hold = t >= rat(n as i64 - 1, n as i64);
    if n >= 2 {
        let cube = Polytope::cube(n - 1);
        for j in 0..n {
            if coordinate_section(k, j)? != cube {
                hypotheses_hold = false;
            }
        }
    }
    Ok(DiagonalPoint { t, hypotheses_hold })
}

fn case_i_diagnostics(k: &Polytope) -> Result<CaseIDiagnostics> {
    let n = k.dim();
    // largest s with s·B_inf^{n-1} inside every coordinate section
    let s = (0..n)
        .map(|j| {
            let mut w = vec![int(1); n];
            w[j] = int(0);
            k.gauge(&w).recip()
        })
        .min()
        .expect("n >= 2");
    let mut normals: Vec<RVector> = k.facet_normals().iter().map(|a| rational::scale(a, &s)).collect();
    normals.extend(Polytope::cube(n).facet_normals().iter().cloned());
    let refined = Polytope::from_unit_normals(n, normals)?;
    let point = diagonal_boundary_point(&refined)?;
    let lemma2_factor = if n >= 3 && point.hypotheses_hold {
        Some(lemma2_lower_bound(n, &point.t)?)
    } else {
        None
    };
    Ok(CaseIDiagnostics {
        delta_tilde: Rational::one() - s,
        t: point.t,
        hypotheses_hold: point.hypotheses_hold,
        lemma2_factor,
    })
}

/// Reconstructs a nearby standard Hanner polytope of an unconditional body.
pub fn reconstruct_hanner(
    k: &Polytope,
    body_id: &str,
    seed: u64,
    opts: &ReconstructOptions,
) -> Result<StabilityRecord> {
    if !k.is_unconditional() {
        return Err(Error::NotUnconditional);
    }
    let kn = normalize_unconditional(k)?;
    let n = kn.dim();
    let glued = glued_section_graph(&kn, &opts.band)?;

    let (case_tag, candidate, case_i) = if glued.is_empty_graph() {
        let diag = (n >= 2).then(|| case_i_diagnostics(&kn)).transpose()?;
        (CaseTag::CaseICube, Polytope::cube(n), diag)
    } else if glued.is_complete() {
        let dual = normalize_unconditional(&kn.polar())?;
        let diag = Some(case_i_diagnostics(&dual)?);
        (CaseTag::CaseICross, Polytope::cross_polytope(n), diag)
    } else if glued.is_p4_path() {
        (CaseTag::CaseIIPath, polytope_from_graph(&glued)?, None)
    } else {
        (CaseTag::Generic, polytope_from_graph(&glued)?, None)
    };

    Ok(StabilityRecord {
        body_id: body_id.to_string(),
        glued_p4_free: glued.is_p4_free(),
        nearest_graph: glued.clone(),
        glued_graph: glued,
        distance_sq: hausdorff_distance_sq(&kn, &candidate)?,
        excess: product(k) - mahler_bound(n),
        case_tag,
        seed,
        case_i,
    })
}

/// Metric minimizer over all labeled standard Hanner polytopes, for
/// `n <= 4`; a cross-check for [`reconstruct_hanner`].
pub fn nearest_hanner_brute_force(k: &Polytope) -> Result<(Graph, Rational)> {
    if k.dim() > 4 {
        return Err(Error::Resource("brute-force nearest Hanner is limited to n <= 4".into()));
    }
    let kn = normalize_unconditional(k)?;
    let mut best: Option<(Graph, Rational)> = None;
    for entry in enumerate_standard_hanner(kn.dim(), false)? {
        let d = hausdorff_distance_sq(&kn, &entry.polytope)?;
        if best.as_ref().is_none_or(|(_, b)| d < *b) {
            best = Some((entry.graph, d));
        }
    }
    Ok(best.expect("at least one Hanner polytope"))
}

fn sign_images(p: &[Rational]) -> Vec<RVector> {
    let support: Vec<usize> = (0..p.len()).filter(|&i| !p[i].is_zero()).collect();
    (0u32..1 << support.len())
        .map(|signs| {
            let mut v = p.to_vec();
            for (k, &i) in support.iter().enumerate() {
                if signs >> k & 1 == 1 {
                    v[i] = -&v[i];
                }
            }
            v
        })
        .collect()
}

fn random_factor(rng: &mut ChaCha8Rng, delta: &Rational) -> Rational {
    let u = rat(rng.random_range(0..=GRID), GRID);
    Rational::one() - delta * u
}

/// Randomly shrinks an unconditional body toward the origin, one
/// nonnegative representative at a time, and re-normalizes.
///
/// The representatives are the nonnegative vertices together with the
/// nonnegative boundary points of `{0, 1/2, 1}^n`; each is scaled by a
/// factor in `[1 - delta, 1]` and replicated by sign flips, so the result is
/// unconditional by construction. Boundary grid points matter for bodies
/// such as the cube and cross-polytope, whose vertex-only rescalings are
/// diagonal images of themselves.
///
/// Before normalization `(1 - delta) h ⊆ K ⊆ h`, so afterwards
/// `d_H(K, h) <= delta/(1 - delta) · max |v|` when `h` is normalized.
pub fn perturb_unconditional(h: &Polytope, delta: &Rational, seed: u64) -> Result<Polytope> {
    if !h.is_unconditional() {
        return Err(Error::NotUnconditional);
    }
    if delta.is_negative() || *delta >= Rational::one() {
        return Err(Error::precondition(format!("delta = {delta} outside [0, 1)")));
    }
    let n = h.dim();
    let mut reps: BTreeSet<RVector> = h
        .vertices()
        .iter()
        .filter(|v| v.iter().all(|x| !x.is_negative()))
        .cloned()
        .collect();
    let levels = [int(0), rat(1, 2), int(1)];
    let mut digits = vec![0usize; n];
    loop {
        let p: RVector = digits.iter().map(|&d| levels[d].clone()).collect();
        if h.locate(&p)? == Location::Boundary {
            reps.insert(p);
        }
        let Some(i) = digits.iter().position(|&d| d < 2) else { break };
        digits[i] += 1;
        digits[..i].iter_mut().for_each(|d| *d = 0);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for rep in reps {
        let f = random_factor(&mut rng, delta);
        points.extend(sign_images(&rational::scale(&rep, &f)));
    }
    normalize_unconditional(&Polytope::from_vertices(n, points)?)
}

/// A normalized unconditional polytope: the hull of all sign images of the
/// unit vectors and of `m` random nonnegative points with coordinates in
/// `{0, 1/16, ..., 1}`.
pub fn random_unconditional(n: usize, m: usize, seed: u64) -> Result<Polytope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<RVector> = Polytope::cross_polytope(n).vertices().to_vec();
    for _ in 0..m {
        let p: RVector = (0..n).map(|_| rat(rng.random_range(0..=16), 16)).collect();
        points.extend(sign_images(&p));
    }
    normalize_unconditional(&Polytope::from_vertices(n, points)?)
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub n: usize,
    pub trials: usize,
    pub delta: Rational,
    pub seed: u64,
    /// Fixed base body; by default each trial draws a standard Hanner
    /// polytope uniformly from the isomorphism classes in dimension `n`.
    pub base: Option<Graph>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRow {
    pub trial: usize,
    pub n: usize,
    pub delta: Rational,
    pub distance_sq: Rational,
    pub excess: Rational,
    pub case_tag: String,
    pub seed: u64,
}

pub const CSV_HEADER: [&str; 9] = [
    "trial",
    "n",
    "delta",
    "distance_sq",
    "distance_float",
    "excess",
    "excess_float",
    "case_tag",
    "seed",
];

impl TrialRow {
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.trial.to_string(),
            self.n.to_string(),
            rational::to_exact_string(&self.delta),
            rational::to_exact_string(&self.distance_sq),
            rational::to_f64(&self.distance_sq).sqrt().to_string(),
            rational::to_exact_string(&self.excess),
            rational::to_f64(&self.excess).to_string(),
            self.case_tag.clone(),
            self.seed.to_string(),
        ]
    }
}

pub fn write_csv<W: std::io::Write>(rows: &[TrialRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let wrap = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(wrap)?;
    for r in rows {
        w.write_record(r.csv_record()).map_err(wrap)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: "<csv>".into(),
        source,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentSummary {
    pub n: usize,
    pub trials: usize,
    pub delta: String,
    pub seed: u64,
    pub probe: String,
    pub min_excess: Option<ExactValue>,
    pub median_excess: Option<ExactValue>,
    pub max_distance_sq: Option<ExactValue>,
    pub zero_excess_count: usize,
    pub zero_distance_count: usize,
    /// Every row has excess 0 exactly when its distance is 0.
    pub zero_excess_iff_zero_distance: bool,
    /// Some row has negative excess.
    pub falsified: bool,
    pub case_counts: BTreeMap<String, usize>,
    /// Pearson correlation of distance (not squared) against excess.
    pub distance_excess_correlation: Option<f64>,
    /// `min excess / (mahler_bound · distance)` over rows with positive
    /// distance; for symmetric probes the distance is to the base body.
    pub empirical_ratio: Option<f64>,
}

/// Exact median (mean of the middle pair for even counts).
pub fn median(values: &[Rational]) -> Option<Rational> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort();
    let m = v.len() / 2;
    Some(if v.len() % 2 == 1 {
        v[m].clone()
    } else {
        (&v[m - 1] + &v[m]) / int(2)
    })
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    (vx > 0.0 && vy > 0.0).then(|| cov / (vx * vy).sqrt())
}

pub fn summarize(rows: &[TrialRow], n: usize, delta: &Rational, seed: u64, probe: &str) -> ExperimentSummary {
    let excesses: Vec<Rational> = rows.iter().map(|r| r.excess.clone()).collect();
    let mut case_counts = BTreeMap::new();
    for r in rows {
        *case_counts.entry(r.case_tag.clone()).or_insert(0) += 1;
    }
    let dist: Vec<f64> = rows.iter().map(|r| rational::to_f64(&r.distance_sq).sqrt()).collect();
    let exc: Vec<f64> = rows.iter().map(|r| rational::to_f64(&r.excess)).collect();
    let bound = rational::to_f64(&mahler_bound(n));
    let empirical_ratio = rows
        .iter()
        .zip(&dist)
        .zip(&exc)
        .filter(|((r, _), _)| r.distance_sq.is_positive())
        .map(|((_, d), e)| e / (bound * d))
        .min_by(f64::total_cmp);
    ExperimentSummary {
        n,
        trials: rows.len(),
        delta: rational::to_exact_string(delta),
        seed,
        probe: probe.to_string(),
        min_excess: excesses.iter().min().map(ExactValue::from),
        median_excess: median(&excesses).as_ref().map(ExactValue::from),
        max_distance_sq: rows.iter().map(|r| &r.distance_sq).max().map(ExactValue::from),
        zero_excess_count: rows.iter().filter(|r| r.excess.is_zero()).count(),
        zero_distance_count: rows.iter().filter(|r| r.distance_sq.is_zero()).count(),
        zero_excess_iff_zero_distance: rows.iter().all(|r| r.excess.is_zero() == r.distance_sq.is_zero()),
        falsified: rows.iter().any(|r| r.excess.is_negative()),
        case_counts,
        distance_excess_correlation: pearson(&dist, &exc),
        empirical_ratio,
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentOutput {
    pub rows: Vec<TrialRow>,
    pub summary: ExperimentSummary,
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Perturbs Hanner polytopes and reconstructs; each trial draws from its own
/// stream of the seeded generator, so results do not depend on scheduling.
pub fn stability_experiment(cfg: &ExperimentConfig) -> Result<ExperimentOutput> {
    let bases: Vec<Polytope> = match &cfg.base {
        Some(g) => {
            if g.n() != cfg.n {
                return Err(Error::DimensionMismatch {
                    expected: cfg.n,
                    got: g.n(),
                });
            }
            vec![polytope_from_graph(g)?]
        }
        None => enumerate_standard_hanner(cfg.n, true)?
            .into_iter()
            .map(|e| e.polytope)
            .collect(),
    };
    let opts = ReconstructOptions::default();
    let rows = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(cfg.seed, trial);
            let base = &bases[rng.random_range(0..bases.len())];
            let k = perturb_unconditional(base, &cfg.delta, rng.random())?;
            let rec = reconstruct_hanner(&k, &format!("trial-{trial}"), cfg.seed, &opts)?;
            Ok(TrialRow {
                trial,
                n: cfg.n,
                delta: cfg.delta.clone(),
                distance_sq: rec.distance_sq,
                excess: rec.excess,
                case_tag: rec.case_tag.as_str().to_string(),
                seed: cfg.seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&rows, cfg.n, &cfg.delta, cfg.seed, "unconditional");
    Ok(ExperimentOutput { rows, summary })
}

/// Moves each antipodal vertex pair `±v` of a centrally symmetric body to
/// `±(v + delta·r)` with `r ∈ [-1, 1]^n` random, and records the exact volume
/// product excess. The distance column is the Hausdorff distance to `h`,
/// a proxy for the distance to the class of unconditional bodies. A negative
/// excess is a counterexample to local minimality of `h`.
pub fn symmetric_probe(h: &Polytope, delta: &Rational, trials: usize, seed: u64) -> Result<ExperimentOutput> {
    if !h.is_centrally_symmetric() {
        return Err(Error::precondition("probe base must be centrally symmetric"));
    }
    if delta.is_negative() {
        return Err(Error::precondition("delta must be nonnegative"));
    }
    let n = h.dim();
    let reps: Vec<RVector> = h
        .vertices()
        .iter()
        .filter(|v| {
            let neg: RVector = v.iter().map(|x| -x).collect();
            **v > neg
        })
        .cloned()
        .collect();
    let bound = mahler_bound(n);
    let rows = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            let mut points = Vec::with_capacity(2 * reps.len());
            for v in &reps {
                let moved: RVector = v
                    .iter()
                    .map(|x| x + delta * rat(rng.random_range(-GRID..=GRID), GRID))
                    .collect();
                points.push(moved.iter().map(|x| -x).collect());
                points.push(moved);
            }
            let k = Polytope::from_vertices(n, points)?;
            Ok(TrialRow {
                trial,
                n,
                delta: delta.clone(),
                distance_sq: hausdorff_distance_sq(&k, h)?,
                excess: product(&k) - &bound,
                case_tag: "symmetric-probe".to_string(),
                seed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&rows, n, delta, seed, "symmetric");
    Ok(ExperimentOutput { rows, summary })
}
