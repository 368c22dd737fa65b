//! Named verification suites. Each returns a report listing every failed
//! exact check; a failure in any of them is a falsification event.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hanner::{
    enumerate_standard_hanner, graph_from_polytope, hanner_from_tree, is_dual_01, polytope_from_graph,
    tree_from_cograph, HannerEntry,
};
use crate::polytope::Polytope;
use crate::rational::{self, rat, Rational};
use crate::stability::random_unconditional;
use crate::volume_product::{
    lemma1_conclusion_check, lemma2_truncated_cube_check, mahler_bound, measured_eps,
    meyer_inequality_check, product, section_membership_vector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Meyer,
    Lemma1,
    Lemma2,
    Duality,
    Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Meyer, Suite::Lemma1, Suite::Lemma2, Suite::Duality, Suite::Roundtrip];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Meyer => "meyer",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Duality => "duality",
            Suite::Roundtrip => "roundtrip",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(suite: Suite) -> Result<SuiteReport> {
    match suite {
        Suite::Meyer => meyer_suite(4, 100),
        Suite::Lemma1 => lemma1_suite(4, 100),
        Suite::Lemma2 => lemma2_suite(&[3, 4]),
        Suite::Duality => duality_suite(5),
        Suite::Roundtrip => roundtrip_suite(5),
    }
}

fn graph_label(e: &HannerEntry) -> String {
    let edges: Vec<String> = e.graph.edges().iter().map(|(a, b)| format!("{}{}", a + 1, b + 1)).collect();
    format!("n={} edges {{{}}}", e.graph.n(), edges.join(","))
}

fn hanner_upto(max_n: usize) -> Result<Vec<HannerEntry>> {
    let mut all = Vec::new();
    for n in 2..=max_n {
        all.extend(enumerate_standard_hanner(n, false)?);
    }
    Ok(all)
}

/// Seeded random unconditional bodies in dimensions 3 and 4, alternating.
pub fn random_bodies(count: usize, seed: u64) -> Result<Vec<Polytope>> {
    (0..count)
        .into_par_iter()
        .map(|i| random_unconditional(3 + i % 2, 1 + i % 3, seed.wrapping_add(i as u64)))
        .collect()
}

fn merge(name: &str, parts: Vec<Result<SuiteReport>>) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(name);
    for p in parts {
        report.absorb(p?);
    }
    Ok(report)
}

/// The coordinate-section inequality on all Hanner polytopes up to
/// `max_n` (with equality) and on `random` seeded bodies.
pub fn meyer_suite(max_n: usize, random: usize) -> Result<SuiteReport> {
    let one = |k: &Polytope, label: String, expect_equality: bool| -> Result<SuiteReport> {
        let mut r = SuiteReport::new("meyer");
        let m = meyer_inequality_check(k)?;
        r.check(m.holds, || format!("{label}: lhs {} < rhs {}", m.lhs, m.rhs));
        if expect_equality {
            r.check(m.equality, || format!("{label}: expected equality, lhs {} rhs {}", m.lhs, m.rhs));
        }
        Ok(r)
    };
    let hanner = hanner_upto(max_n)?;
    let bodies = random_bodies(random, 0x5eed)?;
    let mut parts: Vec<Result<SuiteReport>> =
        hanner.par_iter().map(|e| one(&e.polytope, graph_label(e), true)).collect();
    parts.extend(
        bodies
            .par_iter()
            .enumerate()
            .map(|(i, k)| one(k, format!("random body {i}"), false))
            .collect::<Vec<_>>(),
    );
    merge("meyer", parts)
}

/// Membership vectors and the section bound under the product hypothesis.
pub fn lemma1_suite(max_n: usize, random: usize) -> Result<SuiteReport> {
    let one = |k: &Polytope, label: String, eps: Rational| -> Result<SuiteReport> {
        let mut r = SuiteReport::new("lemma1");
        let v = section_membership_vector(k);
        r.check(v.is_ok(), || format!("{label}: {}", v.as_ref().unwrap_err()));
        let w = section_membership_vector(&k.polar());
        r.check(w.is_ok(), || format!("{label} polar: {}", w.as_ref().unwrap_err()));
        if let (Ok(v), Ok(w)) = (&v, &w) {
            let ip = rational::dot(v, w);
            r.check(ip <= Rational::from_integer(1.into()), || {
                format!("{label}: membership vectors have inner product {ip} > 1")
            });
        }
        let outcome = lemma1_conclusion_check(k, &eps)?;
        r.check(!outcome.conclusion_violated(), || {
            format!("{label}: section bound fails at eps {eps}: {outcome:?}")
        });
        Ok(r)
    };
    let hanner = hanner_upto(max_n)?;
    let bodies = random_bodies(random, 0x1e33a)?;
    let mut parts: Vec<Result<SuiteReport>> = hanner
        .par_iter()
        .map(|e| one(&e.polytope, graph_label(e), Rational::from_integer(0.into())))
        .collect();
    parts.extend(
        bodies
            .par_iter()
            .enumerate()
            .map(|(i, k)| one(k, format!("random body {i}"), measured_eps(k)))
            .collect::<Vec<_>>(),
    );
    merge("lemma1", parts)
}

/// The nine-point grid `t_k = (n-1)/n + k/(8n)`, `k = 0..=8`.
pub fn t_grid(n: usize) -> Vec<Rational> {
    let n = n as i64;
    (0..=8).map(|k| rat(n - 1, n) + rat(k, 8 * n)).collect()
}

/// Closed-form volumes of the bound bodies and the truncated-cube chain.
pub fn lemma2_suite(dims: &[usize]) -> Result<SuiteReport> {
    let cases: Vec<(usize, Rational)> = dims
        .iter()
        .flat_map(|&n| t_grid(n).into_iter().map(move |t| (n, t)))
        .collect();
    let parts = cases
        .par_iter()
        .map(|(n, t)| {
            let mut r = SuiteReport::new("lemma2");
            let c = lemma2_truncated_cube_check(*n, t)?;
            r.check(c.formulas_match, || format!("n={n} t={t}: bound-body volumes differ from formulas"));
            r.check(c.holds, || {
                format!(
                    "n={n} t={t}: product {} quadrant {} bound {}",
                    c.product, c.quadrant_bound, c.bound
                )
            });
            let strict_expected = *t != Rational::from_integer(1.into());
            r.check(c.strict == strict_expected, || {
                format!("n={n} t={t}: strictness {} unexpected", c.strict)
            });
            Ok(r)
        })
        .collect();
    merge("lemma2", parts)
}

/// Polar/complement commutation, dual 0-1 structure and constant volume
/// product for every labeled P4-free graph up to `max_n`.
pub fn duality_suite(max_n: usize) -> Result<SuiteReport> {
    let mut entries = vec![];
    for n in 1..=max_n {
        entries.extend(enumerate_standard_hanner(n, false)?);
    }
    let parts = entries
        .par_iter()
        .map(|e| {
            let mut r = SuiteReport::new("duality");
            let label = graph_label(e);
            let dual = polytope_from_graph(&e.graph.complement())?;
            r.check(e.polytope.polar() == dual, || format!("{label}: polar differs from complement polytope"));
            r.check(is_dual_01(&e.polytope), || format!("{label}: not dual 0-1"));
            let p = product(&e.polytope);
            let m = mahler_bound(e.graph.n());
            r.check(p == m, || format!("{label}: product {p} differs from {m}"));
            Ok(r)
        })
        .collect();
    merge("duality", parts)
}

/// Graph → polytope → graph and cotree → polytope agreement.
pub fn roundtrip_suite(max_n: usize) -> Result<SuiteReport> {
    let mut entries = vec![];
    for n in 2..=max_n {
        entries.extend(enumerate_standard_hanner(n, false)?);
    }
    let parts = entries
        .par_iter()
        .map(|e| {
            let mut r = SuiteReport::new("roundtrip");
            let label = graph_label(e);
            let back = graph_from_polytope(&e.polytope)?;
            r.check(back == e.graph, || format!("{label}: recovered graph {:?}", back.edges()));
            match tree_from_cograph(&e.graph) {
                Some(t) => {
                    let k = hanner_from_tree(&t)?;
                    r.check(k == e.polytope, || format!("{label}: cotree polytope differs"));
                }
                None => r.check(false, || format!("{label}: no cotree")),
            }
            Ok(r)
        })
        .collect();
    merge("roundtrip", parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for r in [
            meyer_suite(3, 4).unwrap(),
            lemma1_suite(3, 4).unwrap(),
            lemma2_suite(&[3]).unwrap(),
            duality_suite(3).unwrap(),
            roundtrip_suite(3).unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn grid_spans_the_range() {
        let g = t_grid(4);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0], rat(3, 4));
        assert_eq!(g[8], rat(1, 1));
    }
}
