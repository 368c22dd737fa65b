//! Standard Hanner polytopes and their graphs.
//!
//! A graph `G` on `{0..n-1}` determines the polytope whose vertices are the
//! sign patterns supported on maximal independent sets of `G`. For P4-free
//! graphs this is exactly the standard Hanner polytope of the cotree, and
//! `e_i + e_j` lies outside it iff `ij` is an edge.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polytope::{l1_sum_on, linf_sum_on, Location, Polytope};
use crate::rational::{add, unit, RVector, Rational};

/// Largest dimension accepted by [`enumerate_standard_hanner`].
pub const MAX_ENUMERATION_DIM: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SumOp {
    #[serde(rename = "l1")]
    L1,
    #[serde(rename = "linf")]
    Linf,
}

/// ℓ1/ℓ∞-sum expression over the coordinate intervals `[-e_i, e_i]`.
/// Leaves are 0-based here and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeJson", into = "TreeJson")]
pub enum HannerTree {
    Leaf(usize),
    Node { op: SumOp, children: Vec<HannerTree> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum TreeJson {
    Leaf { leaf: usize },
    Node { op: SumOp, children: Vec<TreeJson> },
}

impl TryFrom<TreeJson> for HannerTree {
    type Error = Error;

    fn try_from(j: TreeJson) -> Result<HannerTree> {
        Ok(match j {
            TreeJson::Leaf { leaf: 0 } => {
                return Err(Error::InvalidTree("leaf labels start at 1".into()))
            }
            TreeJson::Leaf { leaf } => HannerTree::Leaf(leaf - 1),
            TreeJson::Node { op, children } => HannerTree::Node {
                op,
                children: children
                    .into_iter()
                    .map(HannerTree::try_from)
                    .collect::<Result<_>>()?,
            },
        })
    }
}

impl From<HannerTree> for TreeJson {
    fn from(t: HannerTree) -> TreeJson {
        match t {
            HannerTree::Leaf(i) => TreeJson::Leaf { leaf: i + 1 },
            HannerTree::Node { op, children } => TreeJson::Node {
                op,
                children: children.into_iter().map(TreeJson::from).collect(),
            },
        }
    }
}

impl HannerTree {
    pub fn leaf(i: usize) -> Self {
        HannerTree::Leaf(i)
    }

    pub fn node(op: SumOp, children: Vec<HannerTree>) -> Self {
        HannerTree::Node { op, children }
    }

    /// Leaves in tree order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            HannerTree::Leaf(i) => out.push(*i),
            HannerTree::Node { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// Checks that every node has at least two children and that the leaves
    /// are exactly `0..n`; returns `n`.
    pub fn validate(&self) -> Result<usize> {
        self.check_arity()?;
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        let n = leaves.len();
        if leaves.iter().enumerate().any(|(k, &i)| k != i) {
            return Err(Error::InvalidTree(format!(
                "leaves must be exactly the coordinates 1..{n} once each"
            )));
        }
        Ok(n)
    }

    fn check_arity(&self) -> Result<()> {
        if let HannerTree::Node { children, .. } = self {
            if children.len() < 2 {
                return Err(Error::InvalidTree("a sum node needs at least two children".into()));
            }
            children.iter().try_for_each(HannerTree::check_arity)?;
        }
        Ok(())
    }

    /// The cograph: ℓ1 nodes join their children, ℓ∞ nodes take the
    /// disjoint union.
    pub fn cograph(&self) -> Result<Graph> {
        let n = self.validate()?;
        let mut g = Graph::empty(n);
        self.add_join_edges(&mut g);
        Ok(g)
    }

    fn add_join_edges(&self, g: &mut Graph) {
        if let HannerTree::Node { op, children } = self {
            if *op == SumOp::L1 {
                let supports: Vec<Vec<usize>> = children.iter().map(HannerTree::leaves).collect();
                for (a, sa) in supports.iter().enumerate() {
                    for sb in &supports[a + 1..] {
                        for &i in sa {
                            for &j in sb {
                                g.add_edge(i, j);
                            }
                        }
                    }
                }
            }
            children.iter().for_each(|c| c.add_join_edges(g));
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<HannerTree> {
        let tree: HannerTree = serde_json::from_str(s)?;
        tree.validate()?;
        Ok(tree)
    }
}

/// Builds the standard Hanner polytope of a tree by iterated sums.
pub fn hanner_from_tree(t: &HannerTree) -> Result<Polytope> {
    t.validate()?;
    Ok(build(t)?.0)
}

/// Returns the polytope on the sorted axes of its leaves.
fn build(t: &HannerTree) -> Result<(Polytope, Vec<usize>)> {
    match t {
        HannerTree::Leaf(i) => Ok((Polytope::interval(Rational::from_integer(1.into()))?, vec![*i])),
        HannerTree::Node { op, children } => {
            let mut parts = children.iter().map(build);
            let (mut acc, mut axes) = parts.next().expect("validated arity")?;
            for part in parts {
                let (p, p_axes) = part?;
                let mut merged: Vec<usize> = axes.iter().chain(&p_axes).copied().collect();
                merged.sort_unstable();
                let pos = |a: &[usize]| -> Vec<usize> {
                    a.iter().map(|x| merged.binary_search(x).expect("present")).collect()
                };
                let (acc_pos, p_pos) = (pos(&axes), pos(&p_axes));
                acc = match op {
                    SumOp::L1 => l1_sum_on(&acc, &acc_pos, &p, &p_pos)?,
                    SumOp::Linf => linf_sum_on(&acc, &acc_pos, &p, &p_pos)?,
                };
                axes = merged;
            }
            Ok((acc, axes))
        }
    }
}

/// Cotree of a P4-free graph, or `None` if the graph contains an induced P4.
/// Children are ordered by their smallest vertex.
pub fn tree_from_cograph(g: &Graph) -> Option<HannerTree> {
    if g.n() == 0 {
        return None;
    }
    let all: u32 = if g.n() == 32 { u32::MAX } else { (1u32 << g.n()) - 1 };
    decompose(g, &g.complement(), all)
}

fn decompose(g: &Graph, comp: &Graph, mask: u32) -> Option<HannerTree> {
    if mask.count_ones() == 1 {
        return Some(HannerTree::Leaf(mask.trailing_zeros() as usize));
    }
    for (op, graph) in [(SumOp::Linf, g), (SumOp::L1, comp)] {
        let parts = components(graph, mask);
        if parts.len() > 1 {
            let children = parts
                .into_iter()
                .map(|m| decompose(g, comp, m))
                .collect::<Option<Vec<_>>>()?;
            return Some(HannerTree::Node { op, children });
        }
    }
    None
}

fn components(g: &Graph, mask: u32) -> Vec<u32> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = g.neighbors(v) & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        out.push(seen);
        rest &= !seen;
    }
    out
}

/// Sign patterns on the maximal independent sets of `g`.
pub fn graph_vertex_set(g: &Graph) -> Vec<RVector> {
    let n = g.n();
    let mut points = Vec::new();
    for set in g.maximal_independent_sets() {
        for signs in 0u32..1 << set.len() {
            let mut v = vec![Rational::from_integer(0.into()); n];
            for (k, &i) in set.iter().enumerate() {
                v[i] = Rational::from_integer(if signs >> k & 1 == 1 { -1 } else { 1 }.into());
            }
            points.push(v);
        }
    }
    points
}

/// The dual 0-1 polytope of `g`. Facets are derived by enumeration, not by
/// complement duality. Intended for perfect graphs; other graphs are accepted
/// and, in debug builds with `n <= 7`, logged.
pub fn polytope_from_graph(g: &Graph) -> Result<Polytope> {
    if g.n() == 0 {
        return Err(Error::precondition("graph must have at least one vertex"));
    }
    if cfg!(debug_assertions) && g.n() <= 7 && !g.is_perfect_exhaustive()? {
        log::warn!("polytope_from_graph called on a non-perfect graph {:?}", g.edges());
    }
    Polytope::from_vertices(g.n(), graph_vertex_set(g))
}

/// Edge `ij` iff `e_i + e_j` lies outside `p`.
pub fn graph_from_polytope(p: &Polytope) -> Result<Graph> {
    if !p.is_unconditional() {
        return Err(Error::NotUnconditional);
    }
    if !p.is_normalized() {
        return Err(Error::NotNormalized(
            "every e_i must lie on the boundary".into(),
        ));
    }
    let n = p.dim();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if p.locate(&add(&unit(n, i), &unit(n, j)))? == Location::Outside {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Every vertex coordinate of `p` and of its polar is -1, 0 or 1.
pub fn is_dual_01(p: &Polytope) -> bool {
    let unit_coords = |k: &Polytope| {
        k.vertices()
            .iter()
            .flatten()
            .all(|x| x.is_integer() && x.to_integer().magnitude() <= &1u32.into())
    };
    unit_coords(p) && unit_coords(&p.polar())
}

#[derive(Clone, Debug)]
pub struct HannerEntry {
    pub graph: Graph,
    pub polytope: Polytope,
}

/// All P4-free graphs on `n` labeled vertices in pair-code order, each with
/// its Hanner polytope. With `dedup`, only the first graph of each
/// isomorphism class is kept (brute-force relabeling, exponential in `n`).
pub fn enumerate_standard_hanner(n: usize, dedup: bool) -> Result<Vec<HannerEntry>> {
    let graphs = enumerate_p4_free(n, dedup)?;
    graphs
        .into_par_iter()
        .map(|graph| {
            let polytope = polytope_from_graph(&graph)?;
            Ok(HannerEntry { graph, polytope })
        })
        .collect()
}

/// The graph half of [`enumerate_standard_hanner`].
pub fn enumerate_p4_free(n: usize, dedup: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_DIM {
        return Err(Error::Resource(format!(
            "Hanner enumeration supports 1 <= n <= {MAX_ENUMERATION_DIM}, got {n}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    let labeled: Vec<Graph> = (0u64..1 << pairs)
        .into_par_iter()
        .map(|code| Graph::from_pair_code(n, code))
        .filter(Graph::is_p4_free)
        .collect();
    if !dedup {
        return Ok(labeled);
    }
    let mut buckets: std::collections::HashMap<(usize, Vec<u32>), Vec<usize>> = Default::default();
    let mut kept: Vec<Graph> = Vec::new();
    for g in labeled {
        let bucket = buckets.entry((g.edge_count(), g.sorted_degrees())).or_default();
        if bucket.iter().any(|&k| kept[k].is_isomorphic(&g)) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    Ok(kept)
}
