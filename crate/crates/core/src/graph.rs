//! Simple graphs on at most 32 vertices, stored as adjacency bitmasks.
//!
//! Vertices are `0..n` in the Rust API; the JSON form uses `1..=n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

fn bit(i: usize) -> u32 {
    1u32 << i
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        bit(n) - 1
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Resource(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::precondition(format!("invalid edge ({i}, {j}) for n = {n}")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// The graph whose edges are the set bits of `code`, pairs `(i, j)` with
    /// `i < j` ordered lexicographically.
    pub fn from_pair_code(n: usize, code: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> k & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i < self.n && j < self.n);
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bit(j) != 0
    }

    pub fn neighbors(&self, i: usize) -> u32 {
        self.adj[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.adj[i].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty_graph(&self) -> bool {
        self.edge_count() == 0
    }

    /// Edge iff non-edge of `self`, off the diagonal.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n).map(|i| !self.adj[i] & full & !bit(i)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `vertices`, re-indexed in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Induced subgraph on every vertex except `j`.
    pub fn without_vertex(&self, j: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != j).collect();
        self.induced(&keep)
    }

    /// Graph on `n + 1` vertices with a new isolated vertex inserted at
    /// position `j`.
    pub fn with_inserted_vertex(&self, j: usize) -> Graph {
        let map = |i: usize| if i < j { i } else { i + 1 };
        let mut g = Graph::empty(self.n + 1);
        for (a, b) in self.edges() {
            g.add_edge(map(a), map(b));
        }
        g
    }

    /// No 4-subset induces a path with three edges.
    pub fn is_p4_free(&self) -> bool {
        self.find_induced_p4().is_none()
    }

    /// Some 4-subset inducing a path with three edges, if any.
    pub fn find_induced_p4(&self) -> Option<[usize; 4]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        let mask = q.iter().fold(0u32, |m, &v| m | bit(v));
                        let degs: Vec<u32> = q.iter().map(|&v| (self.adj[v] & mask).count_ones()).collect();
                        let edges: u32 = degs.iter().sum::<u32>() / 2;
                        // three edges with degrees {1,1,2,2} is exactly P4
                        if edges == 3 && degs.iter().filter(|&&x| x == 1).count() == 2 && degs.iter().filter(|&&x| x == 2).count() == 2 {
                            return Some(q);
                        }
                    }
                }
            }
        }
        None
    }

    /// `n == 4` and the graph is a path with three edges.
    pub fn is_p4_path(&self) -> bool {
        self.n == 4 && !self.is_p4_free()
    }

    /// All inclusion-maximal independent sets, each sorted, listed in
    /// lexicographic order.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<usize>> {
        let comp = self.complement();
        let mut masks = Vec::new();
        bron_kerbosch(&comp.adj, 0, full_mask(self.n), 0, &mut masks);
        let mut sets: Vec<Vec<usize>> = masks.into_iter().map(|m| mask_to_vec(m, self.n)).collect();
        sets.sort();
        sets
    }

    /// No induced odd cycle of length at least 5 in the graph or its
    /// complement. Exhaustive, so limited to `n <= 10`.
    pub fn is_perfect_exhaustive(&self) -> Result<bool> {
        if self.n > 10 {
            return Err(Error::Resource(format!(
                "exhaustive perfectness check is limited to 10 vertices, got {}",
                self.n
            )));
        }
        Ok(!self.has_odd_hole() && !self.complement().has_odd_hole())
    }

    fn has_odd_hole(&self) -> bool {
        let n = self.n;
        (0u32..1 << n).any(|mask| {
            let size = mask.count_ones() as usize;
            size >= 5
                && size % 2 == 1
                && (0..n)
                    .filter(|&v| mask & bit(v) != 0)
                    .all(|v| (self.adj[v] & mask).count_ones() == 2)
                && is_connected_within(&self.adj, mask)
        })
    }

    pub fn sorted_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = (0..self.n).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d
    }

    /// Brute-force isomorphism test by backtracking over relabelings that
    /// respect degrees.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n
            || self.edge_count() != other.edge_count()
            || self.sorted_degrees() != other.sorted_degrees()
        {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = 0u32;
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &Graph, i: usize, map: &mut [usize], used: &mut u32) -> bool {
        if i == self.n {
            return true;
        }
        for cand in 0..other.n {
            if *used & bit(cand) != 0 || self.degree(i) != other.degree(cand) {
                continue;
            }
            let consistent = (0..i).all(|k| self.has_edge(i, k) == other.has_edge(cand, map[k]));
            if !consistent {
                continue;
            }
            map[i] = cand;
            *used |= bit(cand);
            if self.extend_iso(other, i + 1, map, used) {
                return true;
            }
            *used &= !bit(cand);
        }
        false
    }

    /// Lexicographically smallest pair code over all relabelings. Exponential;
    /// intended for `n <= 7`.
    pub fn canonical_code(&self) -> u64 {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| {
            let code = self.relabeled(p).pair_code();
            if code < best {
                best = code;
            }
        });
        best
    }

    /// Graph with vertex `i` renamed to `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    pub fn pair_code(&self) -> u64 {
        let mut code = 0u64;
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        code
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn is_connected_within(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

fn mask_to_vec(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & bit(i) != 0).collect()
}

/// Maximal cliques of the graph given by `adj`, with pivoting.
fn bron_kerbosch(adj: &[u32], r: u32, p: u32, x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = {
        let mut best = 0usize;
        let mut best_count = 0;
        let mut cands = p | x;
        let mut first = true;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let c = (p & adj[u]).count_ones();
            if first || c > best_count {
                best = u;
                best_count = c;
                first = false;
            }
        }
        best
    };
    let mut p = p;
    let mut x = x;
    let mut todo = p & !adj[pivot];
    while todo != 0 {
        let v = todo.trailing_zeros() as usize;
        todo &= todo - 1;
        bron_kerbosch(adj, r | bit(v), p & adj[v], x & adj[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// `{"n": 4, "edges": [[1,2],[2,3],[3,4]]}` with 1-based labels.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(i, j)| [i + 1, j + 1]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let mut edges = Vec::with_capacity(j.edges.len());
        for [a, b] in j.edges {
            if a == 0 || b == 0 {
                return Err(Error::Parse("graph labels start at 1".into()));
            }
            edges.push((a - 1, b - 1));
        }
        Graph::from_edges(j.n, &edges)
    }
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson::from(self)).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let parsed: GraphJson = serde_json::from_str(s)?;
        parsed.try_into()
    }
}
