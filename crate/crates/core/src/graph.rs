//! Complete multipartite graphs and exact edge counting.
//!
//! A graph is stored only as its partite-size vector, sorted non-increasing.
//! Vertices of the same partite set are interchangeable, so vertex subsets are
//! recorded as per-part counts ([`VertexSelection`]). Labeled vertices and
//! edges exist for the oracles and for colorings, which need concrete edges.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `x choose 2`.
#[inline]
pub fn choose2(x: usize) -> u64 {
    let x = x as u64;
    x * x.saturating_sub(1) / 2
}

/// `K_{p_1, ..., p_k}` with `p_1 >= ... >= p_k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultipartiteGraph {
    parts: Vec<usize>,
    n: usize,
}

/// A labeled vertex: `offset`-th vertex of partite set `part` (both 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub part: usize,
    pub offset: usize,
}

/// A labeled edge with `u < v` and `u.part != v.part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledEdge {
    pub u: Vertex,
    pub v: Vertex,
}

impl LabeledEdge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Self> {
        if a.part == b.part {
            return Err(Error::input(format!(
                "vertices ({},{}) and ({},{}) lie in the same partite set",
                a.part, a.offset, b.part, b.offset
            )));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(LabeledEdge { u, v })
    }
}

impl fmt::Display for LabeledEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.u.part, self.u.offset, self.v.part, self.v.offset)
    }
}

impl MultipartiteGraph {
    /// Canonicalizes `sizes` (sorted non-increasing). `k = 1` is accepted here;
    /// formula-layer operations reject it through [`Self::require_multipartite`].
    pub fn new(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::input("a graph needs at least one partite set"));
        }
        if sizes.contains(&0) {
            return Err(Error::input("partite set sizes must be positive"));
        }
        let mut parts = sizes.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Ok(MultipartiteGraph { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Size of partite set `i`, or 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn require_multipartite(&self) -> Result<()> {
        if self.k() < 2 {
            return Err(Error::domain(format!(
                "K_{{{}}} has a single partite set; at least two are required",
                self
            )));
        }
        Ok(())
    }

    /// `sum_{i<j} p_i p_j`.
    pub fn edge_count(&self) -> u64 {
        let n = self.n as u64;
        let squares: u64 = self.parts.iter().map(|&p| (p as u64) * (p as u64)).sum();
        (n * n - squares) / 2
    }

    /// Edge count of `G[S]`: `C(r,2) - sum_i C(a_i,2)`.
    pub fn induced_edge_count(&self, sel: &VertexSelection) -> Result<u64> {
        self.check_selection(sel)?;
        Ok(induced_edges(&sel.counts))
    }

    /// `|E_G(S)|`, the number of edges with at least one end in `S`.
    pub fn boundary_edge_count(&self, sel: &VertexSelection) -> Result<u64> {
        let rest = sel.complement(self)?;
        Ok(self.edge_count() - induced_edges(&rest.counts))
    }

    /// `|E_G(S)|` for the vertices picked from the given parts, one per entry,
    /// by the pairwise formula `sum (n - p_j) - #{pairs from different parts}`.
    pub fn boundary_from_picks(&self, picks: &[usize]) -> Result<u64> {
        let mut seen = vec![0usize; self.k()];
        for &j in picks {
            if j >= self.k() {
                return Err(Error::input(format!("part index {j} out of range")));
            }
            seen[j] += 1;
            if seen[j] > self.parts[j] {
                return Err(Error::input(format!("part {j} picked more than {} times", self.parts[j])));
            }
        }
        let degrees: u64 = picks.iter().map(|&j| (self.n - self.parts[j]) as u64).sum();
        let mut cross = 0u64;
        for (a, &ja) in picks.iter().enumerate() {
            cross += picks[a + 1..].iter().filter(|&&jb| jb != ja).count() as u64;
        }
        Ok(degrees - cross)
    }

    /// Conjugate partition: entry `j-1` is the number of parts of size at least `j`.
    pub fn conjugate_parts(&self) -> Vec<usize> {
        (1..=self.part(0)).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect()
    }

    /// Index of `v` in `0..n`, parts laid out consecutively.
    pub fn vertex_index(&self, v: Vertex) -> usize {
        self.parts[..v.part].iter().sum::<usize>() + v.offset
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.part < self.k() && v.offset < self.parts[v.part]
    }

    /// All labeled vertices in index order.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(part, &p)| (0..p).map(move |offset| Vertex { part, offset }))
            .collect()
    }

    /// All labeled edges in canonical (lexicographic) order.
    pub fn labeled_edges(&self) -> Vec<LabeledEdge> {
        let vs = self.vertices();
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                if u.part != v.part {
                    out.push(LabeledEdge { u, v });
                }
            }
        }
        out
    }

    fn check_selection(&self, sel: &VertexSelection) -> Result<()> {
        if sel.counts.len() != self.k() {
            return Err(Error::input(format!(
                "selection has {} counts but the graph has {} parts",
                sel.counts.len(),
                self.k()
            )));
        }
        if let Some(i) = (0..self.k()).find(|&i| sel.counts[i] > self.parts[i]) {
            return Err(Error::input(format!(
                "selection takes {} vertices from part {i} of size {}",
                sel.counts[i], self.parts[i]
            )));
        }
        Ok(())
    }
}

pub(crate) fn induced_edges(counts: &[usize]) -> u64 {
    let r: usize = counts.iter().sum();
    choose2(r) - counts.iter().map(|&a| choose2(a)).sum::<u64>()
}

impl fmt::Display for MultipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.parts))
    }
}

impl FromStr for MultipartiteGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<usize>().map_err(|_| Error::input(format!("bad partite size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MultipartiteGraph::new(&sizes)
    }
}

impl TryFrom<Vec<usize>> for MultipartiteGraph {
    type Error = Error;

    fn try_from(sizes: Vec<usize>) -> Result<Self> {
        MultipartiteGraph::new(&sizes)
    }
}

impl From<MultipartiteGraph> for Vec<usize> {
    fn from(g: MultipartiteGraph) -> Self {
        g.parts
    }
}

pub(crate) fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A vertex subset recorded as per-part counts `a_1, ..., a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSelection {
    counts: Vec<usize>,
}

impl VertexSelection {
    pub fn new(g: &MultipartiteGraph, counts: Vec<usize>) -> Result<Self> {
        let sel = VertexSelection { counts };
        g.check_selection(&sel)?;
        Ok(sel)
    }

    pub fn empty(g: &MultipartiteGraph) -> Self {
        VertexSelection { counts: vec![0; g.k()] }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Selection size `r`.
    pub fn size(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn complement(&self, g: &MultipartiteGraph) -> Result<Self> {
        g.check_selection(self)?;
        Ok(VertexSelection {
            counts: g.parts.iter().zip(&self.counts).map(|(p, a)| p - a).collect(),
        })
    }
}

/// Every complete multipartite graph with `2 <= n <= max_n` and at least two
/// parts, ordered by `n` and then lexicographically by part vector.
pub fn enumerate_graphs(max_n: usize) -> Vec<MultipartiteGraph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut level = Vec::new();
        let mut prefix = Vec::new();
        partitions_into(n, n, &mut prefix, &mut level);
        level.retain(|p: &Vec<usize>| p.len() >= 2);
        level.sort();
        out.extend(level.into_iter().map(|parts| MultipartiteGraph { n, parts }));
    }
    out
}

/// Every complete multipartite graph (`k >= 2`) with at most `max_edges` edges.
pub fn enumerate_graphs_by_edges(max_edges: u64) -> Vec<MultipartiteGraph> {
    // K_{n-1,1} has the fewest edges among graphs of order n.
    enumerate_graphs(max_edges as usize + 1)
        .into_iter()
        .filter(|g| g.edge_count() <= max_edges)
        .collect()
}

fn partitions_into(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        prefix.push(p);
        partitions_into(rest - p, p, prefix, out);
        prefix.pop();
    }
}
