//! `ar(G, T_q)` for complete multipartite `G`, and extremal witness colorings.
//!
//! `ar(G, T_q) = l_q(G) + 1`. A witness with that many colors takes an optimal
//! partition, gives every edge inside a block its own color, and puts all
//! edges between blocks into one shared class (color 1). Any `q`-edge tree
//! meets at least three blocks, so it uses the shared color at least twice.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{check_q, ellq, Config, Method, Route, VertexPartition};
use crate::graph::{LabeledEdge, MultipartiteGraph, Vertex};

/// A surjective edge coloring with colors `1..=t`, stored per canonical edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    graph: MultipartiteGraph,
    colors: Vec<usize>,
    t: usize,
}

impl Coloring {
    /// `colors[e]` colors the `e`-th edge of [`MultipartiteGraph::labeled_edges`].
    pub fn new(graph: MultipartiteGraph, colors: Vec<usize>) -> Result<Self> {
        let m = graph.edge_count() as usize;
        if colors.len() != m {
            return Err(Error::input(format!("{} colors given for {m} edges", colors.len())));
        }
        let t = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; t + 1];
        for &c in &colors {
            if c == 0 {
                return Err(Error::input("colors are numbered from 1"));
            }
            used[c] = true;
        }
        if let Some(c) = (1..=t).find(|&c| !used[c]) {
            return Err(Error::input(format!("color {c} of 1..={t} is never used")));
        }
        Ok(Coloring { graph, colors, t })
    }

    /// From explicit `(edge, color)` pairs; every edge must appear exactly once.
    pub fn from_pairs(graph: MultipartiteGraph, pairs: &[(LabeledEdge, usize)]) -> Result<Self> {
        let edges = graph.labeled_edges();
        let index: BTreeMap<LabeledEdge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut colors = vec![0; edges.len()];
        for &(e, c) in pairs {
            if !graph.contains(e.u) || !graph.contains(e.v) {
                return Err(Error::input(format!("edge {e} has a vertex outside K_{{{graph}}}")));
            }
            let i = *index
                .get(&e)
                .ok_or_else(|| Error::input(format!("{e} is not an edge of K_{{{graph}}}")))?;
            if colors[i] != 0 {
                return Err(Error::input(format!("edge {e} is colored twice")));
            }
            if c == 0 {
                return Err(Error::input(format!("edge {e} has color 0; colors are numbered from 1")));
            }
            colors[i] = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::input(format!("edge {} has no color", edges[i])));
        }
        Coloring::new(graph, colors)
    }

    /// One color for every edge.
    pub fn monochromatic(graph: MultipartiteGraph) -> Self {
        let m = graph.edge_count() as usize;
        Coloring { graph, colors: vec![1; m], t: usize::from(m > 0) }
    }

    pub fn graph(&self) -> &MultipartiteGraph {
        &self.graph
    }

    /// Colors in canonical edge order.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Edges grouped by color; entry `c - 1` is class `c`.
    pub fn classes(&self) -> Vec<Vec<LabeledEdge>> {
        let mut out = vec![Vec::new(); self.t];
        for (e, &c) in self.graph.labeled_edges().into_iter().zip(&self.colors) {
            out[c - 1].push(e);
        }
        out
    }

    /// Text witness format: a `parts:`, `q:` and `t:` header, then one
    /// `i1 j1 i2 j2 c` line per edge in canonical edge order.
    pub fn to_witness_text(&self, q: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "parts: {}", self.graph);
        let _ = writeln!(s, "q: {q}");
        let _ = writeln!(s, "t: {}", self.t);
        for (e, c) in self.graph.labeled_edges().into_iter().zip(&self.colors) {
            let _ = writeln!(s, "{e} {c}");
        }
        s
    }

    /// Parses the text witness format, returning the coloring and its `q`.
    pub fn parse_witness(text: &str) -> Result<(Coloring, usize)> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let mut header = |key: &str| -> Result<String> {
            let line = lines.next().ok_or_else(|| Error::input(format!("missing `{key}:` header")))?;
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(':'))
                .map(|v| v.trim().to_string())
                .ok_or_else(|| Error::input(format!("expected `{key}:` header, found {line:?}")))
        };
        let graph: MultipartiteGraph = header("parts")?.parse()?;
        let q: usize = header("q")?.parse().map_err(|_| Error::input("`q:` is not an integer"))?;
        let t: usize = header("t")?.parse().map_err(|_| Error::input("`t:` is not an integer"))?;
        let mut pairs = Vec::new();
        for line in lines {
            let fields = line
                .split_whitespace()
                .map(|f| f.parse::<usize>().map_err(|_| Error::input(format!("bad witness line {line:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let [i1, j1, i2, j2, c] = fields[..] else {
                return Err(Error::input(format!("witness line {line:?} needs five fields")));
            };
            let edge = LabeledEdge::new(Vertex { part: i1, offset: j1 }, Vertex { part: i2, offset: j2 })?;
            pairs.push((edge, c));
        }
        let coloring = Coloring::from_pairs(graph, &pairs)?;
        if coloring.t != t {
            return Err(Error::input(format!("header says t = {t} but {} colors are used", coloring.t)));
        }
        Ok((coloring, q))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntiRamseyResult {
    pub value: u64,
    pub ellq_value: u64,
    pub method: Route,
    pub certificate: Option<VertexPartition>,
    pub witness: Option<Coloring>,
}

/// `ar(G, T_q) = l_q(G) + 1`, with `l_q` from the requested route.
pub fn anti_ramsey(g: &MultipartiteGraph, q: usize, method: Method, config: &Config) -> Result<AntiRamseyResult> {
    let ex = ellq(g, q, method, config)?;
    Ok(AntiRamseyResult {
        value: ex.value + 1,
        ellq_value: ex.value,
        method: ex.method,
        certificate: ex.certificate,
        witness: None,
    })
}

/// `|E(G)| + 1 - (n-q+1)(n-p_1)` when `5q >= 4n-2` and `5(p_1-p_2) >= n+2`.
pub fn ar_large_gap_fastpath(g: &MultipartiteGraph, q: usize) -> Option<u64> {
    if check_q(g, q).is_err() {
        return None;
    }
    let (n, p1, p2) = (g.n(), g.part(0), g.part(1));
    if 5 * q + 2 < 4 * n || 5 * (p1 - p2) < n + 2 {
        return None;
    }
    Some(g.edge_count() + 1 - ((n - q + 1) * (n - p1)) as u64)
}

/// Rainbow-colors the edges inside the blocks of `certificate` (colors
/// `2, 3, ...` in canonical edge order) and gives every other edge color 1.
pub fn coloring_from_partition(g: &MultipartiteGraph, certificate: &VertexPartition) -> Result<Coloring> {
    let block_of = certificate.vertex_blocks(g);
    let inside = |e: &LabeledEdge| block_of[g.vertex_index(e.u)] == block_of[g.vertex_index(e.v)];
    let edges = g.labeled_edges();
    if edges.iter().all(inside) {
        return Err(Error::Internal("a partition with every edge inside a block is connected".into()));
    }
    let mut next = 1;
    let colors = edges
        .iter()
        .map(|e| {
            if inside(e) {
                next += 1;
                next
            } else {
                1
            }
        })
        .collect();
    Coloring::new(g.clone(), colors)
}

/// An extremal coloring with `ar(G, T_q)` colors and no rainbow `q`-edge tree.
pub fn witness_coloring(g: &MultipartiteGraph, q: usize, config: &Config) -> Result<Coloring> {
    let ex = ellq(g, q, Method::Auto, config)?;
    let certificate = ex
        .certificate
        .ok_or_else(|| Error::Internal(format!("no certificate for K_{{{g}}}, q = {q}")))?;
    let coloring = coloring_from_partition(g, &certificate)?;
    if coloring.t() as u64 != ex.value + 1 {
        return Err(Error::Internal(format!(
            "witness uses {} colors but l_q + 1 = {}",
            coloring.t(),
            ex.value + 1
        )));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(sizes: &[usize]) -> MultipartiteGraph {
        MultipartiteGraph::new(sizes).unwrap()
    }

    #[test]
    fn exceptional_values() {
        let c = Config::default();
        let ar = |s: &[usize], q| anti_ramsey(&g(s), q, Method::Auto, &c).unwrap();
        assert_eq!(ar(&[3, 3], 4).value, 4);
        assert_eq!(ar(&[4, 3], 4).value, 4);
        let r = ar(&[3, 3, 3], 6);
        assert_eq!((r.value, r.ellq_value, r.method), (10, 9, Route::Exceptional));
        assert_eq!(ar(&[2, 2, 2], 4).value, 4);
    }

    #[test]
    fn fastpath_examples() {
        // 12 + 1 - 2 * 2
        assert_eq!(ar_large_gap_fastpath(&g(&[6, 2]), 7), Some(9));
        assert_eq!(ar_large_gap_fastpath(&g(&[7, 1]), 7), Some(6));
        assert_eq!(ar_large_gap_fastpath(&g(&[3, 3]), 5), None);
        assert_eq!(ar_large_gap_fastpath(&g(&[6, 2]), 8), None);
        assert_eq!(ar_large_gap_fastpath(&g(&[8]), 5), None);
        let c = Config::default();
        assert_eq!(anti_ramsey(&g(&[6, 2]), 7, Method::Auto, &c).unwrap().value, 9);
        assert_eq!(anti_ramsey(&g(&[7, 1]), 7, Method::Auto, &c).unwrap().value, 6);
    }

    #[test]
    fn witness_shapes() {
        let c = Config::default();
        let w = witness_coloring(&g(&[3, 3, 3]), 6, &c).unwrap();
        assert_eq!(w.t(), 10);
        let classes = w.classes();
        assert_eq!(classes[0].len(), 18);
        assert!(classes[1..].iter().all(|cl| cl.len() == 1));

        let w = witness_coloring(&g(&[2, 2]), 3, &c).unwrap();
        assert_eq!(w.t(), 2);
        assert_eq!(w.classes()[0].len(), 3);

        let w = witness_coloring(&g(&[2, 1]), 2, &c).unwrap();
        assert_eq!(w.t(), 1);
        assert_eq!(w, Coloring::monochromatic(g(&[2, 1])));
    }

    #[test]
    fn witness_text_round_trips() {
        let w = witness_coloring(&g(&[3, 2, 1]), 4, &Config::default()).unwrap();
        let text = w.to_witness_text(4);
        assert!(text.starts_with("parts: 3,2,1\nq: 4\nt: "));
        let (back, q) = Coloring::parse_witness(&text).unwrap();
        assert_eq!((back, q), (w, 4));
    }

    #[test]
    fn malformed_witnesses() {
        let good = Coloring::monochromatic(g(&[1, 1])).to_witness_text(2);
        assert!(Coloring::parse_witness(&good).is_ok());
        let bad = [
            "q: 2\nparts: 1,1\nt: 1\n0 0 1 0 1\n",
            "parts: 1,1\nq: 2\nt: 2\n0 0 1 0 1\n",
            "parts: 1,1\nq: 2\nt: 1\n",
            "parts: 1,1\nq: 2\nt: 1\n0 0 1 0 1\n0 0 1 0 1\n",
            "parts: 1,1\nq: 2\nt: 1\n0 0 0 0 1\n",
            "parts: 1,1\nq: 2\nt: 1\n0 0 1 1 1\n",
            "parts: 1,1\nq: 2\nt: 1\n0 0 1 0\n",
            "parts: 1,1\nq: 2\nt: 0\n0 0 1 0 0\n",
        ];
        for text in bad {
            assert!(matches!(Coloring::parse_witness(text), Err(Error::Input(_))), "{text:?}");
        }
    }

    #[test]
    fn coloring_validation() {
        assert!(Coloring::new(g(&[2, 1]), vec![1, 3]).is_err());
        assert!(Coloring::new(g(&[2, 1]), vec![1]).is_err());
        assert!(Coloring::new(g(&[2, 1]), vec![0, 1]).is_err());
        assert_eq!(Coloring::new(g(&[2, 1]), vec![2, 1]).unwrap().t(), 2);
    }
}
