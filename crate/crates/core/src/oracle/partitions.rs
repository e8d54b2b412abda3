//! Exhaustive scans over labeled vertex sets: set partitions for `l_q`,
//! fixed-size subsets for boundary minimization and densest induced subgraphs.

use crate::error::{Error, Result};
use crate::extremal::{check_q, VertexPartition};
use crate::graph::{MultipartiteGraph, VertexSelection};

fn check_cap(g: &MultipartiteGraph, max_n: usize) -> Result<()> {
    if g.n() > max_n.min(63) {
        return Err(Error::resource(format!(
            "K_{{{g}}} has {} vertices, above the vertex-oracle cap of {}",
            g.n(),
            max_n.min(63)
        )));
    }
    Ok(())
}

/// Part index of every labeled vertex.
fn part_of(g: &MultipartiteGraph) -> Vec<usize> {
    g.vertices().iter().map(|v| v.part).collect()
}

struct PartitionScan<'a> {
    g: &'a MultipartiteGraph,
    part: Vec<usize>,
    q: usize,
    /// `blocks[j][i]`: vertices of part `i` placed in block `j` so far.
    blocks: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    best: Option<VertexPartition>,
}

impl PartitionScan<'_> {
    /// Places vertex `v` into each existing block and into a new one,
    /// keeping the two largest blocks within `q` vertices.
    fn place(&mut self, v: usize, value: u64) -> Result<()> {
        if v == self.part.len() {
            if self.blocks.len() >= 2 && self.best.as_ref().is_none_or(|b| value >= b.value()) {
                let p = VertexPartition::from_blocks(self.g, self.blocks.clone())?;
                if self.best.as_ref().is_none_or(|b| p.preference(b).is_gt()) {
                    self.best = Some(p);
                }
            }
            return Ok(());
        }
        let i = self.part[v];
        for j in 0..=self.blocks.len() {
            if j == self.blocks.len() {
                self.blocks.push(vec![0; self.g.k()]);
                self.sizes.push(0);
            }
            let gain = (self.sizes[j] - self.blocks[j][i]) as u64;
            self.sizes[j] += 1;
            self.blocks[j][i] += 1;
            if self.top_two() <= self.q {
                self.place(v + 1, value + gain)?;
            }
            self.sizes[j] -= 1;
            self.blocks[j][i] -= 1;
        }
        self.blocks.pop();
        self.sizes.pop();
        Ok(())
    }

    fn top_two(&self) -> usize {
        let (mut a, mut b) = (0, 0);
        for &s in &self.sizes {
            if s > a {
                (a, b) = (s, a);
            } else if s > b {
                b = s;
            }
        }
        a + b
    }
}

/// `l_q` by enumerating every set partition of the labeled vertices into at
/// least two blocks whose two largest blocks hold at most `q` vertices. The
/// certificate is the preferred optimum in the solver's order.
pub fn oracle_ellq(g: &MultipartiteGraph, q: usize, max_n: usize) -> Result<(u64, VertexPartition)> {
    check_q(g, q)?;
    check_cap(g, max_n)?;
    let mut scan = PartitionScan { g, part: part_of(g), q, blocks: Vec::new(), sizes: Vec::new(), best: None };
    scan.place(0, 0)?;
    let best = scan.best.ok_or_else(|| Error::Internal(format!("no admissible partition of K_{{{g}}}")))?;
    Ok((best.value(), best))
}

/// Each labeled edge as a two-bit vertex mask.
fn edge_masks(g: &MultipartiteGraph) -> Vec<u64> {
    g.labeled_edges()
        .into_iter()
        .map(|e| (1 << g.vertex_index(e.u)) | (1 << g.vertex_index(e.v)))
        .collect()
}

/// All `size`-subsets of `0..n` as bitmasks, in increasing order.
fn subsets(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let limit = 1u64 << n;
    std::iter::successors(Some(first), move |&s| {
        if s == 0 {
            return None;
        }
        // next mask with the same popcount
        let c = s & s.wrapping_neg();
        let r = s + c;
        Some((((r ^ s) >> 2) / c) | r)
    })
    .take_while(move |&s| s < limit)
}

fn selection_of(g: &MultipartiteGraph, part: &[usize], mask: u64) -> VertexSelection {
    let mut counts = vec![0; g.k()];
    for (v, &i) in part.iter().enumerate() {
        if mask & (1 << v) != 0 {
            counts[i] += 1;
        }
    }
    VertexSelection::new(g, counts).expect("a labeled subset fits its graph")
}

fn check_size(g: &MultipartiteGraph, r: usize, name: &str) -> Result<()> {
    g.require_multipartite()?;
    if r == 0 || r > g.n() {
        return Err(Error::domain(format!("{name} = {r} is outside 1..={}", g.n())));
    }
    Ok(())
}

/// Minimum number of labeled edges meeting an `r`-subset, with the distinct
/// per-part count vectors of all minimizing subsets in ascending order.
pub fn min_boundary_shapes(g: &MultipartiteGraph, r: usize, max_n: usize) -> Result<(u64, Vec<VertexSelection>)> {
    check_size(g, r, "r")?;
    check_cap(g, max_n)?;
    let edges = edge_masks(g);
    let part = part_of(g);
    let mut best = u64::MAX;
    let mut shapes = Vec::new();
    for s in subsets(g.n(), r) {
        let hit = edges.iter().filter(|&&e| e & s != 0).count() as u64;
        if hit < best {
            best = hit;
            shapes.clear();
        }
        if hit == best {
            shapes.push(selection_of(g, &part, s));
        }
    }
    shapes.sort_by(|a, b| a.counts().cmp(b.counts()));
    shapes.dedup();
    Ok((best, shapes))
}

/// `min |E_G(S)|` over labeled `r`-subsets, counted edge by edge.
pub fn oracle_min_boundary(g: &MultipartiteGraph, r: usize, max_n: usize) -> Result<u64> {
    Ok(min_boundary_shapes(g, r, max_n)?.0)
}

/// Maximum edge count of an induced subgraph on `b` vertices, with the
/// distinct per-part count vectors of all maximizers in ascending order.
pub fn max_induced_subgraph(g: &MultipartiteGraph, b: usize, max_n: usize) -> Result<(u64, Vec<Vec<usize>>)> {
    check_size(g, b, "b")?;
    check_cap(g, max_n)?;
    let edges = edge_masks(g);
    let part = part_of(g);
    let mut best = 0;
    let mut shapes = Vec::new();
    for s in subsets(g.n(), b) {
        let inside = edges.iter().filter(|&&e| e & s == e).count() as u64;
        if inside > best {
            best = inside;
            shapes.clear();
        }
        if inside == best {
            shapes.push(selection_of(g, &part, s).counts().to_vec());
        }
    }
    shapes.sort();
    shapes.dedup();
    Ok((best, shapes))
}
