//! Rainbow `q`-edge subtrees and the edge-coloring oracle for `ar(G, T_q)`.

use serde::{Deserialize, Serialize};

use crate::antiramsey::Coloring;
use crate::error::{Error, Result};
use crate::graph::{LabeledEdge, MultipartiteGraph};

/// A subtree with `q` edges whose colors are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowTree {
    pub edges: Vec<LabeledEdge>,
    pub colors: Vec<usize>,
}

/// Labeled edge structure of `G` as vertex indices, shared by every search.
pub(crate) struct TreeSearch {
    ends: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    n: usize,
}

impl TreeSearch {
    pub(crate) fn new(g: &MultipartiteGraph) -> Result<Self> {
        let n = g.n();
        if n > 128 {
            return Err(Error::resource(format!("tree search supports at most 128 vertices, K_{{{g}}} has {n}")));
        }
        let mut adj = vec![Vec::new(); n];
        let ends: Vec<(usize, usize)> = g
            .labeled_edges()
            .into_iter()
            .map(|e| (g.vertex_index(e.u), g.vertex_index(e.v)))
            .collect();
        for (e, &(a, b)) in ends.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        Ok(TreeSearch { ends, adj, n })
    }

    /// A rainbow tree with `q` edges among edges of nonzero color, as edge
    /// indices. With `must`, only trees through that edge are considered.
    pub(crate) fn find(&self, colors: &[usize], q: usize, must: Option<usize>) -> Option<Vec<usize>> {
        let t = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; t + 1];
        let mut chosen = Vec::with_capacity(q);
        if let Some(e) = must {
            let (a, b) = self.ends[e];
            if colors[e] == 0 {
                return None;
            }
            used[colors[e]] = true;
            chosen.push(e);
            let tree = (1u128 << a) | (1u128 << b);
            let mut frontier = Vec::new();
            self.extend(colors, &used, tree, 0, a, &mut frontier);
            self.extend(colors, &used, tree, 0, b, &mut frontier);
            return self.grow(colors, q, 0, tree, &mut used, &mut chosen, frontier).then_some(chosen);
        }
        // Each tree is found from its smallest vertex only.
        for root in 0..self.n.saturating_sub(q) {
            let tree = 1u128 << root;
            let mut frontier = Vec::new();
            self.extend(colors, &used, tree, root, root, &mut frontier);
            if self.grow(colors, q, root, tree, &mut used, &mut chosen, frontier) {
                return Some(chosen);
            }
        }
        None
    }

    fn extend(&self, colors: &[usize], used: &[bool], tree: u128, low: usize, v: usize, frontier: &mut Vec<usize>) {
        // reversed so that pops come out in ascending edge order
        for &(w, e) in self.adj[v].iter().rev() {
            if w >= low && tree & (1 << w) == 0 && colors[e] != 0 && !used[colors[e]] {
                frontier.push(e);
            }
        }
    }

    /// Every subtree containing `tree` is reached exactly once: the next
    /// frontier edge is either taken or discarded for the rest of the branch.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        colors: &[usize],
        q: usize,
        low: usize,
        tree: u128,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        mut frontier: Vec<usize>,
    ) -> bool {
        if chosen.len() == q {
            return true;
        }
        while let Some(e) = frontier.pop() {
            let (a, b) = self.ends[e];
            let v = if tree & (1 << a) == 0 { a } else { b };
            let c = colors[e];
            if tree & (1 << v) != 0 || used[c] {
                continue;
            }
            let mut next = frontier.clone();
            used[c] = true;
            chosen.push(e);
            self.extend(colors, used, tree, low, v, &mut next);
            if self.grow(colors, q, low, tree | (1 << v), used, chosen, next) {
                return true;
            }
            chosen.pop();
            used[c] = false;
        }
        false
    }
}

fn check_tree_q(g: &MultipartiteGraph, q: usize) -> Result<()> {
    if q == 0 || q >= g.n() {
        return Err(Error::domain(format!("q = {q} is outside 1..={} for K_{{{g}}}", g.n() - 1)));
    }
    Ok(())
}

/// Some subtree with exactly `q` edges in pairwise distinct colors, if any.
pub fn find_rainbow_tree(coloring: &Coloring, q: usize) -> Result<Option<RainbowTree>> {
    let g = coloring.graph();
    check_tree_q(g, q)?;
    let search = TreeSearch::new(g)?;
    let Some(mut found) = search.find(coloring.colors(), q, None) else {
        return Ok(None);
    };
    found.sort_unstable();
    let edges = g.labeled_edges();
    Ok(Some(RainbowTree {
        edges: found.iter().map(|&e| edges[e]).collect(),
        colors: found.iter().map(|&e| coloring.colors()[e]).collect(),
    }))
}

/// Largest `t` for which some surjective `t`-coloring of `E(G)` has no rainbow
/// `q`-edge tree, with the first such coloring in restricted-growth order.
/// Colorings are enumerated as edge partitions with exactly `t` blocks for
/// `t = |E|, |E|-1, ...`; a prefix is abandoned as soon as its newest edge
/// closes a rainbow tree among the edges colored so far.
pub fn oracle_ar(g: &MultipartiteGraph, q: usize, max_edges: u64) -> Result<(u64, Coloring)> {
    crate::extremal::check_q(g, q)?;
    let m = g.edge_count();
    if m > max_edges {
        return Err(Error::resource(format!(
            "K_{{{g}}} has {m} edges, above the coloring-oracle cap of {max_edges}"
        )));
    }
    let search = TreeSearch::new(g)?;
    let m = m as usize;
    let mut colors = vec![0; m];
    for t in (1..=m).rev() {
        if colorings_with_blocks(&search, q, t, &mut colors, 0, 0) {
            return Ok((t as u64, Coloring::new(g.clone(), colors)?));
        }
    }
    Err(Error::Internal(format!("no rainbow-free coloring of K_{{{g}}} for q = {q}")))
}

fn colorings_with_blocks(search: &TreeSearch, q: usize, t: usize, colors: &mut [usize], e: usize, opened: usize) -> bool {
    if e == colors.len() {
        return opened == t;
    }
    if t - opened > colors.len() - e {
        return false;
    }
    for c in 1..=(opened + 1).min(t) {
        colors[e] = c;
        if search.find(colors, q, Some(e)).is_none()
            && colorings_with_blocks(search, q, t, colors, e + 1, opened.max(c))
        {
            return true;
        }
    }
    colors[e] = 0;
    false
}
