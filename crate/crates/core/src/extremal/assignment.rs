//! Optimal placement of partite sets into blocks of prescribed sizes.
//!
//! For fixed block sizes `s_1 >= ... >= s_m` the number of induced edges is
//! `sum_j C(s_j,2) - sum_ij C(a_ij,2)`, so the problem is to choose a count
//! matrix with row sums `p_i` and column sums `s_j` minimizing the convex
//! separable cost `sum_ij C(a_ij,2)`. The search below is an exact
//! depth-first branch and bound over columns (largest block first), bounded
//! by water-filling relaxations of the remaining rows and columns.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::sequences::ComponentSizeSequence;
use crate::error::{Error, Result};
use crate::graph::{choose2, induced_edges, join, MultipartiteGraph};

/// A partition of `V(G)` into blocks, as per-part counts for each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexPartition {
    /// `blocks[j][i]`: vertices of part `i` in block `j`.
    blocks: Vec<Vec<usize>>,
    block_sizes: Vec<usize>,
    value: u64,
}

impl VertexPartition {
    /// Builds a partition from per-block count vectors. Blocks are put in
    /// canonical order: larger blocks first, equal sizes by ascending vector.
    pub fn from_blocks(g: &MultipartiteGraph, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        blocks.retain(|b| b.iter().any(|&a| a > 0));
        if let Some(b) = blocks.iter().find(|b| b.len() != g.k()) {
            return Err(Error::input(format!("block {} does not have {} counts", join(b), g.k())));
        }
        for i in 0..g.k() {
            let row: usize = blocks.iter().map(|b| b[i]).sum();
            if row != g.part(i) {
                return Err(Error::input(format!(
                    "blocks place {row} vertices of part {i}, which has {}",
                    g.part(i)
                )));
            }
        }
        blocks.sort_by(|a, b| {
            let (sa, sb) = (a.iter().sum::<usize>(), b.iter().sum::<usize>());
            sb.cmp(&sa).then_with(|| a.cmp(b))
        });
        let block_sizes = blocks.iter().map(|b| b.iter().sum()).collect();
        let value = blocks.iter().map(|b| induced_edges(b)).sum();
        Ok(VertexPartition { blocks, block_sizes, value })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The `k x m` count matrix, one row per partite set.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let k = self.blocks.first().map_or(0, Vec::len);
        (0..k).map(|i| self.blocks.iter().map(|b| b[i]).collect()).collect()
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn sequence(&self) -> ComponentSizeSequence {
        ComponentSizeSequence::new(self.block_sizes.clone()).expect("blocks are non-empty and sorted")
    }

    /// Total number of edges inside blocks.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// At least two blocks, and the two largest hold at most `q` vertices.
    pub fn is_feasible(&self, q: usize) -> bool {
        self.block_sizes.len() >= 2 && self.block_sizes[0] + self.block_sizes[1] <= q
    }

    /// Block index of each labeled vertex, in vertex-index order. Within a
    /// part, offsets are dealt to blocks in block order.
    pub fn vertex_blocks(&self, g: &MultipartiteGraph) -> Vec<usize> {
        let mut out = Vec::with_capacity(g.n());
        for i in 0..g.k() {
            for (j, b) in self.blocks.iter().enumerate() {
                out.extend(std::iter::repeat_n(j, b[i]));
            }
        }
        out
    }

    /// Certificate preference: larger value, then lexicographically larger
    /// block-size sequence, then lexicographically smaller block list.
    pub fn preference(&self, other: &Self) -> Ordering {
        self.value
            .cmp(&other.value)
            .then_with(|| self.block_sizes.cmp(&other.block_sizes))
            .then_with(|| other.blocks.cmp(&self.blocks))
    }
}

/// Minimum of `sum C(x_i, 2)` subject to `sum x_i = total`, `0 <= x_i <= caps[i]`.
fn water_fill(total: usize, caps: &mut [usize]) -> u64 {
    caps.sort_unstable();
    let mut left = total;
    let mut bins = caps.len();
    let mut cost = 0;
    for &c in caps.iter() {
        if bins == 0 || c > left / bins {
            break;
        }
        cost += choose2(c);
        left -= c;
        bins -= 1;
    }
    if let Some(base) = left.checked_div(bins) {
        let extra = left % bins;
        cost += extra as u64 * choose2(base + 1) + (bins - extra) as u64 * choose2(base);
    } else {
        debug_assert_eq!(left, 0);
    }
    cost
}

struct Search<'a> {
    /// Sizes of blocks with at least two vertices.
    big: &'a [usize],
    singletons: usize,
    rows: Vec<usize>,
    columns: Vec<Vec<usize>>,
    best: Option<(u64, Vec<Vec<usize>>)>,
    /// Prune subtrees whose lower bound reaches this.
    cutoff: u64,
    nodes: u64,
    budget: u64,
    scratch: Vec<usize>,
}

impl Search<'_> {
    fn lower_bound(&mut self, from: usize) -> u64 {
        let mut by_columns = 0;
        for &s in &self.big[from..] {
            self.scratch.clear();
            self.scratch.extend_from_slice(&self.rows);
            by_columns += water_fill(s, &mut self.scratch);
        }
        let mut by_rows = 0;
        for i in 0..self.rows.len() {
            self.scratch.clear();
            self.scratch.extend_from_slice(&self.big[from..]);
            self.scratch.extend(std::iter::repeat_n(1, self.singletons));
            by_rows += water_fill(self.rows[i], &mut self.scratch);
        }
        by_columns.max(by_rows)
    }

    fn descend(&mut self, col: usize, cost: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::resource(format!(
                "block assignment search exceeded the node budget of {}",
                self.budget
            )));
        }
        if col == self.big.len() {
            if cost < self.cutoff {
                self.cutoff = cost;
                self.best = Some((cost, self.columns.clone()));
            }
            return Ok(());
        }
        if cost + self.lower_bound(col) >= self.cutoff {
            return Ok(());
        }
        let floor = match col.checked_sub(1) {
            Some(prev) if self.big[prev] == self.big[col] => Some(self.columns[prev].clone()),
            _ => None,
        };
        let mut column = vec![0; self.rows.len()];
        self.each_column(col, cost, 0, self.big[col], floor.as_deref(), &mut column)
    }

    /// Enumerates column `col` in ascending lexicographic order. Among blocks
    /// of equal size, columns must not decrease.
    fn each_column(
        &mut self,
        col: usize,
        cost: u64,
        i: usize,
        left: usize,
        floor: Option<&[usize]>,
        column: &mut Vec<usize>,
    ) -> Result<()> {
        let k = self.rows.len();
        if i == k {
            let added: u64 = column.iter().map(|&a| choose2(a)).sum();
            for (r, &a) in self.rows.iter_mut().zip(column.iter()) {
                *r -= a;
            }
            self.columns.push(column.clone());
            let res = self.descend(col + 1, cost + added);
            self.columns.pop();
            for (r, &a) in self.rows.iter_mut().zip(column.iter()) {
                *r += a;
            }
            return res;
        }
        let capacity_after: usize = self.rows[i + 1..].iter().sum();
        let mut lo = left.saturating_sub(capacity_after);
        let hi = self.rows[i].min(left);
        if let Some(f) = floor {
            lo = lo.max(f[i]);
        }
        for a in lo..=hi {
            column[i] = a;
            let still_tight = floor.filter(|f| a == f[i]);
            self.each_column(col, cost, i + 1, left - a, still_tight, column)?;
        }
        column[i] = 0;
        Ok(())
    }
}

/// Per-column water-fill, used as the starting incumbent.
fn greedy_columns(parts: &[usize], big: &[usize]) -> (u64, Vec<Vec<usize>>) {
    let mut rows = parts.to_vec();
    let mut cost = 0;
    let mut columns = Vec::with_capacity(big.len());
    for &s in big {
        let mut column = vec![0; rows.len()];
        for _ in 0..s {
            // add to the row where the marginal cost a_ij is smallest
            let i = (0..rows.len())
                .filter(|&i| rows[i] > 0)
                .min_by_key(|&i| (column[i], std::cmp::Reverse(rows[i])))
                .expect("row sums cover column sums");
            cost += column[i] as u64;
            column[i] += 1;
            rows[i] -= 1;
        }
        columns.push(column);
    }
    (cost, columns)
}

/// Maximum-edge partition of `V(G)` into blocks of the given sizes. Ties go
/// to the lexicographically smallest block list. Fails with a resource error
/// rather than returning an unproven answer when `node_budget` runs out.
pub fn best_assignment(
    g: &MultipartiteGraph,
    sizes: &ComponentSizeSequence,
    node_budget: u64,
) -> Result<VertexPartition> {
    if sizes.total() != g.n() {
        return Err(Error::input(format!(
            "block sizes {sizes} sum to {} but the graph has {} vertices",
            sizes.total(),
            g.n()
        )));
    }
    let split = sizes.sizes().iter().take_while(|&&s| s >= 2).count();
    let big = &sizes.sizes()[..split];
    let singletons = sizes.len() - split;
    let (greedy_cost, _) = greedy_columns(g.parts(), big);
    let mut search = Search {
        big,
        singletons,
        rows: g.parts().to_vec(),
        columns: Vec::with_capacity(split),
        best: None,
        cutoff: greedy_cost + 1,
        nodes: 0,
        budget: node_budget,
        scratch: Vec::new(),
    };
    search.descend(0, 0)?;
    let (_, mut blocks) = search
        .best
        .ok_or_else(|| Error::Internal("branch and bound lost its incumbent".into()))?;
    let mut left = g.parts().to_vec();
    for b in &blocks {
        for (l, a) in left.iter_mut().zip(b) {
            *l -= a;
        }
    }
    let k = g.k();
    for i in (0..k).rev() {
        for _ in 0..left[i] {
            let mut unit = vec![0; k];
            unit[i] = 1;
            blocks.push(unit);
        }
    }
    VertexPartition::from_blocks(g, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(sizes: &[usize]) -> MultipartiteGraph {
        MultipartiteGraph::new(sizes).unwrap()
    }

    fn seq(sizes: &[usize]) -> ComponentSizeSequence {
        ComponentSizeSequence::new(sizes.to_vec()).unwrap()
    }

    /// Every count matrix with the given margins.
    fn all_matrices(parts: &[usize], sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
        fn rec(rows: &mut Vec<usize>, sizes: &[usize], j: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
            if j == sizes.len() {
                if rows.iter().all(|&r| r == 0) {
                    out.push(acc.clone());
                }
                return;
            }
            let mut col = vec![0; rows.len()];
            fill(rows, sizes, j, 0, sizes[j], &mut col, acc, out);
        }
        #[allow(clippy::too_many_arguments)]
        fn fill(
            rows: &mut Vec<usize>,
            sizes: &[usize],
            j: usize,
            i: usize,
            left: usize,
            col: &mut Vec<usize>,
            acc: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if i == rows.len() {
                if left == 0 {
                    for (r, a) in rows.iter_mut().zip(col.iter()) {
                        *r -= a;
                    }
                    acc.push(col.clone());
                    rec(rows, sizes, j + 1, acc, out);
                    acc.pop();
                    for (r, a) in rows.iter_mut().zip(col.iter()) {
                        *r += a;
                    }
                }
                return;
            }
            for a in 0..=rows[i].min(left) {
                col[i] = a;
                fill(rows, sizes, j, i + 1, left - a, col, acc, out);
            }
            col[i] = 0;
        }
        let mut out = Vec::new();
        rec(&mut parts.to_vec(), sizes, 0, &mut Vec::new(), &mut out);
        out
    }

    fn exhaustive_best(parts: &[usize], sizes: &[usize]) -> u64 {
        all_matrices(parts, sizes)
            .iter()
            .map(|m| m.iter().map(|b| induced_edges(b)).sum::<u64>())
            .max()
            .unwrap()
    }

    #[test]
    fn small_assignments() {
        let p = best_assignment(&g(&[3, 3, 3]), &seq(&[3, 3, 3]), 1_000_000).unwrap();
        assert_eq!(p.value(), 9);
        assert!(p.blocks().iter().all(|b| b == &vec![1, 1, 1]));

        let p = best_assignment(&g(&[2, 2]), &seq(&[2, 2]), 1_000_000).unwrap();
        assert_eq!(p.value(), 2);

        // (2,2) and (2,1) give 4 + 2 induced edges
        let p = best_assignment(&g(&[4, 3]), &seq(&[4, 3]), 1_000_000).unwrap();
        assert_eq!(p.value(), 6);
        assert_eq!(exhaustive_best(&[4, 3], &[4, 3]), 6);
        assert_eq!(p.blocks(), &[vec![2, 2], vec![2, 1]]);
    }

    #[test]
    fn water_fill_matches_brute_force() {
        for total in 0..=9 {
            for caps in [vec![3, 3, 3], vec![5, 1, 2], vec![9], vec![2, 2, 2, 2, 1]] {
                if caps.iter().sum::<usize>() < total {
                    continue;
                }
                fn brute(total: usize, caps: &[usize]) -> Option<u64> {
                    let Some((&c, rest)) = caps.split_first() else {
                        return (total == 0).then_some(0);
                    };
                    (0..=c.min(total)).filter_map(|x| Some(choose2(x) + brute(total - x, rest)?)).min()
                }
                let brute = brute(total, &caps).unwrap();
                assert_eq!(water_fill(total, &mut caps.clone()), brute, "total {total} caps {caps:?}");
            }
        }
    }

    #[test]
    fn matches_exhaustive_and_picks_smallest_tie() {
        let cases: &[(&[usize], &[usize])] = &[
            (&[3, 2, 2], &[3, 2, 2]),
            (&[4, 1, 1], &[2, 2, 2]),
            (&[3, 3, 1], &[3, 3, 1]),
            (&[2, 2, 2, 1], &[3, 3, 1]),
            (&[5, 2], &[4, 1, 1, 1]),
            (&[2, 2, 2, 2], &[4, 2, 2]),
            (&[4, 3, 1], &[3, 3, 1, 1]),
        ];
        for &(parts, sizes) in cases {
            let graph = g(parts);
            let got = best_assignment(&graph, &seq(sizes), 1_000_000).unwrap();
            let matrices = all_matrices(parts, sizes);
            let best = exhaustive_best(parts, sizes);
            assert_eq!(got.value(), best, "{parts:?} into {sizes:?}");
            let smallest = matrices
                .into_iter()
                .filter(|m| m.iter().map(|b| induced_edges(b)).sum::<u64>() == best)
                .map(|m| VertexPartition::from_blocks(&graph, m).unwrap().blocks().to_vec())
                .min()
                .unwrap();
            assert_eq!(got.blocks(), &smallest[..], "{parts:?} into {sizes:?}");
        }
    }

    #[test]
    fn margin_mismatch_is_input_error() {
        assert!(matches!(best_assignment(&g(&[3, 3]), &seq(&[3, 2]), 100), Err(Error::Input(_))));
    }

    #[test]
    fn budget_exhaustion_is_resource_error() {
        let r = best_assignment(&g(&[6, 5, 4, 3]), &seq(&[4, 4, 4, 3, 3]), 3);
        assert!(matches!(r, Err(Error::Resource(_))));
    }

    #[test]
    fn partition_accessors() {
        let graph = g(&[2, 1]);
        let p = VertexPartition::from_blocks(&graph, vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(p.block_sizes(), &[2, 1]);
        assert_eq!(p.rows(), vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(p.value(), 1);
        assert!(p.is_feasible(3));
        assert!(!p.is_feasible(2));
        assert_eq!(p.vertex_blocks(&graph), vec![0, 1, 0]);
        assert!(VertexPartition::from_blocks(&graph, vec![vec![1, 1]]).is_err());
    }
}
