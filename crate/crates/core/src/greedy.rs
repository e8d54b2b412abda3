//! Greedy minimum-degree vertex selection.
//!
//! In a complete multipartite graph a vertex has minimum degree exactly when
//! it lies in a largest remaining partite set, so repeatedly deleting a
//! minimum-degree vertex only needs the vector of remaining part sizes. Every
//! run of the greedy (under any tie-break) minimizes `|E_G(S)|` over all
//! `r`-subsets, and the minimizers are characterized by a static pairwise
//! condition on the leftover part sizes ([`is_min_selection`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MultipartiteGraph, VertexSelection};

/// The greedy run: which part each pick came from, and the minimum degree
/// of the remaining graph at that moment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyTrace {
    pub selection: VertexSelection,
    pub pick_order: Vec<usize>,
    pub degrees_at_pick: Vec<usize>,
}

fn check_r(g: &MultipartiteGraph, r: usize) -> Result<()> {
    g.require_multipartite()?;
    if r == 0 || r > g.n() {
        return Err(Error::domain(format!("r = {r} is outside 1..={}", g.n())));
    }
    Ok(())
}

/// Picks `r` vertices one at a time, each of minimum degree in what remains.
/// Ties go to the lowest part index; within a part the lowest unused offset
/// is taken, so the counts alone determine the labeled set.
pub fn algorithm_a(g: &MultipartiteGraph, r: usize) -> Result<GreedyTrace> {
    check_r(g, r)?;
    let mut remaining = g.parts().to_vec();
    let mut counts = vec![0; g.k()];
    let mut pick_order = Vec::with_capacity(r);
    let mut degrees_at_pick = Vec::with_capacity(r);
    let mut left = g.n();
    for _ in 0..r {
        // rev() makes max_by_key settle on the lowest index among ties
        let (part, &largest) = remaining
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|&(_, &size)| size)
            .expect("at least two parts");
        debug_assert!(largest > 0);
        degrees_at_pick.push(left - largest);
        pick_order.push(part);
        counts[part] += 1;
        remaining[part] -= 1;
        left -= 1;
    }
    let selection = VertexSelection::new(g, counts)?;
    Ok(GreedyTrace { selection, pick_order, degrees_at_pick })
}

/// Whether `sel` minimizes `|E_G(S)|` among subsets of its size: no part may
/// be touched while another part has at least two more vertices left.
pub fn is_min_selection(g: &MultipartiteGraph, sel: &VertexSelection) -> Result<bool> {
    g.require_multipartite()?;
    let leftover = sel.complement(g)?;
    let (a, l) = (sel.counts(), leftover.counts());
    for i in 0..g.k() {
        for j in 0..g.k() {
            if i != j && l[i] >= l[j] + 2 && a[j] != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `min |E_G(S)|` over all `r`-subsets, evaluated on the greedy selection.
pub fn min_boundary_edges(g: &MultipartiteGraph, r: usize) -> Result<u64> {
    let trace = algorithm_a(g, r)?;
    g.boundary_edge_count(&trace.selection)
}

/// Closed-form minimum boundary for `r` in `{2, 3, 4}`. Missing parts count
/// as size 0 and the case guards are tried top to bottom.
pub fn closed_form_boundary(g: &MultipartiteGraph, r: usize) -> Result<u64> {
    check_r(g, r)?;
    let n = g.n() as i64;
    let p = |i: usize| g.part(i - 1) as i64;
    let (p1, p2, p3, p4) = (p(1), p(2), p(3), p(4));
    let value = match r {
        2 => {
            if p1 > p2 {
                2 * n - 2 * p1
            } else {
                2 * n - p1 - p2 - 1
            }
        }
        3 => {
            if p1 >= p2 + 2 {
                3 * n - 3 * p1
            } else if p2 + 1 >= p1 && p1 > p3 {
                3 * n - 2 * p1 - p2 - 2
            } else {
                debug_assert!(p1 == p2 && p2 == p3);
                3 * n - p1 - p2 - p3 - 3
            }
        }
        4 => {
            if p1 >= p2 + 3 {
                4 * n - 4 * p1
            } else if p1 == p2 + 2 || (p1 == p2 + 1 && p1 >= p3 + 2) {
                4 * n - 3 * p1 - p2 - 3
            } else if p1 == p2 && p2 > p3 {
                4 * n - 2 * p1 - 2 * p2 - 4
            } else if p4 < p1 && p1 <= p2 + 1 && p2 == p3 {
                4 * n - 2 * p1 - p2 - p3 - 5
            } else {
                debug_assert!(p1 == p2 && p2 == p3 && p3 == p4);
                4 * n - p1 - p2 - p3 - p4 - 6
            }
        }
        _ => {
            return Err(Error::domain(format!(
                "closed-form boundary is only available for r in {{2, 3, 4}}, got {r}"
            )))
        }
    };
    u64::try_from(value).map_err(|_| Error::Internal(format!("negative closed form for {g}, r = {r}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(sizes: &[usize]) -> MultipartiteGraph {
        MultipartiteGraph::new(sizes).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let a = g(&[4, 3, 1]);
        let t = algorithm_a(&a, 3).unwrap();
        assert_eq!(t.pick_order, vec![0, 0, 1]);
        assert_eq!(t.selection.counts(), &[2, 1, 0]);
        assert_eq!(t.degrees_at_pick, vec![4, 4, 3]);
        assert_eq!(a.boundary_edge_count(&t.selection).unwrap(), 11);

        let b = g(&[3, 3]);
        let t = algorithm_a(&b, 2).unwrap();
        assert_eq!(t.selection.counts(), &[1, 1]);
        assert_eq!(min_boundary_edges(&b, 2).unwrap(), 5);

        let c = g(&[5, 1]);
        let t = algorithm_a(&c, 1).unwrap();
        assert_eq!(t.selection.counts(), &[1, 0]);
        assert_eq!(min_boundary_edges(&c, 1).unwrap(), 1);
    }

    #[test]
    fn greedy_trace_is_consistent() {
        let a = g(&[4, 3, 3, 1]);
        for r in 1..=a.n() {
            let t = algorithm_a(&a, r).unwrap();
            assert_eq!(t.pick_order.len(), r);
            for (i, &c) in t.selection.counts().iter().enumerate() {
                assert_eq!(t.pick_order.iter().filter(|&&p| p == i).count(), c);
            }
            assert!(t.degrees_at_pick.windows(2).all(|w| w[1] <= w[0]));
            assert_eq!(a.boundary_from_picks(&t.pick_order).unwrap(), min_boundary_edges(&a, r).unwrap());
        }
    }

    #[test]
    fn greedy_domain_errors() {
        assert!(matches!(algorithm_a(&g(&[3, 3]), 0), Err(Error::Domain(_))));
        assert!(matches!(algorithm_a(&g(&[3, 3]), 7), Err(Error::Domain(_))));
        assert!(matches!(algorithm_a(&g(&[5]), 1), Err(Error::Domain(_))));
    }

    #[test]
    fn min_selection_examples() {
        let a = g(&[4, 3, 1]);
        let s = |c: &[usize]| VertexSelection::new(&a, c.to_vec()).unwrap();
        assert!(!is_min_selection(&a, &s(&[1, 1, 1])).unwrap());
        assert!(is_min_selection(&a, &s(&[2, 1, 0])).unwrap());
        let b = g(&[2, 2]);
        let sel = VertexSelection::new(&b, vec![2, 0]).unwrap();
        assert!(!is_min_selection(&b, &sel).unwrap());
    }

    #[test]
    fn min_boundary_examples() {
        assert_eq!(min_boundary_edges(&g(&[3, 3, 3]), 3).unwrap(), 15);
        assert_eq!(min_boundary_edges(&g(&[2, 2, 2]), 3).unwrap(), 9);
    }

    #[test]
    fn closed_form_examples() {
        let a = g(&[4, 3, 1]);
        assert_eq!(closed_form_boundary(&a, 2).unwrap(), 8);
        // 4n - 3p1 - p2 - 3 = 32 - 12 - 3 - 3
        assert_eq!(closed_form_boundary(&a, 4).unwrap(), 14);
        assert_eq!(min_boundary_edges(&a, 4).unwrap(), 14);
        assert_eq!(closed_form_boundary(&g(&[2, 2, 2, 2]), 4).unwrap(), 18);
        assert_eq!(closed_form_boundary(&g(&[3, 3]), 2).unwrap(), 5);
        assert_eq!(closed_form_boundary(&g(&[3, 3, 3]), 3).unwrap(), 15);
    }

    #[test]
    fn closed_form_rejects_other_r() {
        assert!(matches!(closed_form_boundary(&g(&[4, 3, 1]), 5), Err(Error::Domain(_))));
        assert!(matches!(closed_form_boundary(&g(&[1, 1]), 3), Err(Error::Domain(_))));
    }
}
