//! The extremal size `l_q(G)`: the maximum number of edges in a disconnected
//! spanning subgraph of `G` whose two largest components together have at
//! most `q` vertices.
//!
//! Optimal subgraphs can be taken with induced components, so `l_q` is a
//! maximum over vertex partitions. Three routes compute it:
//!
//! * a table of the three pairs where the boundary formula undercounts;
//! * `|E(G)| - min |E_G(S)|` over `(n-q+1)`-subsets `S`, valid for
//!   `q >= n-3` (evaluated in closed form) and for `5q >= 4n-2` (evaluated
//!   with the greedy selection);
//! * an exact solver maximizing over the admissible block-size sequences,
//!   which works for every `q`.

mod assignment;
mod sequences;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use assignment::{best_assignment, VertexPartition};
pub use sequences::{candidate_sequences, ComponentSizeSequence};

use crate::error::{Error, Result};
use crate::graph::{MultipartiteGraph, VertexSelection};
use crate::greedy::{algorithm_a, closed_form_boundary, min_boundary_edges};
use crate::oracle;

/// Search limits shared by the solver and the brute-force oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Node budget for one block-assignment search.
    pub node_budget: u64,
    /// Largest order accepted by vertex-enumerating oracles.
    pub max_n: usize,
    /// Largest edge count accepted by the coloring oracle.
    pub max_edges: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { node_budget: 10_000_000, max_n: 10, max_edges: 12 }
    }
}

/// Requested computation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Auto,
    ClosedForm,
    SequenceSolver,
    Oracle,
}

/// Route that actually produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Exceptional,
    ClosedFormSmallGap,
    ClosedFormLargeGap,
    SequenceSolver,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::ClosedForm => "closed-form",
            Method::SequenceSolver => "sequence-solver",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "closed-form" => Ok(Method::ClosedForm),
            "sequence-solver" => Ok(Method::SequenceSolver),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::input(format!("unknown method {other:?}"))),
        }
    }
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Exceptional => "exceptional",
            Route::ClosedFormSmallGap => "closed-form-small-gap",
            Route::ClosedFormLargeGap => "closed-form-large-gap",
            Route::SequenceSolver => "sequence-solver",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub value: u64,
    pub method: Route,
    pub certificate: Option<VertexPartition>,
}

pub(crate) fn check_q(g: &MultipartiteGraph, q: usize) -> Result<()> {
    g.require_multipartite()?;
    if q < 2 || q + 1 > g.n() {
        return Err(Error::domain(format!("q = {q} is outside 2..={} for K_{{{g}}}", g.n() - 1)));
    }
    Ok(())
}

/// `l_q` for the three pairs where it exceeds the boundary formula.
pub fn exceptional_lookup(g: &MultipartiteGraph, q: usize) -> Option<u64> {
    match (g.parts(), q) {
        ([3, 3], 4) | ([4, 3], 4) => Some(3),
        ([3, 3, 3], 6) => Some(9),
        _ => None,
    }
}

/// `n - 3 <= q`.
pub fn in_small_gap_range(g: &MultipartiteGraph, q: usize) -> bool {
    q + 3 >= g.n()
}

/// `(4n - 2) / 5 <= q`.
pub fn in_large_gap_range(g: &MultipartiteGraph, q: usize) -> bool {
    5 * q + 2 >= 4 * g.n()
}

/// `|E(G)| - min |E_G(S)|` over `(n-q+1)`-subsets: the edge count of the best
/// `(q-1)`-vertex induced subgraph. A lower bound on `l_q` for every `q`.
pub fn boundary_complement_value(g: &MultipartiteGraph, q: usize) -> Result<u64> {
    check_q(g, q)?;
    Ok(g.edge_count() - min_boundary_edges(g, g.n() - q + 1)?)
}

/// The partition realizing [`boundary_complement_value`]: the complement of
/// the greedy `(n-q+1)`-selection as one block, everything else as singletons.
fn boundary_complement_certificate(g: &MultipartiteGraph, q: usize) -> Result<VertexPartition> {
    let trace = algorithm_a(g, g.n() - q + 1)?;
    let rest: VertexSelection = trace.selection.complement(g)?;
    let mut blocks = vec![rest.counts().to_vec()];
    for (i, &a) in trace.selection.counts().iter().enumerate() {
        for _ in 0..a {
            let mut unit = vec![0; g.k()];
            unit[i] = 1;
            blocks.push(unit);
        }
    }
    VertexPartition::from_blocks(g, blocks)
}

/// Exact `l_q` as the best block assignment over all candidate sequences.
pub fn sequence_solver(g: &MultipartiteGraph, q: usize, config: &Config) -> Result<ExtremalResult> {
    check_q(g, q)?;
    let mut best: Option<VertexPartition> = None;
    for sizes in candidate_sequences(g.n(), q)? {
        let p = best_assignment(g, &sizes, config.node_budget)?;
        if best.as_ref().is_none_or(|b| p.preference(b).is_gt()) {
            best = Some(p);
        }
    }
    let best = best.ok_or_else(|| Error::Internal(format!("no candidate sequences for n = {}, q = {q}", g.n())))?;
    Ok(ExtremalResult { value: best.value(), method: Route::SequenceSolver, certificate: Some(best) })
}

fn closed_form(g: &MultipartiteGraph, q: usize, config: &Config) -> Result<Option<ExtremalResult>> {
    if let Some(value) = exceptional_lookup(g, q) {
        let solved = sequence_solver(g, q, config)?;
        if solved.value != value {
            return Err(Error::Internal(format!(
                "exceptional table says {value} but the solver found {} for K_{{{g}}}, q = {q}",
                solved.value
            )));
        }
        return Ok(Some(ExtremalResult { value, method: Route::Exceptional, certificate: solved.certificate }));
    }
    let method = if in_small_gap_range(g, q) {
        Route::ClosedFormSmallGap
    } else if in_large_gap_range(g, q) {
        Route::ClosedFormLargeGap
    } else {
        return Ok(None);
    };
    let r = g.n() - q + 1;
    let boundary = match method {
        Route::ClosedFormSmallGap => closed_form_boundary(g, r)?,
        _ => min_boundary_edges(g, r)?,
    };
    let value = g.edge_count() - boundary;
    let certificate = boundary_complement_certificate(g, q)?;
    debug_assert_eq!(certificate.value(), value);
    Ok(Some(ExtremalResult { value, method, certificate: Some(certificate) }))
}

/// `l_q(G)` by the requested route. `Auto` tries the exceptional table, then
/// the two boundary-formula ranges, then the exact sequence solver.
pub fn ellq(g: &MultipartiteGraph, q: usize, method: Method, config: &Config) -> Result<ExtremalResult> {
    check_q(g, q)?;
    match method {
        Method::Auto => match closed_form(g, q, config)? {
            Some(r) => Ok(r),
            None => sequence_solver(g, q, config),
        },
        Method::ClosedForm => closed_form(g, q, config)?.ok_or_else(|| {
            Error::domain(format!(
                "no closed form covers q = {q} for n = {} (needs q >= n-3 or 5q >= 4n-2)",
                g.n()
            ))
        }),
        Method::SequenceSolver => sequence_solver(g, q, config),
        Method::Oracle => {
            let (value, certificate) = oracle::oracle_ellq(g, q, config.max_n)?;
            Ok(ExtremalResult { value, method: Route::Oracle, certificate: Some(certificate) })
        }
    }
}
