//! Regression scan: every small instance, fast routes against the oracles.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::antiramsey::anti_ramsey;
use crate::error::{Error, Result};
use crate::extremal::{boundary_complement_value, ellq, in_small_gap_range, Config, Method, Route};
use crate::graph::{enumerate_graphs, MultipartiteGraph};
use crate::oracle::{oracle_ar, oracle_ellq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub max_n: usize,
    pub max_edges: u64,
    /// Also check the boundary formula for `3q >= 2n+1` outside the proven ranges.
    pub two_thirds_probe: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Ellq,
    Ar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanInstance {
    pub parts: Vec<usize>,
    pub q: usize,
    pub quantity: Quantity,
    pub formula: u64,
    pub oracle: u64,
    pub method: Route,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Hit {
    pub parts: Vec<usize>,
    pub q: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: usize,
    /// Pairs answered from the exceptional table.
    pub exceptional_hits: Vec<Hit>,
    /// Pairs with `q >= n-3` where `l_q` exceeds `|E| - min boundary`.
    pub strict_gap_hits: Vec<Hit>,
}

/// Outcome of the optional `3q >= 2n+1` probe; exploratory only.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub instances: usize,
    pub boundary_formula_holds: usize,
    pub boundary_formula_fails: Vec<Hit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_n: usize,
    pub max_edges: u64,
    pub instances: Vec<ScanInstance>,
    pub summary: ScanSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeSummary>,
    /// Set when a cap stopped the scan; the report covers the instances before it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halted: Option<String>,
}

struct PairOutcome {
    instances: Vec<ScanInstance>,
    exceptional: bool,
    strict_gap: bool,
    probe: Option<bool>,
}

fn in_probe_range(g: &MultipartiteGraph, q: usize) -> bool {
    3 * q > 2 * g.n()
}

fn scan_pair(g: &MultipartiteGraph, q: usize, options: &ScanOptions, config: &Config) -> Result<PairOutcome> {
    let hit = ellq(g, q, Method::Auto, config)?;
    let (truth, _) = oracle_ellq(g, q, options.max_n)?;
    let mut instances = vec![ScanInstance {
        parts: g.parts().to_vec(),
        q,
        quantity: Quantity::Ellq,
        formula: hit.value,
        oracle: truth,
        method: hit.method,
        agree: hit.value == truth,
    }];
    if g.edge_count() <= options.max_edges {
        let ar = anti_ramsey(g, q, Method::Auto, config)?;
        let (colors, _) = oracle_ar(g, q, options.max_edges)?;
        instances.push(ScanInstance {
            parts: g.parts().to_vec(),
            q,
            quantity: Quantity::Ar,
            formula: ar.value,
            oracle: colors,
            method: ar.method,
            agree: ar.value == colors,
        });
    }
    let boundary = boundary_complement_value(g, q)?;
    let exceptional = hit.method == Route::Exceptional;
    Ok(PairOutcome {
        instances,
        exceptional,
        strict_gap: in_small_gap_range(g, q) && truth > boundary,
        probe: (options.two_thirds_probe && in_probe_range(g, q) && !exceptional).then_some(truth == boundary),
    })
}

/// Runs every multipartite graph with `n <= max_n` and every `2 <= q <= n-1`.
/// Pairs are evaluated in parallel; the report lists them by part vector,
/// then `q`. A resource error ends the report at the first failing pair and
/// is returned next to it.
pub fn scan(options: &ScanOptions, config: &Config) -> (ScanReport, Option<Error>) {
    let mut graphs = enumerate_graphs(options.max_n);
    graphs.sort_by(|a, b| a.parts().cmp(b.parts()));
    let pairs: Vec<(MultipartiteGraph, usize)> =
        graphs.into_iter().flat_map(|g| (2..g.n()).map(move |q| (g.clone(), q))).collect();
    let outcomes: Vec<Result<PairOutcome>> =
        pairs.par_iter().map(|(g, q)| scan_pair(g, *q, options, config)).collect();

    let mut report = ScanReport {
        max_n: options.max_n,
        max_edges: options.max_edges,
        instances: Vec::new(),
        summary: ScanSummary::default(),
        probe: options.two_thirds_probe.then(ProbeSummary::default),
        halted: None,
    };
    for ((g, q), outcome) in pairs.iter().zip(outcomes) {
        let outcome = match outcome {
            Ok(o) => o,
            Err(e) => {
                report.halted = Some(format!("K_{{{g}}}, q = {q}: {e}"));
                return (report, Some(e));
            }
        };
        let pair = Hit { parts: g.parts().to_vec(), q: *q };
        let s = &mut report.summary;
        for inst in &outcome.instances {
            s.instances += 1;
            if inst.agree {
                s.agreements += 1;
            } else {
                s.disagreements += 1;
            }
        }
        if outcome.exceptional {
            s.exceptional_hits.push(pair.clone());
        }
        if outcome.strict_gap {
            s.strict_gap_hits.push(pair.clone());
        }
        if let (Some(holds), Some(p)) = (outcome.probe, report.probe.as_mut()) {
            p.instances += 1;
            if holds {
                p.boundary_formula_holds += 1;
            } else {
                p.boundary_formula_fails.push(pair);
            }
        }
        report.instances.extend(outcome.instances);
    }
    (report, None)
}
