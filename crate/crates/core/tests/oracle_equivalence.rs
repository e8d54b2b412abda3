use antiramsey::antiramsey::{anti_ramsey, ar_large_gap_fastpath, witness_coloring, Coloring};
use antiramsey::extremal::{ellq, in_large_gap_range, in_small_gap_range, sequence_solver, Config, Method, Route};
use antiramsey::graph::{enumerate_graphs, enumerate_graphs_by_edges, MultipartiteGraph, VertexSelection};
use antiramsey::greedy::{algorithm_a, is_min_selection};
use antiramsey::oracle::{max_induced_subgraph, oracle_ar, oracle_ellq};
use antiramsey::scan::{scan, ScanOptions};
use proptest::prelude::*;

fn g(sizes: &[usize]) -> MultipartiteGraph {
    MultipartiteGraph::new(sizes).unwrap()
}

fn parts_strategy(max_k: usize, max_part: usize) -> impl Strategy<Value = MultipartiteGraph> {
    prop::collection::vec(1..=max_part, 2..=max_k).prop_map(|v| MultipartiteGraph::new(&v).unwrap())
}

fn selection_strategy() -> impl Strategy<Value = (MultipartiteGraph, VertexSelection)> {
    parts_strategy(5, 6).prop_flat_map(|graph| {
        let counts: Vec<_> = graph.parts().iter().map(|&p| 0..=p).collect();
        (Just(graph), counts)
            .prop_map(|(graph, counts)| {
                let sel = VertexSelection::new(&graph, counts).unwrap();
                (graph, sel)
            })
    })
}

/// Per-part counts of `T` are optimal for `|T| = b` exactly when no part is
/// two ahead of another part that still has vertices outside `T`.
fn balanced(graph: &MultipartiteGraph, t: &[usize]) -> bool {
    (0..graph.k()).all(|i| (0..graph.k()).all(|j| i == j || t[i] < t[j] + 2 || t[j] == graph.part(j)))
}

/// The explicit optimal shape for `b` vertices: with `a` the conjugate of
/// the part sizes, `h` is the level where the prefix sums of `a` reach `b`;
/// parts of size at most `h-2` are taken whole, all others contribute `h-1`
/// or `h`, and exactly `b - (a_1 + ... + a_{h-1})` of them contribute `h`.
fn level_shape(graph: &MultipartiteGraph, b: usize, t: &[usize]) -> bool {
    let a = graph.conjugate_parts();
    let mut below = 0;
    let mut h = 1;
    while below + a[h - 1] < b {
        below += a[h - 1];
        h += 1;
    }
    let shape_ok = (0..graph.k()).all(|i| {
        let p = graph.part(i);
        if p + 2 <= h {
            t[i] == p
        } else {
            t[i] + 1 >= h && t[i] <= h
        }
    });
    shape_ok && t.iter().filter(|&&x| x == h).count() == b - below
}

fn all_shapes(graph: &MultipartiteGraph, b: usize) -> Vec<Vec<usize>> {
    fn rec(parts: &[usize], left: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == parts.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for a in 0..=parts[acc.len()].min(left) {
            acc.push(a);
            rec(parts, left - a, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(graph.parts(), b, &mut Vec::new(), &mut out);
    out
}

#[test]
fn densest_induced_subgraph_characterizations_agree() {
    for graph in enumerate_graphs(8) {
        for b in 1..=graph.n() {
            let (best, maximizers) = max_induced_subgraph(&graph, b, 8).unwrap();
            for t in all_shapes(&graph, b) {
                let is_max = maximizers.contains(&t);
                assert_eq!(is_max, balanced(&graph, &t), "K_{{{graph}}}, b = {b}, shape {t:?}");
                assert_eq!(is_max, level_shape(&graph, b, &t), "K_{{{graph}}}, b = {b}, shape {t:?}");
            }
            // all maximizers induce isomorphic graphs
            let mut multisets: Vec<Vec<usize>> = maximizers
                .iter()
                .map(|t| {
                    let mut s = t.clone();
                    s.sort_unstable();
                    s
                })
                .collect();
            multisets.dedup();
            assert_eq!(multisets.len(), 1, "K_{{{graph}}}, b = {b}");
            let sel = VertexSelection::new(&graph, maximizers[0].clone()).unwrap();
            assert_eq!(graph.induced_edge_count(&sel).unwrap(), best);
            // the complement of a maximizer is a minimum-boundary selection
            assert!(is_min_selection(&graph, &sel.complement(&graph).unwrap()).unwrap());
        }
    }
}

#[test]
fn conjugate_example() {
    assert_eq!(g(&[4, 3, 1]).conjugate_parts(), vec![3, 2, 2, 1]);
    assert_eq!(max_induced_subgraph(&g(&[4, 3, 1]), 5, 10).unwrap(), (8, vec![vec![2, 2, 1]]));
}

#[test]
fn every_route_agrees_with_the_partition_oracle() {
    let config = Config::default();
    for graph in enumerate_graphs(9) {
        for q in 2..graph.n() {
            let (truth, cert) = oracle_ellq(&graph, q, 9).unwrap();
            assert!(cert.is_feasible(q));
            assert_eq!(cert.value(), truth);
            let solved = sequence_solver(&graph, q, &config).unwrap();
            assert_eq!(solved.value, truth, "solver on K_{{{graph}}}, q = {q}");
            let c = solved.certificate.unwrap();
            assert!(c.is_feasible(q) && c.value() == truth);
            if let Ok(closed) = ellq(&graph, q, Method::ClosedForm, &config) {
                assert_eq!(closed.value, truth, "closed form on K_{{{graph}}}, q = {q}");
            }
        }
    }
}

#[test]
fn boundary_formula_identity() {
    // off the exceptional table, the formula ranges give 1 + |E| - |E_G(S_0)|
    let config = Config::default();
    for graph in enumerate_graphs(12) {
        for q in 2..graph.n() {
            if !(in_small_gap_range(&graph, q) || in_large_gap_range(&graph, q)) {
                continue;
            }
            let r = anti_ramsey(&graph, q, Method::Auto, &config).unwrap();
            if r.method == Route::Exceptional {
                continue;
            }
            let s0 = algorithm_a(&graph, graph.n() - q + 1).unwrap().selection;
            let boundary = graph.boundary_edge_count(&s0).unwrap();
            assert_eq!(r.value, 1 + graph.edge_count() - boundary, "K_{{{graph}}}, q = {q}");
        }
    }
}

#[test]
fn witnesses_round_trip_through_text() {
    let config = Config::default();
    for graph in enumerate_graphs(7) {
        for q in 2..graph.n() {
            let w = witness_coloring(&graph, q, &config).unwrap();
            let (back, q2) = Coloring::parse_witness(&w.to_witness_text(q)).unwrap();
            assert_eq!((back, q2), (w, q));
        }
    }
}

#[test]
fn oracle_witnesses_are_rainbow_free() {
    for graph in enumerate_graphs_by_edges(8) {
        for q in 2..graph.n() {
            let (t, w) = oracle_ar(&graph, q, 8).unwrap();
            assert_eq!(w.t() as u64, t);
            assert!(antiramsey::oracle::find_rainbow_tree(&w, q).unwrap().is_none());
        }
    }
}

#[test]
fn scan_is_deterministic() {
    let options = ScanOptions { max_n: 7, max_edges: 10, two_thirds_probe: true };
    let (a, ea) = scan(&options, &Config::default());
    let (b, eb) = scan(&options, &Config::default());
    assert!(ea.is_none() && eb.is_none());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.summary.disagreements, 0);
    let strict: Vec<_> = a.summary.strict_gap_hits.iter().map(|h| (h.parts.clone(), h.q)).collect();
    assert_eq!(strict, vec![(vec![3, 3], 4), (vec![4, 3], 4)]);
}

#[test]
#[ignore = "extended coloring-oracle run over |E| <= 12; about a minute in release"]
fn ar_matches_coloring_oracle_up_to_twelve_edges() {
    use rayon::prelude::*;
    let pairs: Vec<_> = enumerate_graphs_by_edges(12)
        .into_iter()
        .flat_map(|graph| (2..graph.n()).map(move |q| (graph.clone(), q)))
        .collect();
    pairs.par_iter().for_each(|(graph, q)| {
        let fast = anti_ramsey(graph, *q, Method::Auto, &Config::default()).unwrap().value;
        let (truth, _) = oracle_ar(graph, *q, 12).unwrap();
        assert_eq!(fast, truth, "K_{{{graph}}}, q = {q}");
    });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn boundary_and_complement_partition_the_edges((graph, sel) in selection_strategy()) {
        let rest = sel.complement(&graph).unwrap();
        let boundary = graph.boundary_edge_count(&sel).unwrap();
        prop_assert_eq!(boundary + graph.induced_edge_count(&rest).unwrap(), graph.edge_count());
        let picks: Vec<usize> = sel.counts().iter().enumerate().flat_map(|(i, &a)| std::iter::repeat_n(i, a)).collect();
        if !picks.is_empty() {
            prop_assert_eq!(graph.boundary_from_picks(&picks).unwrap(), boundary);
        }
    }

    #[test]
    fn ar_is_monotone_in_q(graph in parts_strategy(4, 4)) {
        let config = Config::default();
        let values: Vec<u64> = (2..graph.n())
            .map(|q| anti_ramsey(&graph, q, Method::Auto, &config).unwrap().value)
            .collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]), "{:?}", values);
    }

    #[test]
    fn auto_matches_the_solver(graph in parts_strategy(5, 4), q_frac in 0.0f64..1.0) {
        let q = 2 + ((graph.n() - 2) as f64 * q_frac) as usize;
        prop_assume!(q < graph.n());
        let config = Config::default();
        let auto = ellq(&graph, q, Method::Auto, &config).unwrap();
        let solved = sequence_solver(&graph, q, &config).unwrap();
        prop_assert_eq!(auto.value, solved.value);
        prop_assert!(auto.certificate.unwrap().is_feasible(q));
    }

    #[test]
    fn fast_path_agrees_when_present(graph in parts_strategy(4, 7), q_frac in 0.0f64..1.0) {
        let q = 2 + ((graph.n() - 2) as f64 * q_frac) as usize;
        prop_assume!(q < graph.n());
        if let Some(v) = ar_large_gap_fastpath(&graph, q) {
            prop_assert_eq!(v, anti_ramsey(&graph, q, Method::Auto, &Config::default()).unwrap().value);
        }
    }
}
