//! Anti-Ramsey numbers `ar(K_{p_1,...,p_k}, T_q)` of complete multipartite
//! graphs with respect to the family of trees with `q` edges.
//!
//! The value is `l_q(G) + 1`, where `l_q(G)` is the largest edge count of a
//! partition of `V(G)` into at least two induced blocks whose two largest
//! blocks hold at most `q` vertices together. [`extremal`] computes `l_q`,
//! [`greedy`] supplies the boundary minimization used by its closed forms,
//! and [`oracle`] holds the brute-force engines everything is tested against.

pub mod antiramsey;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod scan;

pub use antiramsey::{anti_ramsey, ar_large_gap_fastpath, witness_coloring, AntiRamseyResult, Coloring};
pub use error::{Error, Result};
pub use extremal::{ellq, Config, ExtremalResult, Method, Route};
pub use graph::{LabeledEdge, MultipartiteGraph, Vertex, VertexSelection};
