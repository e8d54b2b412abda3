//! Brute-force ground truth. Nothing here uses the formulas or the solver:
//! values come from enumerating labeled vertex subsets, vertex partitions and
//! edge colorings directly, so they can check the fast routes.

mod partitions;
mod rainbow;

pub use partitions::{max_induced_subgraph, min_boundary_shapes, oracle_ellq, oracle_min_boundary};
pub use rainbow::{find_rainbow_tree, oracle_ar, RainbowTree};
