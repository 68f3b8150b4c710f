//! Exact solvers on small graphs.

mod cliques;
mod cycles;
mod disintegration;
mod paths;
mod posa;
mod star_forest;
mod subgraph;

pub use cliques::{clique_number, clique_tally, count_cliques};
pub use cycles::{
    circumference, circumference_len, cycle_at_least, cycle_through_edge_at_least, has_cycle_at_least,
    longest_cycle_through_edge,
};
pub use disintegration::{disintegration, disintegration_in_order};
pub use paths::{
    all_longest_s_paths, greedy_maximal_path, hamilton_path_between_sets, longest_path_between, longest_s_path,
};
pub use posa::{crossing_pairs, posa_cycle, posa_guarantee, CrossingInfo, CrossingPair};
pub use star_forest::{is_star_forest, star_forest_after_deletion};
pub use subgraph::{contains_subgraph, is_embedding, Embedding};

pub(crate) use star_forest::next_combination;
