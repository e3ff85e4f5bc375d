//! Exact machinery for connected vertex sets of small graphs.
//!
//! A *connected set* of a graph is a nonempty vertex subset whose induced
//! subgraph is connected. This crate enumerates the connected sets of simple
//! undirected graphs on up to 64 vertices (one adjacency bitmask per vertex,
//! one `u64` per subset) and computes, in exact arbitrary-precision
//! arithmetic, the derived invariants:
//!
//! * `N` — the number of connected sets,
//! * `S` — the sum of their sizes, and `Q` — the sum of their squared sizes,
//! * per-vertex rooted counterparts (sets containing a given vertex),
//! * the average order `A = S/N` and the density `D = S/(nN)`,
//!
//! together with a [`verify`] module that checks the known lower bounds,
//! identities and conjectured bounds on these invariants graph by graph,
//! reporting exact rational margins.
//!
//! The crate is `no_std` (it allocates, but performs no IO); the companion
//! `consets-cli` crate wraps it in a command-line scanner over graph6
//! streams.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod connectivity;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod stats;
pub mod verify;

pub use connectivity::vertex_connectivity;
pub use enumerate::{enumerate_connected_sets, ConnectedSets};
pub use graph::{make_generator, GenKind, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use stats::{
    brute_force_stats, connected_set_stats, connected_set_stats_with_budget, stats_for_anchor,
    BudgetExceeded, ConnStats, OracleLimitExceeded,
};
pub use verify::{
    check_deletion_identity, check_double_counting, check_kconn_density, check_min_degree_density,
    check_path_bound, check_rooted_average_bound, check_sum_of_squares_bound,
    check_tree_density_band, density_bound_recurrence_holds, kconn_density_bound, ratio_string,
    verify_all, verify_from_stats, CheckId, Verdict, VerifyReport,
};

// Re-exported so downstream crates can work with the exact counter types
// without naming the arithmetic backend themselves.
pub use num_bigint::{BigInt, BigUint};

/// Exact rational number in lowest terms with positive denominator.
///
/// All averages, densities, bounds and margins are values of this type;
/// comparisons are exact (cross-multiplication), never floating point.
pub type Ratio = num_rational::BigRational;
