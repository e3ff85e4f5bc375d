//! Helpers shared by the integration tests: independent oracles and
//! deterministic random graphs.

// Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use consets_core::{Graph, VertexSet};
use rand::Rng;

/// Vertex connectivity by exhaustive cut enumeration: the smallest vertex
/// subset whose removal leaves a disconnected graph on at least two
/// vertices, or `n - 1` when no cut disconnects (complete graphs).
///
/// Completely independent of the max-flow implementation; only viable for
/// small orders.
pub fn connectivity_by_cut_enumeration(g: &Graph) -> usize {
    let n = g.order();
    if !g.is_connected() {
        return 0;
    }
    let full = g.full_mask();
    let mut smallest = n - 1;
    for cut in 0u64..=full {
        let rest = full & !cut;
        if rest.count_ones() >= 2 && !g.induced_is_connected(VertexSet::from_mask(rest)) {
            smallest = smallest.min(cut.count_ones() as usize);
        }
    }
    smallest
}

/// Connected random graph: a random recursive tree plus each remaining
/// vertex pair independently with probability `extra_edge_p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra_edge_p: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    let tree = Graph::from_edges(n, &edges).unwrap();
    for j in 1..n {
        for i in 0..j {
            if !tree.has_edge(i, j) && rng.random_bool(extra_edge_p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}
