//! Vertex connectivity by Menger's theorem.
//!
//! For non-adjacent vertices `s, t`, the maximum number of internally
//! disjoint `s`-`t` paths equals the minimum number of vertices whose
//! deletion separates them. Splitting every vertex into an in/out pair with
//! a unit-capacity arc turns that into a max-flow problem; the connectivity
//! is the minimum over all non-adjacent pairs. Complete graphs have no such
//! pair and get the conventional value `n - 1`.

use alloc::vec::Vec;

use crate::graph::Graph;

/// κ(G): the minimum number of vertex deletions that disconnect the graph.
///
/// Returns 0 for disconnected graphs and for the single-vertex graph, and
/// `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }

    // κ ≤ δ: a minimum-degree vertex is non-adjacent to something, so the
    // pair sweep always finds a value at most δ. Start from that bound and
    // let each flow stop as soon as it cannot improve it.
    let mut best = g.min_degree();
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            if best == 1 {
                return 1; // connected graphs never go lower
            }
            best = best.min(net.max_disjoint_paths(s, t, best));
        }
    }
    best
}

const SPLIT_CAP: i32 = 1;

/// Dense residual network over the 2n split nodes: `2v` enters vertex `v`,
/// `2v + 1` leaves it.
struct SplitNetwork {
    nodes: usize,
    residual: Vec<i32>,
    base: Vec<i32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> SplitNetwork {
        let n = g.order();
        let nodes = 2 * n;
        let mut base = alloc::vec![0i32; nodes * nodes];
        let edge_cap = n as i32; // effectively unbounded
        for v in 0..n {
            base[2 * v * nodes + 2 * v + 1] = SPLIT_CAP;
            for u in g.neighbors(v).iter() {
                base[(2 * v + 1) * nodes + 2 * u] = edge_cap;
            }
        }
        SplitNetwork {
            nodes,
            residual: alloc::vec![0i32; nodes * nodes],
            base,
            parent: alloc::vec![u32::MAX; nodes],
            queue: Vec::with_capacity(nodes),
        }
    }

    /// Max internally disjoint paths between non-adjacent `s` and `t`,
    /// stopping early once the flow reaches `limit`.
    fn max_disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.residual.copy_from_slice(&self.base);
        let source = (2 * s + 1) as u32;
        let sink = (2 * t) as u32;
        let mut flow = 0usize;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    /// One breadth-first augmentation. Every augmenting path carries exactly
    /// one unit because it crosses some internal split arc.
    fn augment(&mut self, source: u32, sink: u32) -> bool {
        self.parent.fill(u32::MAX);
        self.parent[source as usize] = source;
        self.queue.clear();
        self.queue.push(source);
        let mut head = 0;
        'bfs: while head < self.queue.len() {
            let u = self.queue[head] as usize;
            head += 1;
            let row = u * self.nodes;
            for v in 0..self.nodes {
                if self.residual[row + v] > 0 && self.parent[v] == u32::MAX {
                    self.parent[v] = u as u32;
                    if v as u32 == sink {
                        break 'bfs;
                    }
                    self.queue.push(v as u32);
                }
            }
        }
        if self.parent[sink as usize] == u32::MAX {
            return false;
        }
        let mut v = sink as usize;
        while v as u32 != source {
            let u = self.parent[v] as usize;
            self.residual[u * self.nodes + v] -= 1;
            self.residual[v * self.nodes + u] += 1;
            v = u;
        }
        true
    }
}
