//! Simple undirected graphs on at most 64 vertices.
//!
//! A [`Graph`] stores one adjacency bitmask per vertex, so any vertex subset
//! is a single machine word ([`VertexSet`]) and neighborhood operations are
//! bitwise. Graphs are immutable after construction and safe to share across
//! threads.

use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the order of a graph, chosen so a vertex subset is one `u64`.
pub const MAX_VERTICES: usize = 64;

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices `{0, .., n-1}` of some graph, as a 64-bit mask.
///
/// The empty set is representable (and is the `Default`), but enumeration of
/// connected sets never emits it.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    mask: u64,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { mask: 0 };

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet { mask }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet { mask: bit(v) }
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.mask
    }

    /// Number of vertices in the set.
    #[inline]
    pub const fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.mask & bit(v) != 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet {
            mask: self.mask | bit(v),
        }
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(self.mask.trailing_zeros() as usize)
        }
    }

    /// Iterates over the vertices in increasing order.
    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.mask)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;

    fn into_iter(self) -> BitIter {
        BitIter(self.mask)
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for BitIter {}

/// Errors from graph construction and structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Requested or resulting order outside `1..=64`.
    OrderOutOfRange(usize),
    /// Vertex index `v` is not below the order `n`.
    VertexOutOfRange { v: usize, n: usize },
    /// An edge endpoint pair `(v, v)`.
    SelfLoop(usize),
    /// A generator was called with an invalid parameter list.
    GeneratorParam(&'static str),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderOutOfRange(n) => {
                write!(f, "graph order {n} outside supported range 1..=64")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::GeneratorParam(msg) => write!(f, "bad generator parameters: {msg}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Simple undirected graph on `1..=64` vertices, as per-vertex adjacency
/// bitmasks.
///
/// Invariants (enforced by every constructor):
/// * symmetry: `u ∈ adj[v]` iff `v ∈ adj[u]`,
/// * no self-loops: `v ∉ adj[v]`,
/// * no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: alloc::vec![0u64; n],
        })
    }

    /// Graph with the given edge list. Duplicate edges are harmless.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        g.debug_check_invariants();
        Ok(g)
    }

    /// Graph defined by a bitmask over the `n(n-1)/2` upper-triangle vertex
    /// pairs, in the column order `(0,1), (0,2), (1,2), (0,3), ...` (the same
    /// order graph6 uses). Only defined for `n(n-1)/2 <= 64`, i.e. `n <= 11`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let pairs = n * (n - 1) / 2;
        if pairs > 64 || (pairs < 64 && mask >> pairs != 0) {
            return Err(GraphError::GeneratorParam(
                "edge mask has bits beyond the vertex-pair count",
            ));
        }
        let mut g = Graph::edgeless(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask & bit(k) != 0 {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Mask of all `n` vertices.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    pub fn full_set(&self) -> VertexSet {
        VertexSet::from_mask(self.full_mask())
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree over all vertices.
    pub fn min_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .min()
            .expect("graphs are nonempty")
    }

    /// Edge list in upper-triangle column order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in BitIter(self.adj[j] & low_bits(j)) {
                out.push((i, j));
            }
        }
        out
    }

    /// A copy of this graph with edge `(u, v)` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let n = self.n;
        if u >= n {
            return Err(GraphError::VertexOutOfRange { v: u, n });
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        Ok(g)
    }

    /// Whether the whole graph is connected (a single vertex is connected).
    pub fn is_connected(&self) -> bool {
        self.induced_is_connected(self.full_set())
    }

    /// Whether the subgraph induced by `set` is connected.
    ///
    /// The empty set is reported as not connected, matching the convention
    /// that it is never a connected set.
    pub fn induced_is_connected(&self, set: VertexSet) -> bool {
        let target = set.mask();
        if target == 0 {
            return false;
        }
        debug_assert_eq!(target & !self.full_mask(), 0);
        let mut reached = target & target.wrapping_neg(); // lowest vertex
        let mut frontier = reached;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & target & !reached;
            reached |= frontier;
        }
        reached == target
    }

    /// Whether every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let full = self.full_mask();
        self.adj
            .iter()
            .enumerate()
            .all(|(v, &a)| a == full & !bit(v))
    }

    /// Whether the graph is a tree: connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Whether the graph is a path: connected and, beyond two vertices,
    /// exactly two endpoints of degree 1 with all other degrees 2.
    ///
    /// Single vertices and single edges count as paths.
    pub fn is_path_graph(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        if self.n <= 2 {
            return true;
        }
        let mut ones = 0usize;
        for v in 0..self.n {
            match self.degree(v) {
                1 => ones += 1,
                2 => {}
                _ => return false,
            }
        }
        ones == 2
    }

    /// The induced subgraph on `V \ {v}`, with the remaining vertices
    /// relabeled by order-preserving compaction (indices above `v` shift
    /// down by one).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let n = self.n;
        if v >= n {
            return Err(GraphError::VertexOutOfRange { v, n });
        }
        if n == 1 {
            return Err(GraphError::OrderOutOfRange(0));
        }
        let keep_low = low_bits(v);
        let compact = |a: u64| (a & keep_low) | ((a >> (v + 1)) << v);
        let adj = (0..n)
            .filter(|&u| u != v)
            .map(|u| compact(self.adj[u]))
            .collect();
        let g = Graph { n: n - 1, adj };
        g.debug_check_invariants();
        Ok(g)
    }

    /// Debug-build validation of the representation invariants.
    pub fn debug_check_invariants(&self) {
        if cfg!(debug_assertions) {
            let full = self.full_mask();
            for v in 0..self.n {
                debug_assert_eq!(self.adj[v] & !full, 0, "bits above order at vertex {v}");
                debug_assert_eq!(self.adj[v] & bit(v), 0, "self-loop at vertex {v}");
                for u in BitIter(self.adj[v]) {
                    debug_assert_ne!(self.adj[u] & bit(v), 0, "asymmetry at ({u},{v})");
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Graph families available from the generator interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
    Star,
    DoubleStar,
}

impl GenKind {
    pub const ALL: [GenKind; 7] = [
        GenKind::Path,
        GenKind::Cycle,
        GenKind::Complete,
        GenKind::CompleteBipartite,
        GenKind::Hypercube,
        GenKind::Star,
        GenKind::DoubleStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Path => "path",
            GenKind::Cycle => "cycle",
            GenKind::Complete => "complete",
            GenKind::CompleteBipartite => "complete_bipartite",
            GenKind::Hypercube => "hypercube",
            GenKind::Star => "star",
            GenKind::DoubleStar => "double_star",
        }
    }

    pub fn from_name(name: &str) -> Option<GenKind> {
        GenKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    /// Number of integer parameters the family takes.
    pub fn param_count(self) -> usize {
        match self {
            GenKind::CompleteBipartite | GenKind::DoubleStar => 2,
            _ => 1,
        }
    }
}

/// Builds a graph of the given family with canonical labeling.
///
/// * `path n`: vertices `0..n`, edges `{i, i+1}`.
/// * `cycle n` (`n >= 3`): the path plus `{n-1, 0}`.
/// * `complete n`: all pairs adjacent.
/// * `complete_bipartite a b`: parts `0..a` and `a..a+b`.
/// * `hypercube d` (`d <= 6`): vertices are the `2^d` bitmasks, adjacent at
///   Hamming distance 1.
/// * `star k`: center 0 with leaves `1..=k`.
/// * `double_star a b`: adjacent centers 0 and 1 carrying `a` and `b` leaves.
pub fn make_generator(kind: GenKind, params: &[usize]) -> Result<Graph, GraphError> {
    if params.len() != kind.param_count() {
        return Err(GraphError::GeneratorParam("wrong number of parameters"));
    }
    match kind {
        GenKind::Path => path(params[0]),
        GenKind::Cycle => cycle(params[0]),
        GenKind::Complete => complete(params[0]),
        GenKind::CompleteBipartite => complete_bipartite(params[0], params[1]),
        GenKind::Hypercube => hypercube(params[0]),
        GenKind::Star => star(params[0]),
        GenKind::DoubleStar => double_star(params[0], params[1]),
    }
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::edgeless(n)?;
    for i in 1..n {
        g.adj[i - 1] |= bit(i);
        g.adj[i] |= bit(i - 1);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::GeneratorParam(
            "cycles need at least 3 vertices",
        ));
    }
    let mut g = path(n)?;
    g.adj[n - 1] |= bit(0);
    g.adj[0] |= bit(n - 1);
    Ok(g)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::edgeless(n)?;
    let full = g.full_mask();
    for v in 0..n {
        g.adj[v] = full & !bit(v);
    }
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::GeneratorParam(
            "complete bipartite parts must be nonempty",
        ));
    }
    let n = a
        .checked_add(b)
        .ok_or(GraphError::GeneratorParam("order overflow"))?;
    let mut g = Graph::edgeless(n)?;
    let left = low_bits(a);
    let right = g.full_mask() & !left;
    for v in 0..a {
        g.adj[v] = right;
    }
    for v in a..n {
        g.adj[v] = left;
    }
    Ok(g)
}

pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d > 6 {
        return Err(GraphError::GeneratorParam(
            "hypercube dimension must be at most 6",
        ));
    }
    let n = 1usize << d;
    let mut g = Graph::edgeless(n)?;
    for v in 0..n {
        for i in 0..d {
            g.adj[v] |= bit(v ^ (1 << i));
        }
    }
    Ok(g)
}

pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    let n = leaves
        .checked_add(1)
        .ok_or(GraphError::GeneratorParam("order overflow"))?;
    let mut g = Graph::edgeless(n)?;
    for v in 1..n {
        g.adj[0] |= bit(v);
        g.adj[v] = bit(0);
    }
    Ok(g)
}

pub fn double_star(a: usize, b: usize) -> Result<Graph, GraphError> {
    let n = a
        .checked_add(b)
        .and_then(|s| s.checked_add(2))
        .ok_or(GraphError::GeneratorParam("order overflow"))?;
    let mut g = Graph::edgeless(n)?;
    g.adj[0] |= bit(1);
    g.adj[1] |= bit(0);
    for v in 2..2 + a {
        g.adj[0] |= bit(v);
        g.adj[v] = bit(0);
    }
    for v in 2 + a..n {
        g.adj[1] |= bit(v);
        g.adj[v] = bit(1);
    }
    Ok(g)
}
