//! Exact statistics over the connected sets of a graph.
//!
//! [`connected_set_stats`] accumulates, in one pass of the anchored
//! enumeration and without materializing any set, the count `N`, the size
//! sum `S`, the squared-size sum `Q`, and for every vertex the rooted count
//! and rooted size sum (over the connected sets containing that vertex).
//! All published counters are arbitrary-precision integers; derived averages
//! are exact rationals.
//!
//! [`brute_force_stats`] recomputes the same statistics by testing each of
//! the `2^n - 1` nonempty subsets for connectivity by traversal. It shares
//! no code with the enumeration walk and serves as the independent oracle.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::enumerate::{above, Frame};
use crate::graph::{BitIter, Graph, VertexSet};
use crate::Ratio;

/// Enumeration aborted because a graph has more connected sets than the
/// caller's budget allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub budget: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "more than {} connected sets; enumeration budget exceeded",
            self.budget
        )
    }
}

impl core::error::Error for BudgetExceeded {}

/// The subset-sweep oracle refuses orders above 20 (`2^n` subsets).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimitExceeded {
    pub order: usize,
}

impl fmt::Display for OracleLimitExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "brute-force oracle supports at most 20 vertices, got {}",
            self.order
        )
    }
}

impl core::error::Error for OracleLimitExceeded {}

/// Exact connected-set statistics of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnStats {
    n: usize,
    count: BigUint,
    size_sum: BigUint,
    size_sq_sum: BigUint,
    rooted_count: Vec<BigUint>,
    rooted_size_sum: Vec<BigUint>,
    full_set_connected: bool,
}

impl ConnStats {
    /// Order of the underlying graph.
    pub fn order(&self) -> usize {
        self.n
    }

    /// `N`: number of connected sets.
    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// `S`: sum of the sizes of all connected sets.
    pub fn size_sum(&self) -> &BigUint {
        &self.size_sum
    }

    /// `Q`: sum of the squared sizes of all connected sets.
    pub fn size_sq_sum(&self) -> &BigUint {
        &self.size_sq_sum
    }

    /// Number of connected sets containing vertex `v`.
    pub fn rooted_count(&self, v: usize) -> &BigUint {
        &self.rooted_count[v]
    }

    /// Sum of sizes of the connected sets containing vertex `v`.
    pub fn rooted_size_sum(&self, v: usize) -> &BigUint {
        &self.rooted_size_sum[v]
    }

    pub fn rooted_counts(&self) -> &[BigUint] {
        &self.rooted_count
    }

    pub fn rooted_size_sums(&self) -> &[BigUint] {
        &self.rooted_size_sum
    }

    /// Whether the full vertex set is itself connected, i.e. whether the
    /// graph is connected. Exactly then is `V` one of the counted sets.
    pub fn full_set_connected(&self) -> bool {
        self.full_set_connected
    }

    /// Count of connected sets other than the full vertex set.
    pub fn count_excluding_full(&self) -> BigUint {
        if self.full_set_connected {
            &self.count - 1u32
        } else {
            self.count.clone()
        }
    }

    /// Size sum over connected sets other than the full vertex set.
    pub fn size_sum_excluding_full(&self) -> BigUint {
        if self.full_set_connected {
            &self.size_sum - BigUint::from(self.n)
        } else {
            self.size_sum.clone()
        }
    }

    /// Squared-size sum over connected sets other than the full vertex set.
    pub fn size_sq_sum_excluding_full(&self) -> BigUint {
        if self.full_set_connected {
            &self.size_sq_sum - BigUint::from(self.n * self.n)
        } else {
            self.size_sq_sum.clone()
        }
    }

    /// Average order of a connected set: `S / N`, reduced.
    pub fn average_order(&self) -> Ratio {
        Ratio::new(big(&self.size_sum), big(&self.count))
    }

    /// Density of connected sets: `S / (n N)`, reduced.
    pub fn density(&self) -> Ratio {
        Ratio::new(big(&self.size_sum), BigInt::from(self.n) * big(&self.count))
    }

    /// Average order over the connected sets containing `v`, reduced.
    /// Always defined: the singleton `{v}` is connected.
    pub fn rooted_average(&self, v: usize) -> Ratio {
        Ratio::new(big(&self.rooted_size_sum[v]), big(&self.rooted_count[v]))
    }

    /// Adds the counters of a disjoint part of the enumeration (another
    /// anchor of the same graph). The merged totals are bit-identical to a
    /// single-pass run.
    pub fn merge(&mut self, other: &ConnStats) {
        assert_eq!(self.n, other.n, "merging stats of different orders");
        self.count += &other.count;
        self.size_sum += &other.size_sum;
        self.size_sq_sum += &other.size_sq_sum;
        for v in 0..self.n {
            self.rooted_count[v] += &other.rooted_count[v];
            self.rooted_size_sum[v] += &other.rooted_size_sum[v];
        }
        self.full_set_connected |= other.full_set_connected;
    }
}

#[inline]
fn big(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

/// Machine-word accumulators for the hot loop. The budget cap keeps every
/// field far below overflow: at most `2^64` sets of size at most 64.
struct Acc {
    count: u64,
    size_sum: u128,
    size_sq_sum: u128,
    rooted_count: [u64; 64],
    rooted_size_sum: [u128; 64],
    full_seen: bool,
}

impl Acc {
    fn new() -> Acc {
        Acc {
            count: 0,
            size_sum: 0,
            size_sq_sum: 0,
            rooted_count: [0; 64],
            rooted_size_sum: [0; 64],
            full_seen: false,
        }
    }

    #[inline]
    fn emit(&mut self, set: u64, full: u64, budget: u64) -> Result<(), BudgetExceeded> {
        if self.count >= budget {
            return Err(BudgetExceeded { budget });
        }
        self.count += 1;
        let k = set.count_ones() as u128;
        self.size_sum += k;
        self.size_sq_sum += k * k;
        if set == full {
            self.full_seen = true;
        }
        Ok(())
    }

    fn finish(self, n: usize) -> ConnStats {
        ConnStats {
            n,
            count: BigUint::from(self.count),
            size_sum: BigUint::from(self.size_sum),
            size_sq_sum: BigUint::from(self.size_sq_sum),
            rooted_count: self.rooted_count[..n]
                .iter()
                .map(|&c| BigUint::from(c))
                .collect(),
            rooted_size_sum: self.rooted_size_sum[..n]
                .iter()
                .map(|&s| BigUint::from(s))
                .collect(),
            full_set_connected: self.full_seen,
        }
    }
}

/// Expansion-tree frame plus the subtree totals needed for rooted counters.
///
/// Every set in the subtree of a frame contains the vertex the frame added,
/// so rooted counters are settled once per frame when it is popped, instead
/// of once per vertex per emitted set.
struct StatFrame {
    frame: Frame,
    added: u8,
    sub_count: u64,
    sub_size_sum: u128,
}

fn walk_anchor(g: &Graph, r: usize, budget: u64, acc: &mut Acc) -> Result<(), BudgetExceeded> {
    let above_anchor = above(r);
    let full = g.full_mask();
    let root = Frame::anchor_root(g, r);
    acc.emit(root.set, full, budget)?;
    let mut stack: Vec<StatFrame> = Vec::with_capacity(g.order());
    stack.push(StatFrame {
        frame: root,
        added: r as u8,
        sub_count: 1,
        sub_size_sum: 1,
    });

    while let Some(top) = stack.last_mut() {
        if top.frame.ext != 0 {
            let parent_set = top.frame.set;
            let child = top.frame.split_lowest(g, above_anchor);
            acc.emit(child.set, full, budget)?;
            let added = (child.set & !parent_set).trailing_zeros() as u8;
            stack.push(StatFrame {
                frame: child,
                added,
                sub_count: 1,
                sub_size_sum: child.set.count_ones() as u128,
            });
        } else {
            let f = stack.pop().expect("stack top exists");
            settle(&mut stack, f, acc);
        }
    }
    Ok(())
}

#[inline]
fn settle(stack: &mut [StatFrame], f: StatFrame, acc: &mut Acc) {
    acc.rooted_count[f.added as usize] += f.sub_count;
    acc.rooted_size_sum[f.added as usize] += f.sub_size_sum;
    if let Some(parent) = stack.last_mut() {
        parent.sub_count += f.sub_count;
        parent.sub_size_sum += f.sub_size_sum;
    }
}

/// Exact statistics by a single enumeration pass, no budget.
pub fn connected_set_stats(g: &Graph) -> ConnStats {
    connected_set_stats_with_budget(g, u64::MAX).expect("unlimited budget")
}

/// Exact statistics, aborting with [`BudgetExceeded`] as soon as more than
/// `budget` connected sets have been seen.
pub fn connected_set_stats_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<ConnStats, BudgetExceeded> {
    let mut acc = Acc::new();
    for r in 0..g.order() {
        walk_anchor(g, r, budget, &mut acc)?;
    }
    Ok(acc.finish(g.order()))
}

/// Statistics restricted to the connected sets whose smallest vertex is
/// `anchor`. Merging the results for all anchors with [`ConnStats::merge`]
/// reproduces [`connected_set_stats`] bit-exactly.
pub fn stats_for_anchor(
    g: &Graph,
    anchor: usize,
    budget: u64,
) -> Result<ConnStats, BudgetExceeded> {
    assert!(anchor < g.order(), "anchor out of range");
    let mut acc = Acc::new();
    walk_anchor(g, anchor, budget, &mut acc)?;
    Ok(acc.finish(g.order()))
}

/// Independent oracle: sweeps all `2^n - 1` nonempty subsets, testing each
/// for connectivity by traversal. Rejects orders above 20.
pub fn brute_force_stats(g: &Graph) -> Result<ConnStats, OracleLimitExceeded> {
    let n = g.order();
    if n > 20 {
        return Err(OracleLimitExceeded { order: n });
    }
    let full = g.full_mask();
    let mut acc = Acc::new();
    for mask in 1..=full {
        if g.induced_is_connected(VertexSet::from_mask(mask)) {
            acc.count += 1;
            let k = mask.count_ones() as u128;
            acc.size_sum += k;
            acc.size_sq_sum += k * k;
            for v in BitIter(mask) {
                acc.rooted_count[v] += 1;
                acc.rooted_size_sum[v] += k;
            }
            if mask == full {
                acc.full_seen = true;
            }
        }
    }
    Ok(acc.finish(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn uints(vals: &[u64]) -> Vec<BigUint> {
        vals.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn path3_counters() {
        let st = connected_set_stats(&graph::path(3).unwrap());
        assert_eq!(st.count(), &BigUint::from(6u32));
        assert_eq!(st.size_sum(), &BigUint::from(10u32));
        assert_eq!(st.size_sq_sum(), &BigUint::from(20u32));
        assert_eq!(st.rooted_counts(), &uints(&[3, 4, 3])[..]);
        assert_eq!(st.rooted_size_sums(), &uints(&[6, 8, 6])[..]);
        assert!(st.full_set_connected());
    }

    #[test]
    fn complete3_counters() {
        let st = connected_set_stats(&graph::complete(3).unwrap());
        assert_eq!(st.count(), &BigUint::from(7u32));
        assert_eq!(st.size_sum(), &BigUint::from(12u32));
        assert_eq!(st.size_sq_sum(), &BigUint::from(24u32));
        assert_eq!(st.rooted_counts(), &uints(&[4, 4, 4])[..]);
        assert_eq!(st.rooted_size_sums(), &uints(&[8, 8, 8])[..]);
    }

    #[test]
    fn single_vertex_counters() {
        let st = connected_set_stats(&graph::complete(1).unwrap());
        assert_eq!(st.count(), &BigUint::from(1u32));
        assert_eq!(st.size_sum(), &BigUint::from(1u32));
        assert_eq!(st.size_sq_sum(), &BigUint::from(1u32));
        assert!(st.full_set_connected());
        assert_eq!(st.average_order(), Ratio::from(BigInt::from(1)));
    }

    #[test]
    fn oracle_values_cross_checked_by_closed_forms() {
        // Subpath count: sum over lengths l of l occurrences... for P_n the
        // connected sets are the n-l+1 subpaths of each length l.
        let p4 = brute_force_stats(&graph::path(4).unwrap()).unwrap();
        assert_eq!(p4.count(), &BigUint::from(10u32));
        assert_eq!(p4.size_sum(), &BigUint::from(20u32));
        assert_eq!(p4.size_sq_sum(), &BigUint::from(50u32));

        // Binomial sums for the complete graph.
        let k4 = brute_force_stats(&graph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.count(), &BigUint::from(15u32));
        assert_eq!(k4.size_sum(), &BigUint::from(32u32));
        assert_eq!(k4.size_sq_sum(), &BigUint::from(80u32));

        let c4 = brute_force_stats(&graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.count(), &BigUint::from(13u32));
        assert_eq!(c4.size_sum(), &BigUint::from(28u32));
        assert_eq!(c4.size_sq_sum(), &BigUint::from(72u32));
    }

    #[test]
    fn averages_and_density() {
        let p3 = connected_set_stats(&graph::path(3).unwrap());
        assert_eq!(p3.average_order(), Ratio::new(5.into(), 3.into()));

        let k3 = connected_set_stats(&graph::complete(3).unwrap());
        assert_eq!(k3.average_order(), Ratio::new(12.into(), 7.into()));
        assert_eq!(k3.density(), Ratio::new(4.into(), 7.into()));

        let c4 = connected_set_stats(&graph::cycle(4).unwrap());
        assert_eq!(c4.density(), Ratio::new(7.into(), 13.into()));
    }

    #[test]
    fn rooted_averages() {
        let p3 = connected_set_stats(&graph::path(3).unwrap());
        assert_eq!(p3.rooted_average(1), Ratio::from(BigInt::from(2)));

        let s3 = connected_set_stats(&graph::star(3).unwrap());
        assert_eq!(s3.rooted_average(0), Ratio::new(5.into(), 2.into()));
        assert_eq!(s3.rooted_average(1), Ratio::new(13.into(), 5.into()));
    }

    #[test]
    fn budget_signal() {
        let g = graph::path(5).unwrap();
        assert_eq!(
            connected_set_stats_with_budget(&g, 3),
            Err(BudgetExceeded { budget: 3 })
        );
        // Exactly N sets fit in a budget of N.
        assert!(connected_set_stats_with_budget(&g, 15).is_ok());
        assert_eq!(
            connected_set_stats_with_budget(&g, 14),
            Err(BudgetExceeded { budget: 14 })
        );
    }

    #[test]
    fn anchor_merge_matches_single_pass() {
        let g = graph::hypercube(3).unwrap();
        let whole = connected_set_stats(&g);
        let mut merged = stats_for_anchor(&g, 0, u64::MAX).unwrap();
        for r in 1..g.order() {
            merged.merge(&stats_for_anchor(&g, r, u64::MAX).unwrap());
        }
        assert_eq!(whole, merged);
    }

    #[test]
    fn disconnected_graphs_are_legal() {
        let g = graph::Graph::edgeless(3).unwrap();
        let st = connected_set_stats(&g);
        assert_eq!(st.count(), &BigUint::from(3u32));
        assert_eq!(st.size_sum(), &BigUint::from(3u32));
        assert!(!st.full_set_connected());
        assert_eq!(st.count_excluding_full(), BigUint::from(3u32));
    }

    #[test]
    fn excluding_full_accessors() {
        let st = connected_set_stats(&graph::cycle(4).unwrap());
        assert_eq!(st.count_excluding_full(), BigUint::from(12u32));
        assert_eq!(st.size_sum_excluding_full(), BigUint::from(24u32));
        assert_eq!(st.size_sq_sum_excluding_full(), BigUint::from(56u32));
    }
}
