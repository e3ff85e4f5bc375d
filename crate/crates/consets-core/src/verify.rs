//! Per-graph checks of the known bounds, identities and conjectures on
//! connected-set statistics.
//!
//! Every check produces a [`Verdict`] with exact rational sides and margin;
//! nothing here touches floating point. Checks that do not apply to a graph
//! (for instance the bound checks on a disconnected input) are reported as
//! not applicable and never fail a run. Conjecture checks are report-only:
//! a violated conjecture is flagged as a counterexample candidate, which is
//! a result, not an error.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::connectivity::vertex_connectivity;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::stats::{connected_set_stats_with_budget, BudgetExceeded, ConnStats};
use crate::Ratio;

/// Identifier of one bound/identity check. The wire names (used in reports)
/// are fixed; [`CheckId::ALL`] lists the canonical evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// Average order is at least `(n+2)/3`, equality exactly for paths.
    Thm2PathBound,
    /// Density of a κ-connected graph is at least `2^{κ-1}/(2^κ+1)`.
    Thm3KconnDensity,
    /// Every rooted average is at least `(n+1)/2`.
    Thm4Rooted,
    /// `2Q ≥ (n+1)S`.
    Cor1SumSq,
    /// Double counting: `Σ_i N(G,i) = S` and `Σ_i S(G,i) = Q`.
    Identities,
    /// Vertex-deletion identity: `nS' - Q' = Σ_i S(G_i)` and
    /// `Σ_i N(G_i) = nN' - S'`.
    Thm3DeletionIdentity,
    /// Conjecture: minimum degree 3 forces density at least 1/2.
    Conj2MinDeg3,
    /// Trees whose internal vertices have degree at least 3 have density
    /// in `[1/2, 3/4)`.
    TreeBand,
}

impl CheckId {
    pub const ALL: [CheckId; 8] = [
        CheckId::Thm2PathBound,
        CheckId::Thm3KconnDensity,
        CheckId::Thm4Rooted,
        CheckId::Cor1SumSq,
        CheckId::Identities,
        CheckId::Thm3DeletionIdentity,
        CheckId::Conj2MinDeg3,
        CheckId::TreeBand,
    ];

    /// Stable identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            CheckId::Thm2PathBound => "thm2_path_bound",
            CheckId::Thm3KconnDensity => "thm3_kconn_density",
            CheckId::Thm4Rooted => "thm4_rooted",
            CheckId::Cor1SumSq => "cor1_sumsq",
            CheckId::Identities => "identities",
            CheckId::Thm3DeletionIdentity => "thm3_deletion_identity",
            CheckId::Conj2MinDeg3 => "conj2_mindeg3",
            CheckId::TreeBand => "tree_band",
        }
    }

    pub fn from_id(id: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.id() == id)
    }

    /// Conjecture checks never fail a verification run.
    pub fn is_conjecture(self) -> bool {
        matches!(self, CheckId::Conj2MinDeg3)
    }
}

/// Outcome of one check on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: CheckId,
    /// Whether the check's hypothesis holds for this graph. Non-applicable
    /// verdicts carry `passed = true`.
    pub applicable: bool,
    pub passed: bool,
    /// Whether the compared sides are exactly equal.
    pub equality: bool,
    /// Set when a conjecture check fails: the graph is a candidate
    /// counterexample, the scan's most valuable possible output.
    pub counterexample_candidate: bool,
    pub lhs: Ratio,
    pub rhs: Ratio,
    pub detail: String,
}

impl Verdict {
    fn not_applicable(check: CheckId, reason: &str) -> Verdict {
        Verdict {
            check,
            applicable: false,
            passed: true,
            equality: false,
            counterexample_candidate: false,
            lhs: Ratio::zero(),
            rhs: Ratio::zero(),
            detail: format!("not applicable: {reason}"),
        }
    }
}

/// Renders an exact rational as `numerator/denominator`, always with the
/// denominator (so `2` prints as `2/1`).
pub fn ratio_string(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn big(u: &BigUint) -> BigInt {
    BigInt::from(u.clone())
}

fn int_ratio(i: BigInt) -> Ratio {
    Ratio::from(i)
}

/// The density lower bound for κ-connected graphs:
/// `2^{k-1} / (2^k + 1)`, exactly, in lowest terms.
///
/// Panics if `k == 0`; the bound sequence starts at `k = 1` (value 1/3).
pub fn kconn_density_bound(k: usize) -> Ratio {
    assert!(k >= 1, "the density bound sequence starts at k = 1");
    let num = BigInt::one() << (k - 1);
    let den = (BigInt::one() << k) + 1;
    Ratio::new(num, den)
}

/// Verifies that the bound sequence satisfies its fixed-point recurrence
/// `b_k = 2 b_{k-1} / (2 b_{k-1} + 1)` exactly for `2 <= k <= k_max`, is
/// strictly increasing, and stays strictly below 1/2.
pub fn density_bound_recurrence_holds(k_max: usize) -> bool {
    assert!(k_max >= 2, "need at least two terms to test the recurrence");
    let half = Ratio::new(BigInt::one(), BigInt::from(2));
    let mut prev = kconn_density_bound(1);
    if prev >= half {
        return false;
    }
    for k in 2..=k_max {
        let cur = kconn_density_bound(k);
        let two_prev = Ratio::from(BigInt::from(2)) * &prev;
        let recurred = two_prev.clone() / (two_prev + Ratio::one());
        if cur != recurred || cur <= prev || cur >= half {
            return false;
        }
        prev = cur;
    }
    true
}

/// Average order is at least `(n+2)/3`, with equality exactly for paths.
pub fn check_path_bound(g: &Graph, st: &ConnStats) -> Verdict {
    let check = CheckId::Thm2PathBound;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    let n = st.order();
    let lhs = st.average_order();
    let rhs = Ratio::new(BigInt::from(n + 2), BigInt::from(3));
    let passed = lhs >= rhs;
    let equality = lhs == rhs;
    let is_path = g.is_path_graph();
    let mut detail = format!(
        "A={} bound={} margin={} path={is_path}",
        ratio_string(&lhs),
        ratio_string(&rhs),
        ratio_string(&(lhs.clone() - rhs.clone())),
    );
    if equality != is_path {
        // The equality case characterizes paths; a mismatch means a bug.
        detail.push_str(" SOUNDNESS-VIOLATION: equality/path mismatch");
    }
    Verdict {
        check,
        applicable: true,
        passed,
        equality,
        counterexample_candidate: false,
        lhs,
        rhs,
        detail,
    }
}

/// Density is at least the κ-connectivity bound, checked at `κ = κ(G)`
/// (the strongest instance; the bound increases with κ).
pub fn check_kconn_density(g: &Graph, st: &ConnStats) -> Verdict {
    let kappa = if st.full_set_connected() {
        vertex_connectivity(g)
    } else {
        0
    };
    check_kconn_density_at(st, kappa)
}

pub(crate) fn check_kconn_density_at(st: &ConnStats, kappa: usize) -> Verdict {
    let check = CheckId::Thm3KconnDensity;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    if kappa == 0 {
        return Verdict::not_applicable(check, "connectivity 0 (single vertex)");
    }
    let lhs = st.density();
    let rhs = kconn_density_bound(kappa);
    let passed = lhs >= rhs;
    let detail = format!(
        "k={kappa} D={} bound={} margin={}",
        ratio_string(&lhs),
        ratio_string(&rhs),
        ratio_string(&(lhs.clone() - rhs.clone())),
    );
    Verdict {
        check,
        applicable: true,
        passed,
        equality: lhs == rhs,
        counterexample_candidate: false,
        lhs,
        rhs,
        detail,
    }
}

/// Every rooted average is at least `(n+1)/2`; reports the minimizing vertex.
pub fn check_rooted_average_bound(st: &ConnStats) -> Verdict {
    let check = CheckId::Thm4Rooted;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    let n = st.order();
    let rhs = Ratio::new(BigInt::from(n + 1), BigInt::from(2));
    let mut min_v = 0usize;
    let mut min_avg = st.rooted_average(0);
    for v in 1..n {
        let avg = st.rooted_average(v);
        if avg < min_avg {
            min_avg = avg;
            min_v = v;
        }
    }
    let passed = min_avg >= rhs;
    let detail = format!(
        "min rooted average {} at v={min_v}, bound={} margin={}",
        ratio_string(&min_avg),
        ratio_string(&rhs),
        ratio_string(&(min_avg.clone() - rhs.clone())),
    );
    Verdict {
        check,
        applicable: true,
        passed,
        equality: min_avg == rhs,
        counterexample_candidate: false,
        lhs: min_avg,
        rhs,
        detail,
    }
}

/// `2Q ≥ (n+1)S`, by exact cross-multiplication.
pub fn check_sum_of_squares_bound(st: &ConnStats) -> Verdict {
    let check = CheckId::Cor1SumSq;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    let n = st.order();
    let lhs_int = big(st.size_sq_sum()) * 2;
    let rhs_int = big(st.size_sum()) * BigInt::from(n + 1);
    let passed = lhs_int >= rhs_int;
    let equality = lhs_int == rhs_int;
    let detail = format!("2Q={lhs_int} (n+1)S={rhs_int}");
    Verdict {
        check,
        applicable: true,
        passed,
        equality,
        counterexample_candidate: false,
        lhs: int_ratio(lhs_int),
        rhs: int_ratio(rhs_int),
        detail,
    }
}

/// Double counting of (vertex, set) incidences: the rooted counts sum to
/// `S` and the rooted size sums to `Q`. Holds for every graph, connected
/// or not.
pub fn check_double_counting(st: &ConnStats) -> Verdict {
    let n = st.order();
    let count_sum: BigUint = st.rooted_counts().iter().sum();
    let size_sum_sum: BigUint = st.rooted_size_sums().iter().sum();
    let first = &count_sum == st.size_sum();
    let second = &size_sum_sum == st.size_sq_sum();
    let passed = first && second;
    let detail = format!(
        "sum_i N(G,i)={count_sum} S={}; sum_i S(G,i)={size_sum_sum} Q={} ({n} vertices)",
        st.size_sum(),
        st.size_sq_sum(),
    );
    Verdict {
        check: CheckId::Identities,
        applicable: true,
        passed,
        equality: passed,
        counterexample_candidate: false,
        lhs: int_ratio(big(&count_sum)),
        rhs: int_ratio(big(st.size_sum())),
        detail,
    }
}

/// Vertex-deletion identity over `C' = C \ {V}`:
/// `nS' - Q' = Σ_i S(G_i)` and `Σ_i N(G_i) = nN' - S'`, where `G_i` ranges
/// over the `n` single-vertex deletions.
pub fn check_deletion_identity(
    g: &Graph,
    st: &ConnStats,
    budget: u64,
) -> Result<Verdict, BudgetExceeded> {
    let check = CheckId::Thm3DeletionIdentity;
    if !st.full_set_connected() {
        return Ok(Verdict::not_applicable(check, "graph is disconnected"));
    }
    let n = st.order();
    if n == 1 {
        return Ok(Verdict::not_applicable(check, "no vertex deletions on K_1"));
    }

    let n_int = BigInt::from(n);
    let count_rest = big(&st.count_excluding_full());
    let size_rest = big(&st.size_sum_excluding_full());
    let sq_rest = big(&st.size_sq_sum_excluding_full());

    let mut deleted_size_total = BigInt::zero();
    let mut deleted_count_total = BigInt::zero();
    for v in 0..n {
        let gi = g.delete_vertex(v).expect("order is at least 2");
        let sti = connected_set_stats_with_budget(&gi, budget)?;
        deleted_size_total += big(sti.size_sum());
        deleted_count_total += big(sti.count());
    }

    let lhs_int = &n_int * &size_rest - &sq_rest;
    let second_rhs = &n_int * &count_rest - &size_rest;
    let first = lhs_int == deleted_size_total;
    let second = deleted_count_total == second_rhs;
    let passed = first && second;
    let detail = format!(
        "nS'-Q'={lhs_int} sum_i S(G_i)={deleted_size_total}; sum_i N(G_i)={deleted_count_total} nN'-S'={second_rhs}"
    );
    Ok(Verdict {
        check,
        applicable: true,
        passed,
        equality: passed,
        counterexample_candidate: false,
        lhs: int_ratio(lhs_int),
        rhs: int_ratio(deleted_size_total),
        detail,
    })
}

/// Conjectured: a connected graph with minimum degree at least 3 has density
/// at least 1/2. Report-only; a failure flags a counterexample candidate.
pub fn check_min_degree_density(g: &Graph, st: &ConnStats) -> Verdict {
    let check = CheckId::Conj2MinDeg3;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    let delta = g.min_degree();
    if delta < 3 {
        return Verdict::not_applicable(check, "minimum degree below 3");
    }
    let lhs = st.density();
    let rhs = Ratio::new(BigInt::one(), BigInt::from(2));
    let passed = lhs >= rhs;
    let mut detail = format!(
        "min_degree={delta} D={} bound={} margin={}",
        ratio_string(&lhs),
        ratio_string(&rhs),
        ratio_string(&(lhs.clone() - rhs.clone())),
    );
    if !passed {
        detail = format!("COUNTEREXAMPLE CANDIDATE {}: {detail}", to_graph6(g));
    }
    Verdict {
        check,
        applicable: true,
        passed,
        equality: lhs == rhs,
        counterexample_candidate: !passed,
        lhs,
        rhs,
        detail,
    }
}

/// Trees whose every internal vertex has degree at least 3 have density in
/// `[1/2, 3/4)`. A leaf is a vertex of degree exactly 1, so the isolated
/// vertex does not qualify as a leaf and `K_1` is out of scope.
pub fn check_tree_density_band(g: &Graph, st: &ConnStats) -> Verdict {
    let check = CheckId::TreeBand;
    if !st.full_set_connected() {
        return Verdict::not_applicable(check, "graph is disconnected");
    }
    if !g.is_tree() {
        return Verdict::not_applicable(check, "not a tree");
    }
    if (0..g.order()).any(|v| matches!(g.degree(v), 0 | 2)) {
        return Verdict::not_applicable(check, "an internal vertex has degree below 3");
    }
    let d = st.density();
    let lower = Ratio::new(BigInt::one(), BigInt::from(2));
    let upper = Ratio::new(BigInt::from(3), BigInt::from(4));
    let passed = d >= lower && d < upper;
    let detail = format!(
        "D={} band=[{}, {}) margin_low={}",
        ratio_string(&d),
        ratio_string(&lower),
        ratio_string(&upper),
        ratio_string(&(d.clone() - lower.clone())),
    );
    Verdict {
        check,
        applicable: true,
        passed,
        equality: d == lower,
        counterexample_candidate: false,
        lhs: d,
        rhs: lower,
        detail,
    }
}

/// Everything [`verify_all`] knows about one graph.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub kappa: usize,
    pub stats: ConnStats,
    /// One verdict per check, in [`CheckId::ALL`] order.
    pub verdicts: Vec<Verdict>,
}

impl VerifyReport {
    /// Conjunction of all applicable theorem/corollary/identity checks;
    /// conjecture checks are report-only and never fail a run.
    pub fn overall_pass(&self) -> bool {
        self.verdicts
            .iter()
            .all(|v| v.check.is_conjecture() || v.passed)
    }

    pub fn counterexample_candidates(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.counterexample_candidate)
    }

    pub fn verdict(&self, check: CheckId) -> &Verdict {
        self.verdicts
            .iter()
            .find(|v| v.check == check)
            .expect("all checks are present")
    }
}

/// Runs every check on one graph, sharing a single statistics computation
/// and connectivity value. Propagates enumeration budget exhaustion (the
/// deletion identity enumerates each vertex-deleted subgraph under the same
/// budget).
pub fn verify_all(g: &Graph, budget: u64) -> Result<VerifyReport, BudgetExceeded> {
    let stats = connected_set_stats_with_budget(g, budget)?;
    verify_from_stats(g, stats, budget)
}

/// As [`verify_all`], but reusing statistics the caller already computed for
/// `g` (for instance by merging per-anchor runs).
pub fn verify_from_stats(
    g: &Graph,
    stats: ConnStats,
    budget: u64,
) -> Result<VerifyReport, BudgetExceeded> {
    let kappa = if stats.full_set_connected() {
        vertex_connectivity(g)
    } else {
        0
    };
    let verdicts = alloc::vec![
        check_path_bound(g, &stats),
        check_kconn_density_at(&stats, kappa),
        check_rooted_average_bound(&stats),
        check_sum_of_squares_bound(&stats),
        check_double_counting(&stats),
        check_deletion_identity(g, &stats, budget)?,
        check_min_degree_density(g, &stats),
        check_tree_density_band(g, &stats),
    ];
    Ok(VerifyReport {
        kappa,
        stats,
        verdicts,
    })
}
