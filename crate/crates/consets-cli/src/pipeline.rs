//! The scan pipeline: per-graph work, optionally fanned out over a rayon
//! pool. Input order is restored on collection, so output is byte-identical
//! for any worker count.

use consets_core::{
    stats_for_anchor, to_graph6, verify_from_stats, vertex_connectivity, BudgetExceeded, ConnStats,
    Graph,
};
use rayon::prelude::*;

use crate::record::ScanRecord;
use crate::source::InputGraph;

#[derive(Clone, Copy)]
pub struct ScanOptions {
    /// Per-graph cap on the number of enumerated connected sets.
    pub budget: u64,
    pub jobs: usize,
    /// Split the enumeration of each single graph across its anchors.
    pub anchor_parallel: bool,
    /// Run the full verifier (false: statistics only).
    pub with_verdicts: bool,
}

/// Builds a rayon pool with the requested worker count and runs `f` in it.
pub fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    Ok(pool.install(f))
}

/// Processes all graphs, one task per graph, and returns records in input
/// order.
pub fn process_all(graphs: &[InputGraph], opts: ScanOptions) -> anyhow::Result<Vec<ScanRecord>> {
    with_pool(opts.jobs, || {
        graphs
            .par_iter()
            .map(|ig| process_one(ig, opts))
            .collect::<Vec<_>>()
    })
}

fn graph_stats(g: &Graph, opts: ScanOptions) -> Result<ConnStats, BudgetExceeded> {
    if opts.anchor_parallel && g.order() > 1 {
        let parts = (0..g.order())
            .into_par_iter()
            .map(|r| stats_for_anchor(g, r, opts.budget))
            .collect::<Result<Vec<_>, _>>()?;
        let mut it = parts.into_iter();
        let mut total = it.next().expect("order is positive");
        for part in it {
            total.merge(&part);
        }
        // The per-anchor budget bounds each part; enforce it on the total
        // too so the signal matches the sequential run.
        if total.count() > &consets_core::BigUint::from(opts.budget) {
            return Err(BudgetExceeded {
                budget: opts.budget,
            });
        }
        Ok(total)
    } else {
        consets_core::connected_set_stats_with_budget(g, opts.budget)
    }
}

/// Exact per-graph values the extremal ledger folds over.
pub struct GraphSummary {
    pub n: usize,
    pub kappa: usize,
    pub avg: consets_core::Ratio,
    pub density: consets_core::Ratio,
    pub graph6: String,
}

/// Computes fold data for every graph; `None` marks budget-skipped graphs.
pub fn summarize_all(
    graphs: &[InputGraph],
    opts: ScanOptions,
) -> anyhow::Result<Vec<Option<GraphSummary>>> {
    with_pool(opts.jobs, || {
        graphs
            .par_iter()
            .map(|ig| {
                let g = &ig.graph;
                let stats = graph_stats(g, opts).ok()?;
                Some(GraphSummary {
                    n: g.order(),
                    kappa: vertex_connectivity(g),
                    avg: stats.average_order(),
                    density: stats.density(),
                    graph6: to_graph6(g),
                })
            })
            .collect()
    })
}

pub fn process_one(ig: &InputGraph, opts: ScanOptions) -> ScanRecord {
    let g = &ig.graph;
    let graph6 = to_graph6(g);
    let m = g.edge_count();
    let stats = match graph_stats(g, opts) {
        Ok(st) => st,
        Err(_) => {
            let kappa = vertex_connectivity(g);
            return ScanRecord::skipped_budget(ig.index, graph6, g.order(), m, kappa);
        }
    };
    if opts.with_verdicts {
        match verify_from_stats(g, stats, opts.budget) {
            Ok(report) => ScanRecord::from_report(ig.index, graph6, m, &report),
            Err(_) => {
                // A vertex-deleted subgraph blew the budget.
                let kappa = vertex_connectivity(g);
                ScanRecord::skipped_budget(ig.index, graph6, g.order(), m, kappa)
            }
        }
    } else {
        let kappa = vertex_connectivity(g);
        ScanRecord::from_stats(ig.index, graph6, m, kappa, &stats)
    }
}
