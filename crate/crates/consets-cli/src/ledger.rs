//! Extremal tracking: running minima of the average order per order, and of
//! the density per (order, connectivity), each with its first witness.

use std::collections::BTreeMap;

use consets_core::Ratio;
use serde::{Deserialize, Serialize};

use crate::record::decimal6;

struct Entry {
    value: Ratio,
    witness_graph6: String,
    first_index: usize,
}

/// Fold-only minima tracker. Folding records in input order makes the
/// tie-break (first occurrence wins) deterministic.
#[derive(Default)]
pub struct ExtremalLedger {
    min_avg: BTreeMap<usize, Entry>,
    min_density: BTreeMap<(usize, usize), Entry>,
}

impl ExtremalLedger {
    /// Folds one graph's values in. Strictly smaller values replace the
    /// entry; equal values keep the earlier witness.
    pub fn fold(
        &mut self,
        n: usize,
        kappa: usize,
        avg: &Ratio,
        density: &Ratio,
        graph6: &str,
        index: usize,
    ) {
        fold_entry(self.min_avg.entry(n), avg, graph6, index);
        fold_entry(self.min_density.entry((n, kappa)), density, graph6, index);
    }

    pub fn to_report(&self) -> LedgerReport {
        LedgerReport {
            min_average_order_by_order: self
                .min_avg
                .iter()
                .map(|(&n, e)| MinAvgEntry {
                    n,
                    a_exact: consets_core::ratio_string(&e.value),
                    a_dec: decimal6(&e.value),
                    witness_graph6: e.witness_graph6.clone(),
                    first_index: e.first_index,
                })
                .collect(),
            min_density_by_order_and_connectivity: self
                .min_density
                .iter()
                .map(|(&(n, kappa), e)| MinDensityEntry {
                    n,
                    kappa,
                    d_exact: consets_core::ratio_string(&e.value),
                    d_dec: decimal6(&e.value),
                    witness_graph6: e.witness_graph6.clone(),
                    first_index: e.first_index,
                })
                .collect(),
        }
    }
}

fn fold_entry(
    slot: std::collections::btree_map::Entry<'_, impl Ord, Entry>,
    value: &Ratio,
    graph6: &str,
    index: usize,
) {
    match slot {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(Entry {
                value: value.clone(),
                witness_graph6: graph6.to_string(),
                first_index: index,
            });
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            if value < &o.get().value {
                o.insert(Entry {
                    value: value.clone(),
                    witness_graph6: graph6.to_string(),
                    first_index: index,
                });
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinAvgEntry {
    pub n: usize,
    pub a_exact: String,
    pub a_dec: String,
    pub witness_graph6: String,
    pub first_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDensityEntry {
    pub n: usize,
    pub kappa: usize,
    pub d_exact: String,
    pub d_dec: String,
    pub witness_graph6: String,
    pub first_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerReport {
    pub min_average_order_by_order: Vec<MinAvgEntry>,
    pub min_density_by_order_and_connectivity: Vec<MinDensityEntry>,
}
