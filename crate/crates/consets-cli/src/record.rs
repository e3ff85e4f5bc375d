//! Report records and their CSV/JSON renderings.
//!
//! One [`ScanRecord`] per input graph, in input order. CSV rows follow the
//! fixed column layout below; JSON carries the same records (plus the full
//! verdict details) and round-trips losslessly.

use consets_core::{ratio_string, BigInt, CheckId, Ratio, Verdict, VerifyReport};
use serde::{Deserialize, Serialize};

/// CSV columns for `stats` output.
pub const STATS_HEADER: &str = "index,graph6,n,m,kappa,N,S,Q,A_exact,A_dec,D_exact,D_dec";

/// CSV columns for `verify`/`scan` output. Verdict cells are
/// `PASS`/`FAIL`/`NA`, except `thm2_eq` which is `EQ` or `NA`.
pub const SCAN_HEADER: &str = "index,graph6,n,m,kappa,N,S,Q,A_exact,A_dec,D_exact,D_dec,\
thm2,thm2_eq,thm3,thm4,cor1,identities,conj2,tree_band";

/// The verdict columns of [`SCAN_HEADER`], in order.
pub const CSV_CHECKS: [CheckId; 7] = [
    CheckId::Thm2PathBound,
    CheckId::Thm3KconnDensity,
    CheckId::Thm4Rooted,
    CheckId::Cor1SumSq,
    CheckId::Identities,
    CheckId::Conj2MinDeg3,
    CheckId::TreeBand,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check: String,
    pub applicable: bool,
    pub passed: bool,
    pub equality: bool,
    pub counterexample_candidate: bool,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl VerdictRecord {
    pub fn from_verdict(v: &Verdict) -> VerdictRecord {
        VerdictRecord {
            check: v.check.id().to_string(),
            applicable: v.applicable,
            passed: v.passed,
            equality: v.equality,
            counterexample_candidate: v.counterexample_candidate,
            lhs: ratio_string(&v.lhs),
            rhs: ratio_string(&v.rhs),
            detail: v.detail.clone(),
        }
    }

    /// `PASS`, `FAIL` or `NA` for a CSV cell.
    pub fn cell(&self) -> &'static str {
        if !self.applicable {
            "NA"
        } else if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Everything reported about one input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub kappa: usize,
    /// `Some("budget")` when enumeration hit the per-graph budget; the
    /// counter and verdict fields are then absent.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skipped: Option<String>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none", default)]
    pub count: Option<String>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none", default)]
    pub size_sum: Option<String>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none", default)]
    pub size_sq_sum: Option<String>,
    #[serde(rename = "A_exact", skip_serializing_if = "Option::is_none", default)]
    pub avg_exact: Option<String>,
    #[serde(rename = "A_dec", skip_serializing_if = "Option::is_none", default)]
    pub avg_dec: Option<String>,
    #[serde(rename = "D_exact", skip_serializing_if = "Option::is_none", default)]
    pub density_exact: Option<String>,
    #[serde(rename = "D_dec", skip_serializing_if = "Option::is_none", default)]
    pub density_dec: Option<String>,
    /// Present for `verify`/`scan` records, absent for `stats`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdicts: Option<Vec<VerdictRecord>>,
}

impl ScanRecord {
    pub fn skipped_budget(index: usize, graph6: String, n: usize, m: usize, kappa: usize) -> Self {
        ScanRecord {
            index,
            graph6,
            n,
            m,
            kappa,
            skipped: Some("budget".to_string()),
            count: None,
            size_sum: None,
            size_sq_sum: None,
            avg_exact: None,
            avg_dec: None,
            density_exact: None,
            density_dec: None,
            verdicts: None,
        }
    }

    pub fn from_report(index: usize, graph6: String, m: usize, report: &VerifyReport) -> Self {
        let mut rec = Self::from_stats(index, graph6, m, report.kappa, &report.stats);
        rec.verdicts = Some(
            report
                .verdicts
                .iter()
                .map(VerdictRecord::from_verdict)
                .collect(),
        );
        rec
    }

    pub fn from_stats(
        index: usize,
        graph6: String,
        m: usize,
        kappa: usize,
        stats: &consets_core::ConnStats,
    ) -> Self {
        let avg = stats.average_order();
        let density = stats.density();
        ScanRecord {
            index,
            graph6,
            n: stats.order(),
            m,
            kappa,
            skipped: None,
            count: Some(stats.count().to_string()),
            size_sum: Some(stats.size_sum().to_string()),
            size_sq_sum: Some(stats.size_sq_sum().to_string()),
            avg_exact: Some(ratio_string(&avg)),
            avg_dec: Some(decimal6(&avg)),
            density_exact: Some(ratio_string(&density)),
            density_dec: Some(decimal6(&density)),
            verdicts: None,
        }
    }

    fn verdict_record(&self, check: CheckId) -> Option<&VerdictRecord> {
        self.verdicts
            .as_ref()
            .and_then(|vs| vs.iter().find(|v| v.check == check.id()))
    }

    fn stats_cells(&self) -> String {
        let blank = String::new();
        let cell = |o: &Option<String>| o.clone().unwrap_or_else(|| blank.clone());
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.index,
            self.graph6,
            self.n,
            self.m,
            self.kappa,
            cell(&self.count),
            cell(&self.size_sum),
            cell(&self.size_sq_sum),
            cell(&self.avg_exact),
            cell(&self.avg_dec),
            cell(&self.density_exact),
            cell(&self.density_dec),
        )
    }

    /// CSV row under [`STATS_HEADER`].
    pub fn to_stats_csv(&self) -> String {
        self.stats_cells()
    }

    /// CSV row under [`SCAN_HEADER`].
    pub fn to_scan_csv(&self) -> String {
        let mut row = self.stats_cells();
        let thm2 = self.verdict_record(CheckId::Thm2PathBound);
        for (i, check) in CSV_CHECKS.iter().enumerate() {
            let cell = match self.verdict_record(*check) {
                Some(v) => v.cell(),
                None => "NA",
            };
            row.push(',');
            row.push_str(cell);
            if i == 0 {
                // The thm2 equality column sits right after thm2.
                let eq = match thm2 {
                    Some(v) if v.applicable && v.equality => "EQ",
                    _ => "NA",
                };
                row.push(',');
                row.push_str(eq);
            }
        }
        row
    }
}

/// Exact decimal rendering of a nonnegative-or-negative rational to six
/// places, round-half-up on the magnitude.
pub fn decimal6(r: &Ratio) -> String {
    let num = r.numer();
    let den = r.denom(); // always positive in lowest terms
    let neg = num < &BigInt::from(0);
    let mag = if neg { -num.clone() } else { num.clone() };
    let scaled = mag * BigInt::from(2_000_000u64) + den;
    let q = scaled / (den * BigInt::from(2u32));
    let int = &q / BigInt::from(1_000_000u32);
    let frac = &q % BigInt::from(1_000_000u32);
    format!("{}{}.{:06}", if neg { "-" } else { "" }, int, frac)
}
