//! `consets`: exact connected-set statistics and bound verification for
//! small graphs, over graph6 streams, generated families, and exhaustive
//! labeled sweeps.
//!
//! Exit codes: 0 success, 1 a proved bound or identity failed (an
//! implementation-bug signal), 2 usage or input error.

mod exhaustive;
mod ledger;
mod pipeline;
mod record;
mod source;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use consets_core::{to_graph6, CheckId};

use exhaustive::{run_exhaustive, summary_line};
use ledger::ExtremalLedger;
use pipeline::{process_all, summarize_all, ScanOptions};
use record::{ScanRecord, SCAN_HEADER, STATS_HEADER};
use source::load;

/// Default per-graph cap on enumerated connected sets (2^28).
const DEFAULT_BUDGET: u64 = 1 << 28;

#[derive(Parser)]
#[command(
    name = "consets",
    version,
    about = "Exact connected-set statistics and bound verification for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-graph exact statistics: N, S, Q, average order, density, kappa
    Stats(ScanArgs),
    /// Statistics plus every bound/identity check; exit 1 on any violation
    Verify(ScanArgs),
    /// Like verify, but report-only: candidates and violations are listed
    /// on stderr and the exit code stays 0
    Scan(ScanArgs),
    /// Verify every labeled graph of one order (all edge subsets, n <= 6)
    Exhaustive(ExhaustiveArgs),
    /// Fold a stream into the extremal ledger and print it as JSON
    Extremal(StreamArgs),
    /// Print one generated graph as a graph6 line
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct StreamArgs {
    /// graph6 input file, or '-' for stdin
    #[arg(long, conflicts_with = "gen")]
    input: Option<String>,
    /// Inline generator spec such as "path 7" or "complete_bipartite 3 3"
    #[arg(long)]
    gen: Option<String>,
    /// Per-graph cap on enumerated connected sets
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; output order and bytes do not depend on this
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Split each graph's enumeration across its anchor vertices
    #[arg(long)]
    anchor_parallel: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    stream: StreamArgs,
    /// Output format for the per-graph records
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    format: OutFormat,
}

#[derive(Args)]
struct ExhaustiveArgs {
    /// Order to sweep (1..=6)
    n: usize,
    /// Verify only the connected labeled graphs
    #[arg(long)]
    connected_only: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct GenArgs {
    /// Family: path, cycle, complete, complete_bipartite, hypercube, star,
    /// double_star
    kind: String,
    /// Family parameters (one integer, or two for complete_bipartite and
    /// double_star)
    params: Vec<usize>,
}

impl StreamArgs {
    fn options(&self, with_verdicts: bool) -> ScanOptions {
        ScanOptions {
            budget: self.budget,
            jobs: self.jobs,
            anchor_parallel: self.anchor_parallel,
            with_verdicts,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Stats(args) => {
            let graphs = load(args.stream.input.as_deref(), args.stream.gen.as_deref())?;
            let records = process_all(&graphs, args.stream.options(false))?;
            emit_records(&records, args.format, false)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify(args) => {
            let graphs = load(args.stream.input.as_deref(), args.stream.gen.as_deref())?;
            let records = process_all(&graphs, args.stream.options(true))?;
            emit_records(&records, args.format, true)?;
            let outcome = summarize_verdicts(&records);
            eprintln!("{}", outcome.text("verify"));
            for g6 in outcome.violating_graphs.iter().take(10) {
                eprintln!("VIOLATION (implementation bug): {g6}");
            }
            for g6 in &outcome.candidate_graphs {
                eprintln!("counterexample candidate: {g6}");
            }
            if outcome.violations > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Scan(args) => {
            let graphs = load(args.stream.input.as_deref(), args.stream.gen.as_deref())?;
            let records = process_all(&graphs, args.stream.options(true))?;
            emit_records(&records, args.format, true)?;
            let outcome = summarize_verdicts(&records);
            eprintln!("{}", outcome.text("scan"));
            for g6 in &outcome.candidate_graphs {
                eprintln!("counterexample candidate: {g6}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Exhaustive(args) => {
            let report = run_exhaustive(args.n, args.connected_only, args.budget, args.jobs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            eprintln!("{}", summary_line(&report));
            if report.theorem_violations > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Cmd::Extremal(args) => {
            let graphs = load(args.input.as_deref(), args.gen.as_deref())?;
            let summaries = summarize_all(&graphs, args.options(false))?;
            let mut ledger = ExtremalLedger::default();
            for (summary, ig) in summaries.iter().zip(&graphs) {
                if let Some(s) = summary {
                    ledger.fold(s.n, s.kappa, &s.avg, &s.density, &s.graph6, ig.index);
                }
            }
            println!("{}", serde_json::to_string_pretty(&ledger.to_report())?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen(args) => {
            let kind = consets_core::GenKind::from_name(&args.kind).ok_or_else(|| {
                anyhow::anyhow!(
                    "unknown generator {:?}; expected one of {:?}",
                    args.kind,
                    consets_core::GenKind::ALL.map(|k| k.name())
                )
            })?;
            let g = consets_core::make_generator(kind, &args.params)?;
            println!("{}", to_graph6(&g));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_records(records: &[ScanRecord], format: OutFormat, with_verdicts: bool) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match format {
        OutFormat::Csv => {
            writeln!(
                out,
                "{}",
                if with_verdicts {
                    SCAN_HEADER
                } else {
                    STATS_HEADER
                }
            )?;
            for r in records {
                let row = if with_verdicts {
                    r.to_scan_csv()
                } else {
                    r.to_stats_csv()
                };
                writeln!(out, "{row}")?;
            }
        }
        OutFormat::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(records)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

struct VerdictSummary {
    graphs: usize,
    violations: usize,
    violating_graphs: Vec<String>,
    candidates: usize,
    candidate_graphs: Vec<String>,
    skipped: usize,
}

impl VerdictSummary {
    fn text(&self, cmd: &str) -> String {
        format!(
            "{cmd}: {} graphs, {} violations, {} counterexample candidates, {} budget-skipped",
            self.graphs, self.violations, self.candidates, self.skipped
        )
    }
}

fn summarize_verdicts(records: &[ScanRecord]) -> VerdictSummary {
    let mut summary = VerdictSummary {
        graphs: records.len(),
        violations: 0,
        violating_graphs: Vec::new(),
        candidates: 0,
        candidate_graphs: Vec::new(),
        skipped: 0,
    };
    for r in records {
        if r.skipped.is_some() {
            summary.skipped += 1;
            continue;
        }
        let Some(verdicts) = &r.verdicts else {
            continue;
        };
        let violated = verdicts.iter().any(|v| {
            v.applicable
                && !v.passed
                && CheckId::from_id(&v.check).is_some_and(|c| !c.is_conjecture())
        });
        if violated {
            summary.violations += 1;
            summary.violating_graphs.push(r.graph6.clone());
        }
        if verdicts.iter().any(|v| v.counterexample_candidate) {
            summary.candidates += 1;
            summary.candidate_graphs.push(r.graph6.clone());
        }
    }
    summary
}
