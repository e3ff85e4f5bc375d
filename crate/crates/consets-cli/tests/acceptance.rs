//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything numeric is asserted exactly; the only tolerances here are the
//! stated wall-clock budgets.

use std::io::Write;
use std::process::Command;
use std::time::Instant;

use consets_core::{
    brute_force_stats, check_deletion_identity, check_kconn_density, check_min_degree_density,
    check_path_bound, check_sum_of_squares_bound, connected_set_stats,
    density_bound_recurrence_holds, graph, kconn_density_bound, to_graph6, verify_all,
    vertex_connectivity, BigInt, BigUint, CheckId, Graph, Ratio,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(criterion: u32, what: &str) {
    println!("[acceptance] criterion {criterion}: PASS - {what}");
}

fn q(n: i64, d: i64) -> Ratio {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

/// Random connected graph: random recursive tree plus extra edges.
fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, extra_edge_p: f64) -> Graph {
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

#[test]
fn criterion_1_path_closed_forms() {
    let start = Instant::now();
    for n in 1u64..=24 {
        let g = graph::path(n as usize).unwrap();
        let st = connected_set_stats(&g);
        assert_eq!(st.count(), &BigUint::from(n * (n + 1) / 2), "N(P_{n})");
        assert_eq!(
            st.size_sum(),
            &BigUint::from(n * (n + 1) * (n + 2) / 6),
            "S(P_{n})"
        );
        assert_eq!(st.average_order(), q(n as i64 + 2, 3), "A(P_{n}) = (n+2)/3");
        let verdict = check_path_bound(&g, &st);
        assert!(verdict.passed && verdict.equality, "equality on P_{n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "runtime budget: {elapsed:?}");
    pass(
        1,
        &format!("paths n=1..24 exact closed forms in {elapsed:?}"),
    );
}

#[test]
fn criterion_2_exhaustive_sweep_up_to_6() {
    let start = Instant::now();
    let expected_connected: [u64; 6] = [1, 1, 4, 38, 728, 26704];
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        let mut connected_count = 0u64;
        let mut min_avg: Option<Ratio> = None;
        for mask in 0u64..1 << pairs {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            connected_count += 1;
            let report = verify_all(&g, u64::MAX).unwrap();
            for check in [
                CheckId::Thm2PathBound,
                CheckId::Thm3KconnDensity,
                CheckId::Thm4Rooted,
                CheckId::Cor1SumSq,
                CheckId::Identities,
                CheckId::Thm3DeletionIdentity,
            ] {
                let v = report.verdict(check);
                assert!(
                    v.passed,
                    "violation of {} on {} (n={n}): {}",
                    check.id(),
                    to_graph6(&g),
                    v.detail
                );
            }
            let eq = report.verdict(CheckId::Thm2PathBound).equality;
            assert_eq!(
                eq,
                g.is_path_graph(),
                "equality/path mismatch on {}",
                to_graph6(&g)
            );
            let avg = report.stats.average_order();
            min_avg = Some(match min_avg {
                None => avg,
                Some(m) => m.min(avg),
            });
        }
        assert_eq!(
            connected_count,
            expected_connected[n - 1],
            "connected labeled graph count for n={n}"
        );
        assert_eq!(
            min_avg.unwrap(),
            q(n as i64 + 2, 3),
            "minimum average order for n={n} is attained by paths"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "runtime budget: {elapsed:?}");
    pass(
        2,
        &format!("n<=6 labeled sweep: counts 1,1,4,38,728,26704, zero violations, equality iff path, in {elapsed:?}"),
    );
}

#[test]
fn criterion_3_oracle_equivalence_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_9703);
    let densities = [0.0, 0.1, 0.25, 0.5, 0.85];
    let mut checked = 0u32;
    while checked < 200 {
        let n = 5 + (checked as usize) % 10; // orders 5..=14
        let p = densities[(checked as usize) % densities.len()];
        let g = random_connected_graph(&mut rng, n, p);
        assert!(g.is_connected());
        let fast = connected_set_stats(&g);
        let oracle = brute_force_stats(&g).unwrap();
        assert_eq!(fast, oracle, "stats mismatch on {} (n={n})", to_graph6(&g));
        checked += 1;
    }
    pass(
        3,
        "200 random connected graphs n in [5,14]: fast stats equal brute force bit-exactly",
    );
}

#[test]
fn criterion_4_complete_graph_formulas() {
    for n in 1u32..=20 {
        let g = graph::complete(n as usize).unwrap();
        let st = connected_set_stats(&g);
        let pow = BigUint::from(1u32) << n;
        assert_eq!(st.count(), &(&pow - 1u32), "N(K_{n}) = 2^n - 1");
        assert_eq!(
            st.size_sum(),
            &(BigUint::from(n) << (n - 1)),
            "S(K_{n}) = n 2^(n-1)"
        );
        let density = st.density();
        let expected = Ratio::new(
            BigInt::from(BigUint::from(1u32) << (n - 1)),
            BigInt::from(&pow - 1u32),
        );
        assert_eq!(density, expected, "D(K_{n}) = 2^(n-1)/(2^n - 1)");
        let cor1 = check_sum_of_squares_bound(&st);
        assert!(cor1.passed && cor1.equality, "2Q = (n+1)S on K_{n}");
    }
    pass(
        4,
        "complete graphs n<=20: N, S, D closed forms and 2Q=(n+1)S equality",
    );
}

#[test]
fn criterion_5_density_bound_sequence() {
    assert_eq!(kconn_density_bound(1), q(1, 3));
    assert_eq!(kconn_density_bound(2), q(2, 5));
    assert_eq!(kconn_density_bound(3), q(4, 9));
    assert!(density_bound_recurrence_holds(30));
    let half = q(1, 2);
    let mut prev = kconn_density_bound(1);
    for k in 2..=30 {
        let cur = kconn_density_bound(k);
        assert!(cur > prev && cur < half, "monotone toward 1/2 at k={k}");
        prev = cur;
    }
    pass(
        5,
        "bound values 1/3, 2/5, 4/9; recurrence exact to k=30; strictly increasing below 1/2",
    );
}

#[test]
fn criterion_6_kconn_density_instances() {
    let mut lines = Vec::new();
    for n in 4..=12usize {
        let g = graph::cycle(n).unwrap();
        assert_eq!(vertex_connectivity(&g), 2, "kappa(C_{n})");
        let st = connected_set_stats(&g);
        let v = check_kconn_density(&g, &st);
        assert!(v.passed, "C_{n}");
        assert_eq!(v.rhs, q(2, 5));
        let margin = v.lhs.clone() - v.rhs.clone();
        assert!(margin >= q(0, 1));
        lines.push(format!("C_{n}: {}", v.detail));
    }
    for n in 3..=12usize {
        let g = graph::complete(n).unwrap();
        assert_eq!(vertex_connectivity(&g), n - 1, "kappa(K_{n})");
        let st = connected_set_stats(&g);
        let v = check_kconn_density(&g, &st);
        assert!(v.passed, "K_{n}");
        lines.push(format!("K_{n}: {}", v.detail));
    }
    let g = graph::hypercube(3).unwrap();
    assert_eq!(vertex_connectivity(&g), 3);
    let v = check_kconn_density(&g, &connected_set_stats(&g));
    assert!(v.passed);
    assert_eq!(v.rhs, q(4, 9));
    lines.push(format!("Q_3: {}", v.detail));
    for line in &lines {
        println!("  {line}");
    }
    pass(6, "cycles 4..12 (k=2), completes 3..12 (k=n-1), hypercube(3) (k=3) all pass with exact margins");
}

#[test]
fn criterion_7_deletion_identity() {
    // Every connected labeled graph on up to 6 vertices.
    for n in 2..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..1 << pairs {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            let st = connected_set_stats(&g);
            let v = check_deletion_identity(&g, &st, u64::MAX).unwrap();
            assert!(
                v.applicable && v.passed,
                "deletion identity on {}: {}",
                to_graph6(&g),
                v.detail
            );
        }
    }
    // Plus 100 random connected graphs on up to 12 vertices.
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_9707);
    for round in 0..100 {
        let n = 2 + round % 11; // orders 2..=12
        let g = random_connected_graph(&mut rng, n, 0.08 * (round % 9) as f64);
        let st = connected_set_stats(&g);
        let v = check_deletion_identity(&g, &st, u64::MAX).unwrap();
        assert!(
            v.applicable && v.passed,
            "deletion identity on {}",
            to_graph6(&g)
        );
    }
    pass(
        7,
        "deletion identity exact on the n<=6 sweep and 100 random connected graphs n<=12",
    );
}

#[test]
fn criterion_8_min_degree_conjecture_scan() {
    let prism = Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap();
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0), // outer cycle
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9), // spokes
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5), // inner pentagram
        ],
    )
    .unwrap();
    let cases: Vec<(&str, Graph)> = vec![
        ("K_4", graph::complete(4).unwrap()),
        ("K_{3,3}", graph::complete_bipartite(3, 3).unwrap()),
        ("Q_3", graph::hypercube(3).unwrap()),
        ("prism", prism),
        ("petersen", petersen),
    ];
    let half = q(1, 2);
    for (name, g) in &cases {
        assert!(g.min_degree() >= 3, "{name} hypothesis");
        // Density from the independent oracle, not from the fast path.
        let oracle = brute_force_stats(g).unwrap();
        let density = oracle.density();
        assert!(density >= half, "{name}: oracle density {density} < 1/2");
        let fast = connected_set_stats(g);
        assert_eq!(fast, oracle, "{name}: fast stats equal oracle");
        let v = check_min_degree_density(g, &fast);
        assert!(
            v.applicable && v.passed && !v.counterexample_candidate,
            "{name}"
        );
        println!("  {name}: {}", v.detail);
    }
    pass(
        8,
        "K_4, K_{3,3}, Q_3, prism, Petersen all have density >= 1/2, no counterexample flagged",
    );
}

#[test]
fn criterion_9_parallel_determinism() {
    // Deterministic 1000-graph stream: all 728 connected labeled graphs on
    // 5 vertices, then the first 272 connected labeled graphs on 6 vertices.
    let mut lines = Vec::new();
    for n in [5usize, 6] {
        let pairs = n * (n - 1) / 2;
        for mask in 0u64..1 << pairs {
            if lines.len() == 1000 {
                break;
            }
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if g.is_connected() {
                lines.push(to_graph6(&g));
            }
        }
    }
    assert_eq!(lines.len(), 1000);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("stream.g6");
    let mut f = std::fs::File::create(&path).unwrap();
    for line in &lines {
        writeln!(f, "{line}").unwrap();
    }
    drop(f);

    let exe = env!("CARGO_BIN_EXE_consets");
    let mut outputs = Vec::new();
    for (jobs, format) in [("1", "csv"), ("8", "csv"), ("1", "json"), ("8", "json")] {
        let out = Command::new(exe)
            .args([
                "verify",
                "--input",
                path.to_str().unwrap(),
                "--format",
                format,
                "--jobs",
                jobs,
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "verify --jobs {jobs} exit status");
        outputs.push((format, out.stdout));
    }
    assert_eq!(
        outputs[0].1, outputs[1].1,
        "csv bytes differ between --jobs 1 and --jobs 8"
    );
    assert_eq!(
        outputs[2].1, outputs[3].1,
        "json bytes differ between --jobs 1 and --jobs 8"
    );
    pass(
        9,
        "1000-graph stream: verify output byte-identical for --jobs 1 and --jobs 8 (csv and json)",
    );
}
