//! Integration tests for the lspw binary: subcommand output, file
//! round-trips, and exit codes (0 = ran, 1 = config error).

use std::process::Command;

fn lspw(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lspw"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn generate_prints_edge_list() {
    let out = lspw(&["generate", "cycle(5)"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("5 5\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn generate_round_trips_through_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    let out = lspw(&["generate", "web(10,2)", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let facets_from_file = lspw(&["facets", path.to_str().unwrap()]);
    let facets_from_spec = lspw(&["facets", "web(10,2)"]);
    assert!(facets_from_file.status.success());
    assert_eq!(facets_from_file.stdout, facets_from_spec.stdout);
}

#[test]
fn facets_are_sorted_canonical_rows() {
    let out = lspw(&["facets", "cycle(5)"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.contains(&"1 1 1 1 1 <= 2"));
    assert!(lines.iter().all(|l| l.contains("<=")));
}

#[test]
fn check_lsplus_reports_verdicts() {
    let out = lspw(&["check-lsplus", "g_lt"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: imperfect"));
    assert!(text.contains("violated"));

    let out = lspw(&["check-lsplus", "cycle(5)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: perfect"));
}

#[test]
fn check_joined_aperfect_lists_unrecognized() {
    let out = lspw(&["check-joined-aperfect", "g_lt"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("joined a-perfect: no"));
    assert!(text.contains("unrecognized: "));

    let out = lspw(&["check-joined-aperfect", "odd_antihole(3)"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("joined a-perfect: yes"));
}

#[test]
fn verify_conjecture_runs_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("run.cfg");
    let csv_path = dir.path().join("report.csv");
    std::fs::write(
        &cfg_path,
        format!(
            "format = csv\noutput = {}\ncorpus = cycle(5)\ncorpus = g_emn\n",
            csv_path.display()
        ),
    )
    .unwrap();
    let out = lspw(&["verify-conjecture", cfg_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with(
        "graph_id,n,m,claw_free,quasi_line,alpha,eta_plus,eta_bound,\
         ls_status,joined_a_perfect,consistent,runtime_ms"
    ));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn config_errors_exit_one() {
    let out = lspw(&["verify-conjecture", "/no/such/config"]);
    assert_eq!(out.status.code(), Some(1));
    let out = lspw(&["generate", "frobnicate(3)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = lspw(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_graph_file_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n2 1\n").unwrap();
    let out = lspw(&["facets", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "stderr: {}", err);
}
