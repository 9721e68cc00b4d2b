//! Binary-level tests: exit codes, JSON schema round-trips, and output
//! determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use arr_cli::reports::{
    DeformReport, DeformSidecar, HolonomyReport, HypersolvableReport, LatticeReport, VerifyReport,
};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn arr_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arr"))
}

fn run(args: &[&str]) -> Output {
    let mut cmd = arr_bin();
    cmd.args(args);
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn verify_braid3_passes_with_exit_zero() {
    let path = data("braid3.arr");
    let out = run(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: VerifyReport = serde_json::from_str(&stdout_of(&out)).expect("schema round-trip");
    assert!(report.pass);
    assert_eq!(report.classification, "supersolvable");
    assert_eq!(report.phi, vec![3, 1, 2, 3, 6]);
    assert_eq!(report.exponents_chain.as_deref(), Some(&[1, 2][..]));
    let lcs = report.lcs_check.expect("applicable");
    assert_eq!(lcs.lhs, vec![1, -3, 2, 0, 0, 0]);
}

#[test]
fn verify_non_hypersolvable_reports_and_exits_two() {
    let path = data("nonhyper6.arr");
    let out = run(&["verify", path.to_str().unwrap(), "--json", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let report: VerifyReport = serde_json::from_str(&stdout_of(&out)).expect("schema round-trip");
    assert!(!report.pass);
    assert_eq!(report.classification, "not_applicable");
    // the phi series is still printed
    assert_eq!(report.phi.len(), 3);
    assert_eq!(report.phi[0], 6);
}

#[test]
fn parse_errors_exit_one() {
    let dir = std::env::temp_dir().join("arr-cli-test-parse");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.arr");
    std::fs::write(&bad, "dim 2\n1 0\n1 0\n").unwrap();
    let out = run(&["lattice", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate"));

    let out = run(&["lattice", dir.join("missing.arr").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lattice_reports_counts() {
    let out = run(&["lattice", data("single.arr").to_str().unwrap(), "--json"]);
    let report: LatticeReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.rank, 1);
    assert_eq!(report.flats.len(), 2);

    let out = run(&["lattice", data("braid4.arr").to_str().unwrap(), "--json"]);
    let report: LatticeReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut per_rank = vec![0usize; report.rank + 1];
    for f in &report.flats {
        per_rank[f.rank] += 1;
    }
    assert_eq!(per_rank, vec![1, 6, 7, 1]);
    assert_eq!(report.exponents.as_deref(), Some(&[1, 2, 3][..]));
}

#[test]
fn hypersolvable_report_schema() {
    let out = run(&["hypersolvable", data("generic4.arr").to_str().unwrap(), "--json"]);
    let report: HypersolvableReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert!(report.hypersolvable);
    assert_eq!(report.ell, Some(4));
    assert_eq!(report.s, Some(1));
    assert_eq!(report.exponents.as_deref(), Some(&[1, 1, 1, 1][..]));
    let kinds = report.extension_kinds.unwrap();
    assert_eq!(kinds.last().map(String::as_str), Some("singular"));
}

#[test]
fn holonomy_report_schema_and_kernel() {
    let out = run(&["holonomy", data("braid4.arr").to_str().unwrap(), "--max-degree", "3", "--json"]);
    let report: HolonomyReport = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report.phi, vec![6, 4, 10]);
    assert_eq!(report.ideal_dims, vec![0, 11, 60]);
    let kernel = report.kernel_report.expect("braid C4 has a modular corank-1 flat");
    assert!(kernel.pass);
    assert_eq!(kernel.horizontal.len(), 3);
    let dims: Vec<usize> = kernel.per_degree.iter().map(|d| d.kernel_dim).collect();
    assert_eq!(dims, vec![3, 3, 8]);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let path = data("braid3.arr");
    let a = run(&["verify", path.to_str().unwrap(), "--json"]);
    let b = run(&["verify", path.to_str().unwrap(), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn deform_is_deterministic_and_self_verifying() {
    let dir = std::env::temp_dir().join("arr-cli-test-deform");
    std::fs::create_dir_all(&dir).unwrap();
    let out_a = dir.join("a.arr");
    let out_b = dir.join("b.arr");
    for (out_path, _) in [(&out_a, 0), (&out_b, 1)] {
        let out = run(&[
            "deform",
            data("generic4.arr").to_str().unwrap(),
            "--seed",
            "7",
            "--json",
            "-o",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
        let report: DeformReport = serde_json::from_str(&stdout_of(&out)).unwrap();
        assert!(report.rank2_preserved && report.supersolvable);
        assert_eq!((report.dim, report.rank), (4, 4));
        assert_eq!(report.exponents, vec![1, 1, 1, 1]);
    }
    let file_a = std::fs::read_to_string(&out_a).unwrap();
    let file_b = std::fs::read_to_string(&out_b).unwrap();
    assert_eq!(file_a, file_b, "same seed must give identical files");
    let sidecar: DeformSidecar =
        serde_json::from_str(&std::fs::read_to_string(dir.join("a.arr.meta.json")).unwrap())
            .unwrap();
    assert_eq!(sidecar.seed, 7);
    assert_eq!(sidecar.offsets.len(), 4);
}

#[test]
fn deform_of_supersolvable_input_is_identity() {
    let dir = std::env::temp_dir().join("arr-cli-test-deform-id");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("braid3.deformed.arr");
    let out = run(&[
        "deform",
        data("braid3.arr").to_str().unwrap(),
        "--seed",
        "1",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let produced = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(produced, "dim 3\n1 -1 0\n1 0 -1\n0 1 -1\n");
}

#[test]
fn deform_requires_seed_and_hypersolvable_input() {
    let out = run(&["deform", data("generic4.arr").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "missing seed is a usage error");

    let out = run(&["deform", data("nonhyper6.arr").to_str().unwrap(), "--seed", "3"]);
    assert_eq!(out.status.code(), Some(2), "non-hypersolvable input is a check failure");
    assert!(String::from_utf8_lossy(&out.stderr).contains("not hypersolvable"));
}

#[test]
fn flat_budget_env_var_aborts_early() {
    let path = data("braid4.arr");
    let out = arr_bin()
        .args(["lattice", path.to_str().unwrap()])
        .env("ARR_MAX_FLATS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));

    let out = arr_bin()
        .args(["lattice", path.to_str().unwrap()])
        .env("ARR_MAX_FLATS", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn report_can_be_written_to_file() {
    let dir = std::env::temp_dir().join("arr-cli-test-output");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let out = run(&[
        "supersolvable",
        data("boolean3.arr").to_str().unwrap(),
        "--json",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).is_empty());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("\"supersolvable\": true"));
}
