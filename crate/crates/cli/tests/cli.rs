//! End-to-end tests of the command-line interface through the compiled
//! binary: report contents, file round trips, determinism, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minksum"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn tmp_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minksum-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn bound_tables_match_known_values() {
    let out = run(&["bound", "-d", "3", "--n1", "4", "--n2", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("16"));
    assert!(text.contains("32"));
    assert!(text.contains("18"));
    // csv of the d=2 table: the maxima are n1 + n2 in both rows
    let out = run(&[
        "bound", "-d", "2", "--n1", "5", "--n2", "7", "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.contains("0,1,12"));
    assert!(text.contains("1,2,12"));
    // json of the d=4 table has the product bound in the k = 1 row
    let out = run(&[
        "bound", "-d", "4", "--n1", "6", "--n2", "6", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"][0]["bound"], 36);
    assert_eq!(v["rows"][0]["face_dim"], 0);
    assert_eq!(v["rows"][0]["k"], 1);
}

#[test]
fn witness_sum_verify_round_trip_odd() {
    let dir = tmp_dir("odd");
    let out = run(&[
        "witness",
        "-d",
        "3",
        "--n1",
        "4",
        "--n2",
        "4",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let p1 = dir.join("p1.json");
    let p2 = dir.join("p2.json");
    let cert = dir.join("certificate.json");
    assert!(p1.exists() && p2.exists() && cert.exists());
    let cert_json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(cert_json["tau"]["subsets"], 16);
    assert_eq!(cert_json["tau"]["probes_per_subset"], 6);
    assert!(cert_json["zeta"]["min_determinant"].as_str().is_some());

    let out = run(&[
        "sum",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f_sum"]["counts"], serde_json::json!([16, 32, 18]));
    assert_eq!(v["oracles_agree"], true);

    let out = run(&[
        "verify",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["f_mixed"]["f_minus_1"], -1);
    assert_eq!(v["max_k_bineighborly"], 2);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn witness_even_writes_no_certificate() {
    let dir = tmp_dir("even");
    let out = run(&[
        "witness",
        "-d",
        "4",
        "--n1",
        "6",
        "--n2",
        "6",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(dir.join("p1.json").exists());
    assert!(!dir.join("certificate.json").exists());
    let out = run(&[
        "sum",
        dir.join("p1.json").to_str().unwrap(),
        dir.join("p2.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f_sum"]["counts"][0], 36);
    assert_eq!(v["bounds"]["rows"][3]["tight"], true);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = tmp_dir("det");
    run(&[
        "witness",
        "-d",
        "3",
        "--n1",
        "4",
        "--n2",
        "4",
        "--out",
        dir.to_str().unwrap(),
    ]);
    let p1 = dir.join("p1.json");
    let p2 = dir.join("p2.json");
    let args = [
        "verify",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn error_paths_exit_nonzero() {
    // corrupted polytope file
    let dir = tmp_dir("err");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2, \"vertices\": [[\"1/0\", \"2\"]]}").unwrap();
    let out = run(&["sum", bad.to_str().unwrap(), bad.to_str().unwrap()]);
    assert!(!out.status.success());
    // mixed dimensions
    let seg = dir.join("seg.json");
    let tri = dir.join("tri.json");
    std::fs::write(&seg, "{\"dim\": 1, \"vertices\": [[\"0\"], [\"1\"]]}").unwrap();
    std::fs::write(
        &tri,
        "{\"dim\": 2, \"vertices\": [[\"0\", \"0\"], [\"1\", \"0\"], [\"0\", \"1\"]]}",
    )
    .unwrap();
    let out = run(&["sum", seg.to_str().unwrap(), tri.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));
    // non-extreme listed vertex is rejected, not silently dropped
    let fat = dir.join("fat.json");
    std::fs::write(
        &fat,
        "{\"dim\": 2, \"vertices\": [[\"0\",\"0\"],[\"2\",\"0\"],[\"0\",\"2\"],[\"1\",\"1\"]]}",
    )
    .unwrap();
    let out = run(&["sum", fat.to_str().unwrap(), tri.to_str().unwrap()]);
    assert!(!out.status.success());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn sum_handles_out_of_formula_range_inputs() {
    // a single-point summand translates: valid sum, no bound table
    let dir = tmp_dir("edge");
    let tet = dir.join("tet.json");
    std::fs::write(
        &tet,
        "{\"dim\": 3, \"vertices\": [[\"0\",\"0\",\"0\"],[\"4\",\"0\",\"0\"],[\"0\",\"4\",\"0\"],[\"0\",\"0\",\"4\"]]}",
    )
    .unwrap();
    let pt = dir.join("pt.json");
    std::fs::write(&pt, "{\"dim\": 3, \"vertices\": [[\"1\",\"2\",\"3\"]]}").unwrap();
    let out = run(&[
        "sum",
        tet.to_str().unwrap(),
        pt.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["f_sum"]["counts"], serde_json::json!([4, 6, 4]));
    assert_eq!(v["oracles_agree"], true);
    assert!(v.get("bounds").is_none());
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn guardrails_refuse_big_requests() {
    let out = run(&["bound", "-d", "8", "--n1", "9", "--n2", "9"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-dim"));
    let out = run(&[
        "bound",
        "-d",
        "8",
        "--n1",
        "9",
        "--n2",
        "9",
        "--max-dim",
        "8",
    ]);
    assert!(out.status.success());
    let out = run(&[
        "witness",
        "-d",
        "4",
        "--n1",
        "13",
        "--n2",
        "13",
        "--out",
        "/tmp/never",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-verts"));
}

#[test]
fn random_polytopes_are_reproducible() {
    let a = run(&["random", "-d", "3", "-n", "7", "--seed", "42"]);
    let b = run(&["random", "-d", "3", "-n", "7", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["dim"], 3);
    let c = run(&["random", "-d", "3", "-n", "7", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sum_accepts_explicit_lambda_and_lattice_flag() {
    let dir = tmp_dir("lambda");
    run(&[
        "witness",
        "-d",
        "3",
        "--n1",
        "4",
        "--n2",
        "4",
        "--out",
        dir.to_str().unwrap(),
    ]);
    let p1 = dir.join("p1.json");
    let p2 = dir.join("p2.json");
    let base = run(&[
        "sum",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--format",
        "json",
    ]);
    for lambda in ["1/4", "3/4", "7/13"] {
        let out = run(&[
            "sum",
            p1.to_str().unwrap(),
            p2.to_str().unwrap(),
            "--lambda",
            lambda,
            "--format",
            "json",
        ]);
        assert_eq!(stdout(&base), stdout(&out), "lambda = {lambda}");
    }
    let out = run(&[
        "sum",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--lambda",
        "3/2",
    ]);
    assert!(!out.status.success());
    let out = run(&[
        "sum",
        p1.to_str().unwrap(),
        p2.to_str().unwrap(),
        "--emit-lattice",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lattice = &v["sum_lattice"];
    assert_eq!(lattice["intrinsic_dim"], 3);
    assert_eq!(lattice["faces_by_dim"][0].as_array().unwrap().len(), 16);
    assert_eq!(lattice["faces_by_dim"][2].as_array().unwrap().len(), 18);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn outputs_can_be_written_to_files() {
    let dir = tmp_dir("out");
    let path = dir.join("bounds.json");
    let out = run(&[
        "bound",
        "-d",
        "5",
        "--n1",
        "7",
        "--n2",
        "7",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["bound"], 49);
    assert_eq!(v["rows"][4]["bound"], 202);
    let _ = std::fs::remove_dir_all(&dir);
}

/// The verify battery must flag genuinely non-attaining pairs as such while
/// still passing every identity; and it must mark failures on corrupted
/// reports only (exit code semantics).
#[test]
fn verify_on_non_extremal_pair_passes_with_slack() {
    let dir = tmp_dir("slack");
    // two squares: a non-simplicial, non-extremal pair
    let sq = dir.join("sq.json");
    std::fs::write(
        &sq,
        "{\"dim\": 2, \"vertices\": [[\"0\",\"0\"],[\"1\",\"0\"],[\"1\",\"1\"],[\"0\",\"1\"]]}",
    )
    .unwrap();
    let sq2 = dir.join("sq2.json");
    std::fs::write(
        &sq2,
        "{\"dim\": 2, \"vertices\": [[\"0\",\"0\"],[\"3\",\"0\"],[\"3\",\"3\"],[\"0\",\"3\"]]}",
    )
    .unwrap();
    let out = run(&[
        "verify",
        sq.to_str().unwrap(),
        sq2.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["f_sum"]["counts"], serde_json::json!([4, 4]));
    // homothetic squares stay below the d=2 maxima
    assert_eq!(v["bounds"]["rows"][0]["tight"], false);
    let _ = std::fs::remove_dir_all(&dir);
}
