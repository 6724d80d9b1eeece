//! End-to-end runs of the compiled binary: each test spawns `evoder`
//! with real files and checks output text, JSON shape, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::Value;

fn evoder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evoder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

static FILE_COUNTER: AtomicUsize = AtomicUsize::new(0);

/// Writes `content` to a unique temp file and returns its path.
fn temp_file(tag: &str, content: &str) -> PathBuf {
    let id = FILE_COUNTER.fetch_add(1, Ordering::Relaxed);
    let path = std::env::temp_dir().join(format!(
        "evoder-cli-{}-{id}-{tag}",
        std::process::id()
    ));
    std::fs::write(&path, content).expect("temp file written");
    path
}

const K33_EDGE_LIST: &str = "6\n1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n";
const K33_JSON: &str =
    r#"{"n": 6, "edges": [[1,4],[1,5],[1,6],[2,4],[2,5],[2,6],[3,4],[3,5],[3,6]]}"#;

#[test]
fn help_and_version_exit_zero() {
    let help = evoder(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("derive"));

    let version = evoder(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn missing_subcommand_exits_one() {
    let out = evoder(&[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("Usage"));
}

#[test]
fn twins_reports_both_classes_of_the_3_3_bipartite_graph() {
    let file = temp_file("k33-edges", K33_EDGE_LIST);
    let path = file.to_str().unwrap();

    let table = evoder(&["twins", path]);
    assert_eq!(table.status.code(), Some(0));
    let text = stdout(&table);
    assert!(text.contains("twin classes:"), "missing label in {text}");
    assert!(text.contains("[1, 2, 3]") && text.contains("[4, 5, 6]"), "bad classes in {text}");

    let as_json = evoder(&["twins", path, "--out", "json"]);
    assert_eq!(as_json.status.code(), Some(0));
    let doc = json(&as_json);
    assert_eq!(doc["twin_partition"], serde_json::json!([[1, 2, 3], [4, 5, 6]]));
    assert_eq!(doc["gamma3"]["sizes"], serde_json::json!([3, 3]));
    assert_eq!(doc["gamma3"]["offsets"], serde_json::json!([0, 3]));
}

#[test]
fn derive_cross_validates_the_3_3_bipartite_graph() {
    let file = temp_file("k33-json", K33_JSON);
    let path = file.to_str().unwrap();

    let out = evoder(&["derive", path, "--out", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["method"], "both");
    assert_eq!(doc["dimension"], 2);
    assert_eq!(doc["agreement"], true);
    let basis = doc["basis"].as_array().expect("basis array");
    assert_eq!(basis.len(), 2);
    for mat in basis {
        let rows = mat.as_array().expect("matrix rows");
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 6));
    }
    // The graph is already block-ordered, so no relabeling is echoed.
    assert!(doc.get("relabeling").is_none());

    let table = evoder(&["derive", path]);
    assert_eq!(table.status.code(), Some(0));
    let text = stdout(&table);
    assert!(text.contains("dimension:       2"), "bad table: {text}");
    assert!(text.contains("routes agree:    true"), "bad table: {text}");
    assert!(text.contains("checks:"), "bad table: {text}");
}

#[test]
fn derive_single_route_methods_agree_on_dimension() {
    let file = temp_file("k33-single", K33_JSON);
    let path = file.to_str().unwrap();
    for method in ["closed-form", "oracle"] {
        let out = evoder(&["derive", path, "--method", method, "--out", "json"]);
        assert_eq!(out.status.code(), Some(0), "method {method}");
        let doc = json(&out);
        assert_eq!(doc["method"], method);
        assert_eq!(doc["dimension"], 2, "method {method}");
        assert!(doc.get("agreement").is_none(), "single route has no agreement");
    }
}

#[test]
fn derive_raw_runs_the_oracle_on_a_structure_matrix() {
    let file = temp_file("raw-k2", "0,1\n1,0\n");
    let path = file.to_str().unwrap();

    let out = evoder(&["derive", path, "--raw", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["method"], "oracle");
    assert_eq!(doc["dimension"], 0);
    assert!(doc.get("graph").is_none(), "raw input has no graph echo");

    let rejected = evoder(&["derive", path, "--raw", "--method", "both"]);
    assert_eq!(rejected.status.code(), Some(1));
    assert!(stderr(&rejected).contains("error:"));
}

#[test]
fn rank_reports_the_full_rank_shortcut() {
    let file = temp_file("p4-edges", "4\n1 2\n2 3\n3 4\n");
    let path = file.to_str().unwrap();

    let table = evoder(&["rank", path]);
    assert_eq!(table.status.code(), Some(0));
    let text = stdout(&table);
    assert!(text.contains("structure rank:  4"), "bad table: {text}");
    assert!(text.contains("non-singular:    true"), "bad table: {text}");
    assert!(text.contains("zero without solving"), "bad table: {text}");

    let raw = temp_file("raw-rank", "0,1,1\n1,0,1\n1,1,0\n");
    let out = evoder(&["rank", raw.to_str().unwrap(), "--raw", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["rank"], 3);
    assert_eq!(doc["non_singular"], true);
}

#[test]
fn family_emits_an_edge_list_that_derive_accepts() {
    let target = std::env::temp_dir().join(format!(
        "evoder-cli-{}-star4-edges",
        std::process::id()
    ));
    let emit = evoder(&["family", "star", "4", "--emit", target.to_str().unwrap()]);
    assert_eq!(emit.status.code(), Some(0));

    let out = evoder(&["derive", target.to_str().unwrap(), "--out", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["dimension"], 3);
    assert_eq!(doc["agreement"], true);
    std::fs::remove_file(&target).ok();

    let printed = evoder(&["family", "multipartite", "3", "3"]);
    assert_eq!(printed.status.code(), Some(0));
    let text = stdout(&printed);
    assert_eq!(text.lines().next(), Some("6"), "first line is the vertex count: {text}");
    assert_eq!(text.lines().count(), 10, "9 edges follow: {text}");
}

#[test]
fn family_rejects_bad_parameters() {
    let too_small = evoder(&["family", "wheel", "3"]);
    assert_eq!(too_small.status.code(), Some(1));
    assert!(stderr(&too_small).contains("invalid family parameters"));

    let unknown = evoder(&["family", "torus", "5"]);
    assert_eq!(unknown.status.code(), Some(1));
    assert!(stderr(&unknown).contains("invalid family parameters"));
}

#[test]
fn verify_small_sweep_passes() {
    let out = evoder(&["verify", "--nmax", "3", "--out", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["graphs_checked"], 6); // 1 + 1 + 4 labeled graphs
    assert_eq!(doc["failures"], serde_json::json!([]));
}

#[test]
fn verify_rejects_out_of_range_sweeps() {
    let too_big = evoder(&["verify", "--nmax", "8"]);
    assert_eq!(too_big.status.code(), Some(1));
    assert!(stderr(&too_big).contains("error:"));

    let unpruned_seven = evoder(&["verify", "--nmax", "7"]);
    assert_eq!(unpruned_seven.status.code(), Some(1));
    assert!(stderr(&unpruned_seven).contains("prune-iso"));
}

#[test]
fn unreadable_and_malformed_inputs_exit_one() {
    let missing = evoder(&["derive", "/no/such/file"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("error:"));

    let garbage = temp_file("garbage", "this is not a graph\n");
    let out = evoder(&["twins", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("malformed input"));

    let loops = temp_file("loop-edge", "3\n1 1\n");
    let looped = evoder(&["derive", loops.to_str().unwrap()]);
    assert_eq!(looped.status.code(), Some(1));
}

#[test]
fn disconnected_graphs_are_rejected() {
    let file = temp_file("disconnected", "4\n1 2\n3 4\n");
    let out = evoder(&["derive", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("connected"), "unexpected stderr: {err}");
}
