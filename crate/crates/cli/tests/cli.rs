use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superdom"))
        .args(args)
        .env_remove("SUPERDOM_TIMEOUT_MS")
        .env_remove("SUPERDOM_NODE_LIMIT")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (code(&out), v)
}

#[test]
fn compute_path_seven() {
    let (c, v) = json(&["compute", "--family", "path:7", "--invariants", "gamma_sp"]);
    assert_eq!(c, 0);
    assert_eq!(v["superdom"]["gamma_sp"], 4);
    assert_eq!(v["formula"], 4);
    assert_eq!(v["superdom"]["exact"], true);
}

#[test]
fn compute_single_vertex() {
    let (c, v) = json(&["compute", "--family", "complete:1"]);
    assert_eq!(c, 0);
    assert_eq!(v["superdom"]["gamma_sp"], 1);
}

#[test]
fn compute_cube_from_graph6() {
    let (c, v) = json(&["compute", "--g6", "Gr`HOk"]);
    assert_eq!(c, 0);
    assert_eq!(v["n"], 8);
    assert_eq!(v["superdom"]["gamma_sp"], 4);
}

#[test]
fn compute_all_invariants() {
    let (c, v) = json(&["compute", "--family", "cycle:6", "--invariants", "all"]);
    assert_eq!(c, 0);
    let get = |name: &str| {
        v["invariants"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["name"] == name)
            .unwrap_or_else(|| panic!("{name} missing"))["value"]
            .clone()
    };
    assert_eq!(get("gamma"), 2);
    assert_eq!(get("matching"), 3);
    assert_eq!(get("independence"), 3);
    assert_eq!(get("vertex_cover"), 3);
    assert_eq!(get("two_packing"), 2);
}

#[test]
fn inline_edges() {
    let (c, v) = json(&["compute", "--n", "3", "--edges", "0-1,1-2"]);
    assert_eq!(c, 0);
    assert_eq!(v["superdom"]["gamma_sp"], 2);
}

#[test]
fn verify_degree_fixture_three_tight() {
    let (c, v) = json(&["verify", "--file", &fixture("degree_tight.edges")]);
    assert_eq!(c, 0);
    assert_eq!(v["gamma_sp"], 5);
    let tight = |name: &str| {
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["name"] == name)
            .unwrap()["tight"]
            .as_bool()
            .unwrap()
    };
    assert!(tight("order_minus_domination"));
    assert!(tight("order_minus_packing"));
    assert!(tight("max_degree"));
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["holds"] != false));
}

#[test]
fn product_of_stars() {
    let (c, v) = json(&["product", "--left", "star:2", "--right", "star:2"]);
    assert_eq!(c, 0);
    assert_eq!(v["gamma_sp_product"], 5);
    assert_eq!(v["formula"], 5);
    let bip = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "bipartite_product_floor")
        .unwrap();
    assert_eq!(bip["tight"], true);
}

#[test]
fn sweep_all_labeled_five_is_clean() {
    let (c, v) = json(&["sweep", "--all-labeled", "5"]);
    assert_eq!(c, 0);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["skipped"], 0);
    // 1 + 2 + 8 + 64 + 1024 labeled graphs on 1..=5 vertices
    assert_eq!(v["graphs"], 1099);
}

#[test]
fn enumerate_pstar_for_given_set() {
    let (c, v) = json(&["enumerate", "--file", &fixture("lambda_one.edges"), "--set", "0,2,3"]);
    assert_eq!(c, 0);
    assert_eq!(v["sets"][0]["pstar"], serde_json::json!([[0], [3]]));
}

#[test]
fn enumerate_reports_lambda() {
    let (c, v) = json(&["enumerate", "--file", &fixture("lambda_two.edges")]);
    assert_eq!(c, 0);
    assert_eq!(v["gamma_sp"], 5);
    assert_eq!(v["lambda"]["value"], 2);
}

#[test]
fn vizing_small_scan() {
    let (c, v) = json(&["vizing", "--max-n", "3"]);
    assert_eq!(c, 0);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&run(&["compute", "--family", "nonsense"])), 2);
    assert_eq!(code(&run(&["compute", "--g6", "~~~"])), 2);
    assert_eq!(code(&run(&["compute", "--n", "3", "--edges", "0-7"])), 2);
    assert_eq!(code(&run(&["compute", "--file", "/nonexistent/graph.edges"])), 2);
    // clap usage errors share the input code
    assert_eq!(code(&run(&["compute", "--family", "path:3", "--g6", "Bw"])), 2);
    assert_eq!(code(&run(&["--bruteforce-cap", "0", "compute", "--family", "path:3"])), 2);
}

#[test]
fn corpus_parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("superdom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.g6");
    std::fs::write(&path, "Bw\nnot-a-graph\nCF\n").unwrap();
    let out = run(&["sweep", "--g6-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains(":2:"), "stderr: {err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn node_budget_exhaustion_exits_three_with_interval() {
    let out = run(&["--node-limit", "1", "--format", "json", "compute", "--family", "cycle:10"]);
    assert_eq!(code(&out), 3);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["superdom"]["exact"], false);
    let b = v["superdom"]["bounds"].as_array().unwrap();
    assert!(b[0].as_u64().unwrap() <= 6 && 6 <= b[1].as_u64().unwrap());
}

#[test]
fn env_overrides_caps() {
    let out = Command::new(env!("CARGO_BIN_EXE_superdom"))
        .args(["compute", "--family", "cycle:10"])
        .env("SUPERDOM_NODE_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

#[test]
fn random_sweep_is_identical_across_worker_counts() {
    let args = |w: &'static str| {
        run(&[
            "--format", "json", "--workers", w, "sweep", "--random", "40", "--n-min", "6", "--n-max", "10", "--seed", "11",
            "--densities", "0.3,0.6", "--reports",
        ])
    };
    let a = args("1");
    let b = args("4");
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn random_sweep_requires_seed() {
    assert_eq!(code(&run(&["sweep", "--random", "5"])), 2);
}

#[test]
fn csv_output_has_header() {
    let out = run(&["--format", "csv", "verify", "--family", "cycle:8"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph_id,bound,applicable,lhs,rhs,holds,slack,tight"));
    assert!(text.lines().any(|l| l.contains(",matching,") && l.ends_with(",true")));
}
