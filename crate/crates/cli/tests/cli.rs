use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn scratch(name: &str, contents: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumploci")).args(args).output().unwrap()
}

fn run_json(args: &[&str], code: i32) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn tcone_chain_link() {
    let v = run_json(&["tcone", "--poly", &fixture("chain-link.json")], 0);
    let comps = v["tau1"]["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    assert!(comps.iter().all(|c| c.as_array().unwrap().len() == 1));
    assert_eq!(v["equal"], false);
    assert_eq!(v["tau1_inside_tc1"], true);
    assert_eq!(v["tc1"]["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn toric_omega_tree() {
    let v = run_json(
        &["toric", "omega", "--complex", &fixture("tree3.json"), "--r", "2", "--plane", &fixture("tree3-plane.json")],
        0,
    );
    assert_eq!(v["member"], false);
    let v = run_json(
        &["toric", "omega", "--complex", &fixture("tree3.json"), "--r", "1", "--plane", &fixture("tree3-line.json")],
        0,
    );
    assert_eq!(v["member"], true);
}

#[test]
fn toric_res_tree() {
    let v = run_json(&["toric", "res", "--complex", &fixture("tree3.json")], 0);
    assert_eq!(v["resonance"]["subsets"], serde_json::json!([[1, 3]]));
    let v = run_json(&["toric", "raag", "--complex", &fixture("square.json")], 0);
    assert_eq!(v["connectivity"], 2);
    assert_eq!(v["omega_empty_from_r"], 3);
}

#[test]
fn arr_res1_deleted_b3() {
    let v = run_json(&["arr", "res1", "--forms", &fixture("deleted-b3.json"), "--seed", "7"], 0);
    assert_eq!(v["components"], 12);
    assert_eq!(v["resonance"]["codim"], 5);
    assert_eq!(v["braid"].as_array().unwrap().len(), 5);
}

#[test]
fn arr_points_and_omega() {
    let v = run_json(&["arr", "points", "--forms", &fixture("braid.json")], 0);
    assert_eq!(v["max_multiplicity"], 3);
    let v = run_json(&["arr", "omega", "--forms", &fixture("braid.json"), "--r", "1"], 0);
    assert_eq!(v["bound"], "undetermined");
    let v = run_json(&["arr", "omega", "--forms", &fixture("braid.json"), "--r", "5"], 0);
    assert_eq!(v["bound"], "empty");
    let generic = scratch("generic.json", r#"[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]"#);
    let v = run_json(&["arr", "omega", "--forms", &generic, "--r", "3"], 0);
    assert_eq!(v["bound"], "full");
}

#[test]
fn linkcv_and_cvchain() {
    let v = run_json(&["linkcv", "--poly", &fixture("trefoil.json")], 0);
    assert_eq!(v["model"]["isolated"].as_array().unwrap().len(), 3);
    let v = run_json(&["cvchain", "--chain", &fixture("s1s2-f2.json"), "--degree", "2"], 0);
    assert_eq!(v["locus"]["display"], "t1^2 - 1");
    assert_eq!(v["model"]["isolated"].as_array().unwrap().len(), 2);
}

#[test]
fn cv_subcommands() {
    let v = run_json(&["cv", "classify", "--models", &fixture("straight-c.json")], 0);
    assert_eq!(v["locally_straight"], true);
    assert_eq!(v["straight"], false);
    let v = run_json(
        &["cv", "omega", "--model", &fixture("straight-c-model.json"), "--plane", &fixture("plane-full2.json")],
        0,
    );
    assert_eq!(v["member"], false);
    assert_eq!(v["upper_bound"], true);
    let v = run_json(&["cv", "witness", "--input", &fixture("witness-3.json"), "--bound", "3"], 0);
    assert_eq!(v["lambda"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["omega_member"], false);
    assert_eq!(v["sigma_member"], false);
}

#[test]
fn aomoto_subcommands() {
    let alg = fixture("surface2.json");
    let v = run_json(&["aomoto", "betti", "--algebra", &alg, "--point", "1,-2,0,1/3"], 0);
    assert_eq!(v["betti"], 2);
    let v = run_json(&["aomoto", "member", "--algebra", &alg, "--point", "1,0,0,0", "--depth", "3"], 0);
    assert_eq!(v["member"], false);
    let v = run_json(&["aomoto", "betti", "--algebra", &fixture("exterior3.json"), "--point", "0,0,1", "--degree", "2"], 0);
    assert_eq!(v["all_degrees"], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn fixtures_all_run() {
    let list = run_json(&["fixtures", "list"], 0);
    let list = list["fixtures"].as_array().unwrap();
    assert!(list.len() >= 8);
    for module in ["laurent", "toric", "arrangements", "cvmodel", "aomoto"] {
        assert!(list.iter().filter(|f| f["module"] == module).count() >= 3, "{module}");
    }
    for f in list {
        let v = run_json(&["fixtures", "run", f["name"].as_str().unwrap()], 0);
        assert_eq!(v["fixture"], f["name"]);
    }
}

#[test]
fn named_fixtures() {
    let v = run_json(&["fixtures", "run", "braid"], 0);
    assert_eq!(v["report"]["res1"]["local"]["components"].as_array().unwrap().len(), 4);
    assert_eq!(v["report"]["res1"]["braid"].as_array().unwrap().len(), 1);
    let v = run_json(&["fixtures", "run", "straight-c"], 0);
    assert_eq!(v["report"]["omega"]["member"], false);
    assert_eq!(v["report"]["classify"]["failure"]["condition"], "c");
    let v = run_json(&["fixtures", "run", "s1s2"], 0);
    let straight: Vec<bool> =
        v["report"]["family"].as_array().unwrap().iter().map(|c| c["classify"]["straight"].as_bool().unwrap()).collect();
    assert_eq!(straight, vec![false, true, true]);
}

#[test]
fn precondition_errors_exit_2() {
    let v = run_json(&["fixtures", "run", "no-such"], 2);
    assert_eq!(v["error"]["kind"], "UnknownFixture");
    let forms = scratch("proportional.json", r#"[[1, 0, 0], [2, 0, 0], [0, 1, 0]]"#);
    let v = run_json(&["arr", "points", "--forms", &forms], 2);
    assert_eq!(v["error"]["kind"], "ProportionalForms");
    let v = run_json(&["aomoto", "betti", "--algebra", &fixture("surface2.json"), "--point", "1,2"], 2);
    assert_eq!(v["error"]["kind"], "DimensionMismatch");
    let v = run_json(&["cv", "witness", "--input", &fixture("witness-line.json"), "--bound", "0"], 0);
    assert_eq!(v["lambda"], serde_json::json!([0, 0]));
}

#[test]
fn parse_errors_exit_3() {
    let bad = scratch("bad.json", "{ not json");
    let v = run_json(&["tcone", "--poly", &bad], 3);
    assert_eq!(v["error"]["kind"], "Parse");
    let bad = scratch("bad-rational.json", r#"[["1/x", 0, 0]]"#);
    run_json(&["arr", "points", "--forms", &bad], 3);
    run_json(&["tcone", "--poly", "/nonexistent/file.json"], 3);
    assert_eq!(run(&["toric", "res"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["arr", "res1", "--forms", &fixture("braid.json"), "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--format", "tsv", "fixtures", "run", "deleted-b3"];
    let a = run(&args);
    assert_eq!(a.stdout, run(&args).stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.lines().all(|l| l.split('\t').count() == 2));
}

#[test]
fn reports_feed_back_as_inputs() {
    // The resonance arrangement of one run is a valid `--resonance` input.
    let v = run_json(&["arr", "res1", "--forms", &fixture("near-pencil.json")], 0);
    let res = scratch("np-res.json", &v["resonance"].to_string());
    let plane = scratch("np-plane.json", &v["resonance"]["components"][0].to_string());
    let plane = scratch("np-plane-sub.json", &format!(r#"{{"n": 4, "basis": {}}}"#, std::fs::read_to_string(plane).unwrap()));
    let model = scratch("np-model.json", r#"{"n": 4, "isolated": [[0, 0, 0, 0]]}"#);
    let out = run_json(&["cv", "omega", "--model", &model, "--plane", &plane, "--resonance", &res], 0);
    assert_eq!(out["upper_bound"], false);
    assert_eq!(out["plane"]["basis"], v["resonance"]["components"][0]);
}
