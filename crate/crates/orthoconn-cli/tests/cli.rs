use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthoconn")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn cells(v: &Value) -> Vec<Vec<String>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_string()).collect())
        .collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orthoconn-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn transposition_matrix_on_the_triangle() {
    let out = run(&["connect", "--d", "2", "--n", "1", "--kappa", "0,0,0", "--tau", "(12)", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(cells(&v["entries"]), vec![vec!["-1/2", "3/2"], vec!["1/2", "1/2"]]);
    assert_eq!(v["order"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(v["agree"], Value::Bool(true));
}

#[test]
fn identity_cycle_gives_identity_matrix() {
    let out = run(&["connect", "--d", "3", "--n", "2", "--kappa", "1/2,1/3,1/4,1/5", "--tau", "(1)", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(0));
    let m = cells(&json(&out)["entries"]);
    assert_eq!(m.len(), 6);
    for (i, row) in m.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            assert_eq!(c, if i == j { "1" } else { "0" });
        }
    }
}

#[test]
fn orthogonality_suite_passes() {
    let out = run(&["verify", "--suite", "orthogonality", "--d", "3", "--n", "3", "--kappa", "1/2,1/3,1/4,1/5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["reports"].as_array().unwrap().len(), 24);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["connect", "--n", "1", "--kappa", "0,x,0", "--tau", "(12)"],
        vec!["connect", "--d", "3", "--n", "1", "--kappa", "0,0,0", "--tau", "(12)"],
        vec!["connect", "--n", "1", "--kappa", "0,0,0", "--tau", "(14)"],
        vec!["connect", "--n", "1", "--kappa", "0,-1,0", "--tau", "(12)"],
        vec!["racah", "dual", "--N", "2", "--beta", "1/2,7/3,5/2,9/2"],
        vec!["verify", "--suite", "acceptance", "--criterion", "11"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: [&[&str]; 3] = [
        &["connect", "--n", "2", "--kappa", "1/2,1/3,1/4,1/5", "--tau", "(13)(24)", "--method", "closed", "--normalized"],
        &["verify", "--suite", "convolution", "--d", "2", "--seed", "7"],
        &["kraw", "connect", "--N", "4", "--rho", "1/5,1/3", "--n", "2", "--tau", "(123)"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn csv_cells_are_rationals() {
    let out = run(&["connect", "--n", "1", "--kappa", "0,0,0", "--tau", "(12)", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows, ["row,\"[1, 0]\",\"[0, 1]\"", "\"[1, 0]\",-1/2,3/2", "\"[0, 1]\",1/2,1/2"]);
}

#[test]
fn out_directory_receives_artifacts() {
    let dir = scratch("out");
    let d = dir.to_str().unwrap();
    let out = run(&["basis", "--family", "sphere", "--n", "2", "--kappa", "0,0,0", "--out", d]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("sphere-basis.json")).unwrap()).unwrap();
    assert_eq!(v["polynomials"].as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn discrete_and_geometric_routes_agree() {
    for args in [
        vec!["hahn", "connect", "--N", "3", "--kappa", "1/2,1/3,1/4", "--n", "2", "--tau", "(123)"],
        vec!["ball", "connect", "--n", "3", "--kappa", "1/2,1/3,1/4", "--tau", "(12)"],
        vec!["sphere", "connect", "--n", "2", "--kappa", "1/2,1/3,1/4", "--tau", "(13)"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["agree"], Value::Bool(true), "{args:?}");
    }
}

#[test]
fn verification_verbs_pass() {
    for args in [
        vec!["racah", "verify", "--N", "3", "--beta", "1/2,7/3,5/2,9/2"],
        vec!["hahn", "verify", "--N", "3", "--kappa", "1/2,1/3,1/4", "--n", "2"],
        vec!["kraw", "verify", "--N", "3", "--rho", "1/5,1/3", "--n", "2"],
        vec!["ball", "verify", "--n", "2", "--kappa", "1/2,1/3,1/4"],
        vec!["sphere", "verify", "--n", "2", "--kappa", "1/2,1/3,1/4"],
        vec!["verify", "--suite", "example-9-10", "--n", "2"],
        vec!["verify", "--suite", "closed-vs-gram", "--d", "4", "--n", "1"],
        vec!["verify", "--suite", "disk", "--mu", "-1/3", "--n", "3"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(json(&out)["passed"], Value::Bool(true), "{args:?}");
    }
}

#[test]
fn racah_dual_swaps_roles() {
    let out = run(&["racah", "dual", "--N", "2", "--beta", "1/2,7/3,5/2,9/2", "--nu", "1,0", "--x", "0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let row = &json(&out)["rows"][0];
    // x~_j = N - (nu_1 + ... + nu_{d+1-j}), nu~_j = x_{d+2-j} - x_{d+1-j} with x_0 = 0, x_3 = N.
    assert_eq!(row["dual_x"], serde_json::json!([1, 1]));
    assert_eq!(row["dual_nu"], serde_json::json!([1, 1]));
}
