//! End-to-end tests of the command-line interface: exit codes, output
//! schemas, and byte-level determinism across `--jobs` settings.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flip-census"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {:?}", out);
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_hexagon_json() {
    let v = stdout_json(&["count", "--n", "6", "--format", "json"]);
    assert_eq!(v["command"], "count");
    assert_eq!(v["parameters"]["n"], "6");
    let result = &v["result"];
    assert_eq!(result["n"], 6);
    assert_eq!(result["total"], 45);
    let shapes = result["shapes"].as_array().unwrap();
    let lookup = |lam: &str| -> i64 {
        shapes
            .iter()
            .find(|s| s["lambda"] == lam)
            .unwrap_or_else(|| panic!("missing {lam}"))["a"]
            .as_i64()
            .unwrap()
    };
    assert_eq!(lookup("1,1,1,1"), 14);
    assert_eq!(lookup("2,1,1"), 21);
    assert_eq!(lookup("3,1"), 6);
    assert_eq!(lookup("2,2"), 3);
    assert_eq!(lookup("4"), 1);
}

#[test]
fn count_with_shape_filter() {
    let v = stdout_json(&["count", "--n", "7", "--shape", "2,1,1,1", "--format", "json"]);
    let shapes = v["result"]["shapes"].as_array().unwrap();
    assert_eq!(shapes.len(), 1);
    assert_eq!(shapes[0]["a"], 84);
}

#[test]
fn count_accepts_exponential_shape_syntax() {
    let v = stdout_json(&["count", "--n", "7", "--shape", "2 1^3", "--format", "json"]);
    assert_eq!(v["result"]["shapes"][0]["lambda"], "2,1,1,1");
    assert_eq!(v["result"]["shapes"][0]["a"], 84);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["count", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["classes", "--n", "6", "--shape", "2,1"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--n", "6", "--shape", "-3"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["count"]).status.code(), Some(2));
}

#[test]
fn verify_commands_pass_and_exit_0() {
    for args in [
        vec!["verify", "theorem", "--max-n", "6"],
        vec!["verify", "euler", "--max-n", "7"],
        vec!["verify", "columns", "--max-weight", "3"],
        vec!["verify", "of", "--max-n", "6"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("pass"), "{args:?}: {text}");
    }
}

#[test]
fn verify_json_reports_schema() {
    let v = stdout_json(&["verify", "columns", "--max-weight", "3", "--format", "json"]);
    assert_eq!(v["verdict"]["pass"], true);
    let check = &v["verdict"]["checks"][0];
    assert_eq!(check["check"], "columns");
    assert!(check["instances"].as_u64().unwrap() > 0);
    assert_eq!(check["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn classes_census_export_schema() {
    let v = stdout_json(&["classes", "--n", "5", "--format", "json"]);
    let shapes = v["result"]["shapes"].as_array().unwrap();
    assert_eq!(shapes.len(), 3);
    assert_eq!(shapes[2]["lambda"], "1,1,1");
    assert_eq!(shapes[2]["a"], 5);
    assert_eq!(shapes[2]["ae"], 1);
    assert_eq!(shapes[2]["fibers"][0]["nu"], "2");
    assert_eq!(shapes[2]["fibers"][0]["a"], 5);
    assert_eq!(shapes[2]["fibers"][0]["ae"], 1);
}

#[test]
fn census_csv_columns() {
    let out = run(&["classes", "--n", "5", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,lambda,nu,a,ae");
    assert!(text.contains("5,\"2,1\",,5,5"), "{text}");
    assert!(text.contains("5,\"1,1,1\",2,5,1"), "{text}");
}

#[test]
fn fvector_output() {
    let v = stdout_json(&["fvector", "--n", "6", "--format", "json"]);
    assert_eq!(v["result"]["f"].as_array().unwrap(), &[14, 21, 9, 1]);
    assert_eq!(v["result"]["euler"], 1);
}

#[test]
fn orbits_output() {
    let v = stdout_json(&["orbits", "--n", "4", "--group", "cyclic", "--format", "json"]);
    assert_eq!(v["result"]["orbit_count"], 2);
    let v = stdout_json(&[
        "orbits", "--n", "6", "--group", "dihedral", "--dim", "0", "--format", "json",
    ]);
    let mut sizes: Vec<u64> = v["result"]["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["size"].as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 6, 6]);
}

#[test]
fn of_table_json_matrix() {
    let v = stdout_json(&["of-table", "--max-weight", "3", "--format", "json"]);
    let mu: Vec<&str> = v["result"]["mu"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    assert_eq!(mu, vec!["0", "1", "2", "1,1", "3", "2,1", "1,1,1"]);
    let of = v["result"]["of"].as_array().unwrap();
    // Row ∅: 1, 2, 5, 4, 14, 10, 8.
    let row0: Vec<i64> = of[0].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(row0, vec![1, 2, 5, 4, 14, 10, 8]);
}

#[test]
fn cells_table_marks_impossible() {
    let out = run(&["cells", "--n", "7"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("impossible"), "{text}");
    let v = stdout_json(&["cells", "--n", "6", "--format", "json"]);
    assert_eq!(v["result"]["f_vector"].as_array().unwrap(), &[14, 21, 9, 1]);
    let dim3 = &v["result"]["dims"][3]["entries"];
    assert_eq!(dim3[0]["mu"], "3");
    assert_eq!(dim3[0]["lambda"], "4");
    assert_eq!(dim3[0]["cell_type"], "K5");
    assert_eq!(dim3[1]["possible"], false);
}

#[test]
fn json_output_is_byte_identical_across_jobs() {
    for args in [
        vec!["verify", "theorem", "--max-n", "7", "--format", "json"],
        vec!["verify", "of", "--max-n", "6", "--format", "json"],
        vec!["count", "--n", "9", "--format", "json"],
        vec!["classes", "--n", "6", "--format", "csv"],
    ] {
        let mut with_one = args.clone();
        with_one.extend(["--jobs", "1"]);
        let mut with_four = args.clone();
        with_four.extend(["--jobs", "4"]);
        let a = run(&with_one);
        let b = run(&with_four);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "stdout differs for {args:?}");
    }
}
