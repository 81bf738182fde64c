//! End-to-end checks of the command-line binary: flag parsing, text/JSON
//! agreement, file IO, and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_cosetid"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
    )
}

#[test]
fn coset_text_and_json_agree() {
    let (code, text, _) = run(&["coset", "--group", "S4", "--subgroup", "klein4", "--t", "1..2"]);
    assert_eq!(code, 0);
    assert!(text.contains("t=1  P = 1/2"));
    assert!(text.contains("t=2  P = 1"));
    assert!(text.contains("gamma       = 2"));

    let (code, json, _) = run(&[
        "coset", "--group", "S4", "--subgroup", "klein4", "--t", "1..2", "--json",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(report["rows"][0]["probability"], "1/2");
    assert_eq!(report["rows"][1]["probability"], "1");
    assert_eq!(report["gamma"]["t"], 2);
}

#[test]
fn sod_heisenberg_values() {
    let (code, text, _) = run(&["sod", "--group", "heisenberg:3,1", "--t", "1..2"]);
    assert_eq!(code, 0);
    assert!(text.contains("P = 23/27"));
    assert!(text.contains("gamma       = 2"));
}

#[test]
fn rationals_never_rendered_as_decimals() {
    let (_, json, _) = run(&["sod", "--group", "S4", "--t", "1..3", "--json"]);
    let report: serde_json::Value = serde_json::from_str(&json).unwrap();
    for row in report["rows"].as_array().unwrap() {
        let p = row["probability"].as_str().unwrap();
        assert!(!p.contains('.'), "decimal leaked into {p}");
    }
}

#[test]
fn table_roundtrip_through_files() {
    let dir = std::env::temp_dir().join(format!("cosetid-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    let (code, _, _) = run(&[
        "table", "--group", "S3", "--json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, text, _) = run(&["table", "--load", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("group of order 6"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn spec_file_input() {
    let dir = std::env::temp_dir().join(format!("cosetid-spec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("problem.json");
    std::fs::write(
        &path,
        r#"{
            "group": {"family": "heisenberg", "params": {"p": 2, "n": 1}},
            "mode": {"coset": {"subgroup": "center"}}
        }"#,
    )
    .unwrap();
    let (code, text, _) = run(&["coset", "--spec", path.to_str().unwrap(), "--t", "1"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("t=1  P = 1"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_code_one_on_bad_spec() {
    let (code, _, err) = run(&["sod", "--group", "q8", "--t", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("unrecognized group"));
    let (code, _, _) = run(&["coset", "--group", "S4", "--subgroup", "normalizer", "--t", "1"]);
    assert_eq!(code, 1);
    let (code, _, err) = run(&["sod", "--group", "S3", "--t", "1", "--threshold", "1/3"]);
    assert_eq!(code, 1);
    assert!(err.contains("threshold"));
}

#[test]
fn exit_code_two_on_cap() {
    let orders = vec!["2"; 31].join(",");
    let (code, _, err) = run(&["sod", "--group", &format!("abelian:{orders}"), "--t", "1"]);
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("cap"));
}

#[test]
fn verify_and_reproduce_succeed() {
    let (code, text, _) = run(&["verify", "--instance", "klein4-in-s4/t=1"]);
    assert_eq!(code, 0);
    assert!(text.contains("ok"));

    let (code, text, _) = run(&["reproduce", "--target", "klein4-coset"]);
    assert_eq!(code, 0);
    assert!(text.contains("0 failures"));

    let (code, _, err) = run(&["reproduce", "--target", "imaginary"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn families_evaluators() {
    let (code, text, _) = run(&["families", "van-dam", "--n", "4", "--t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "11/16");

    let (code, text, _) = run(&["families", "heisenberg", "--p", "3", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(text.trim(), "23/27");

    let (code, text, _) = run(&["families", "curve", "--q", "3", "--d", "1", "--t", "1"]);
    assert_eq!(code, 0);
    assert!(text.contains("|Z_1| = 7"));

    let (code, text, _) = run(&["families", "gammas", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(text.contains("identify permutation: 6"));
    assert!(text.contains("identify even permutation: 4"));
    assert!(text.contains("name the sign: 3"));
}

#[test]
fn explicit_subgroup_from_file() {
    let dir = std::env::temp_dir().join(format!("cosetid-embed-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rotations.json");
    std::fs::write(
        &path,
        r#"{
            "group": {"family": "abelian_product", "params": {"orders": [3]}},
            "embedding": [
                {"h": [0], "g": [0, 1, 2]},
                {"h": [1], "g": [1, 2, 0]},
                {"h": [2], "g": [2, 0, 1]}
            ]
        }"#,
    )
    .unwrap();
    let subgroup = format!("@{}", path.display());
    let (code, text, err) = run(&["coset", "--group", "S3", "--subgroup", &subgroup, "--t", "1"]);
    assert_eq!(code, 0, "{err}");
    assert!(text.contains("t=1  P = 1"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}
