use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn semipair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semipair"))
        .args(args)
        .env_remove("SEMIPAIR_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn sl2_double_root_is_unstable_with_witness() {
    let out = semipair(&["pair-check-sl2", "--f", "1", "--g", "0,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["schema"], "semipair.pair-check-sl2.v1");
    assert_eq!(v["semistable"], false);
    assert_eq!(v["verdict"]["status"], "unstable");
    assert_eq!(v["verdict"]["futaki_gen"], 2);
}

#[test]
fn sl2_simple_roots_are_semistable() {
    let out = semipair(&["pair-check-sl2", "--f", "1", "--g", "0,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"]["status"], "proven-semistable");
}

#[test]
fn scaled_containment_d4_holds() {
    let out = semipair(&["scaled-containment", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["holds"], true);
}

#[test]
fn xnil_example_reproduces_the_characteristic() {
    let out = semipair(&["examples", "sl3-xnil", "--samples", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["chi_min_class"], serde_json::json!([2, 2, 0]));
    assert_eq!(v["h"], serde_json::json!(["1/2", "1/2", "-1"]));
    assert_eq!(v["degeneration_weight"], -2);
}

#[test]
fn outputs_match_golden_files() {
    assert_eq!(
        String::from_utf8(semipair(&["chow-polytope", "--d", "3"]).stdout).unwrap(),
        golden("chow-polytope-d3.json")
    );
    let out = semipair(&["examples", "quadric-2x2", "--samples", "4", "--seed", "11"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("quadric-2x2.json")
    );
}

#[test]
fn identical_configs_give_identical_bytes() {
    let pair = scratch(
        "det-pair.json",
        r#"{"v": {"n": 2, "shape": "Sym(1)", "terms": [{"weight": [1, 0, 0], "coeff": "1"}]},
            "w": {"n": 2, "shape": "Sym(2)", "terms": [{"weight": [0, 1, 1], "coeff": "1"}, {"weight": [2, 0, 0], "coeff": "-1/2"}]}}"#,
    );
    let p = pair.to_str().unwrap();
    let a = semipair(&["pair-check", p, "--samples", "6", "--seed", "5"]);
    let b = semipair(&["pair-check", p, "--samples", "6", "--seed", "5"]);
    assert!(matches!(a.status.code(), Some(0) | Some(2)));
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_semipair"))
        .args(["pair-check", p, "--samples", "6"])
        .env("SEMIPAIR_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
}

#[test]
fn malformed_json_reports_position() {
    let bad = scratch("bad.json", "{\"v\": [1, 2,\n  }");
    let out = semipair(&["pair-check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["contract"], "well-formed-input");
    assert!(err["message"].as_str().unwrap().contains("line 2"));
}

#[test]
fn precondition_violations_name_the_contract() {
    let out = semipair(&["discriminant", "--f", "1,1"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["contract"], "minimum-degree");
    let out = semipair(&[
        "koszul-resultant",
        "--f",
        "1,0,1",
        "--g",
        "0,1,1",
        "--m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        serde_json::from_slice::<Value>(&out.stderr).unwrap()["contract"],
        "twist-range"
    );
}

#[test]
fn toric_failure_exits_two_with_witness() {
    let data = scratch("toric.json", r#"{"a": [[1, 1], [-1, -1]], "b": [[1, 1]]}"#);
    let out = semipair(&["toric-extend", data.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["extension"]["result"], "fails");
    assert!(v["extension"]["witness"].is_array());
    let ok = scratch(
        "toric-ok.json",
        r#"{"a": [[1, 0], [0, 1]], "b": [[1, 0], [0, 1]]}"#,
    );
    assert_eq!(
        semipair(&["toric-extend", ok.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn algebra_subcommands() {
    assert_eq!(
        json(&semipair(&["resultant", "--f", "-1,1", "--g", "-2,1"]))["resultant"],
        "1"
    );
    let d = json(&semipair(&["discriminant", "--f", "1,0,1"]));
    assert_eq!(d["discriminant"], "-4");
    let k = json(&semipair(&[
        "koszul-resultant",
        "--f",
        "1,0,1",
        "--g",
        "0,1,1",
        "--m",
        "3",
    ]));
    assert_eq!(
        k["torsion"].as_str().unwrap().trim_start_matches('-'),
        k["sylvester"].as_str().unwrap().trim_start_matches('-')
    );
    assert_eq!(
        json(&semipair(&[
            "euler-degree",
            "--kind",
            "resultant",
            "--d",
            "5",
            "--m",
            "3"
        ]))["degree"],
        10
    );
    assert_eq!(
        json(&semipair(&[
            "euler-degree",
            "--kind",
            "discriminant",
            "--d",
            "5",
            "--m",
            "3"
        ]))["degree"],
        8
    );
    assert_eq!(
        json(&semipair(&["euler-degree", "--h0", "7,8,1"]))["degree"],
        6
    );
    let v = json(&semipair(&["disc-polytope", "--d", "2"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
}

#[test]
fn complex_and_vector_inputs() {
    let c = scratch("complex.json", r#"{"dims": [1, 1], "maps": [[["3"]]]}"#);
    let out = semipair(&["torsion", c.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["torsion"], "3");
    let v = scratch(
        "vector.json",
        r#"{"n": 1, "shape": "Sym(2)", "terms": [{"weight": [2, 0], "coeff": "1"}]}"#,
    );
    let ch = json(&semipair(&["characteristic", v.to_str().unwrap()]));
    assert_eq!(ch["h"], serde_json::json!(["1", "-1"]));
}

#[test]
fn energy_profile_csv_and_slope() {
    let pair = scratch(
        "energy-pair.json",
        r#"{"v": {"n": 1, "shape": "Trivial", "terms": [{"weight": [], "coeff": "1"}]},
            "w": {"n": 1, "shape": "Sym(2)", "terms": [{"weight": [2, 0], "coeff": "1"}]}}"#,
    );
    let p = pair.to_str().unwrap();
    let out = semipair(&["energy-profile", p, "--u", "-1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let slope = v["slope"].as_f64().unwrap();
    assert!((slope - v["futaki_gen"].as_f64().unwrap()).abs() < 1e-3);
    let csv =
        String::from_utf8(semipair(&["energy-profile", p, "--u", "-1,1", "--csv"]).stdout).unwrap();
    assert!(csv.starts_with("t,log_t2,nu\n"));
    assert_eq!(csv.lines().count(), 26);
    let fut = json(&semipair(&["futaki", p, "--u", "1,-1"]));
    assert_eq!(fut["futaki_gen"], 2);
}
