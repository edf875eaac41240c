use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn validator() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = specht(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (v, code(&o))
}

const JSON_CASES: &[&[&str]] = &[
    &["tableaux", "--n", "5", "--k", "1", "--d", "3"],
    &["tableaux", "--n", "5", "--k", "1", "--d", "3", "--count-only"],
    &["basis", "--n", "4", "--k", "2", "--d", "2"],
    &["straighten", "--tableau", "top=2,1;bottom=3,4", "--k", "2"],
    &["wlp", "--n", "4", "--field", "fp:2"],
    &["slp", "--n", "3", "--field", "fp:5"],
    &["decomp", "--n", "5", "--k", "1", "--d", "3"],
    &["verify", "--theorem", "radD", "--n", "4", "--k", "1", "--d", "2"],
    &["verify", "--theorem", "perfectD", "--n", "5", "--k", "2", "--field", "fp:2"],
    &["verify", "--theorem", "hE", "--n", "5", "--k", "2"],
    &["verify", "--theorem", "jnk", "--n", "5", "--k", "2", "--field", "fp:2"],
    &["gb", "--n", "3", "--ideal", "x1 - x2, x2 - x3", "--order", "lex"],
    &["member", "--n", "3", "--ideal", "x1 - x2, x2 - x3", "--poly", "x1 - x3"],
    &["colon", "--n", "2", "--ideal", "x1*x2", "--by", "x1"],
    &["intersect", "--n", "2", "--ideal", "x1", "--other", "x2"],
    &["saturate", "--n", "2", "--ideal", "x1^2, x1*x2"],
    &["hilbert", "--n", "3", "--ideal", "x1*x2, x1*x3, x2*x3"],
    &["reproduce", "--example", "i31"],
];

#[test]
fn count_only_example() {
    let o = specht(&["tableaux", "--n", "5", "--k", "1", "--d", "3", "--count-only"]);
    assert_eq!((code(&o), stdout(&o)), (0, "9\n".to_string()));
}

#[test]
fn wlp_fails_over_f2_and_agrees() {
    let o = specht(&["wlp", "--n", "4", "--field", "fp:2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank_test"], false);
    assert_eq!(v["threshold_predicate"], false);
    assert_eq!(v["agree"], true);
    assert_eq!(code(&o), 0);
    let (v, c) = json(&["wlp", "--n", "4", "--field", "fp:3"]);
    assert_eq!((v["result"]["rank_test"].clone(), c), (Value::Bool(true), 0));
}

#[test]
fn perfect_d_over_f2_prints_witness() {
    let o = specht(&["verify", "--theorem", "perfectD", "--n", "5", "--k", "2", "--field", "fp:2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("fails (expected fails)"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("witness: ")), "{out}");
}

#[test]
fn witness_is_confirmed_by_membership() {
    let (v, _) = json(&["verify", "--theorem", "perfectD", "--n", "5", "--k", "2", "--field", "fp:2"]);
    let w = v["result"]["witness"].as_str().unwrap();
    let i52 = "x1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x3*x4, x1*x3*x5, x1*x4*x5, x2*x3*x4, x2*x3*x5, x2*x4*x5, x3*x4*x5";
    let o = specht(&["basis", "--n", "5", "--k", "2", "--d", "2", "--field", "fp:2"]);
    let gens: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    let ideal = format!("{}, {i52}", gens.join(", "));
    let o = specht(&["member", "--n", "5", "--field", "fp:2", "--ideal", &ideal, "--poly", w]);
    assert_eq!(stdout(&o), "false\n");
}

#[test]
fn json_outputs_match_schema_and_round_trip() {
    let validator = validator();
    for args in JSON_CASES {
        let (v, _) = json(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

#[test]
fn schema_rejects_malformed_documents() {
    let validator = validator();
    let bad = serde_json::json!({ "schema_version": 2, "command": "wlp", "result": {} });
    assert!(!validator.is_valid(&bad));
    let bad = serde_json::json!({ "schema_version": 1, "command": "wlp", "result": { "n": 4 } });
    assert!(!validator.is_valid(&bad));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        &["verify", "--theorem", "perfect", "--n", "5", "--k", "2", "--field", "fp:2", "--json"][..],
        &["reproduce", "--example", "p23"][..],
        &["basis", "--n", "5", "--k", "1", "--d", "3", "--json"][..],
    ] {
        assert_eq!(specht(args).stdout, specht(args).stdout, "{args:?}");
    }
}

#[test]
fn reproduce_matches_golden_files() {
    for e in ["513", "i31", "p23"] {
        let o = specht(&["reproduce", "--example", e]);
        assert_eq!(code(&o), 0, "{e}: {}", stdout(&o));
        assert!(!stdout(&o).contains("--- golden"));
    }
    let out = stdout(&specht(&["reproduce", "--example", "513"]));
    assert!(out.starts_with("V(5,1,3) over q: 9 standard tableaux\n"));
    assert!(out.contains("x2*x4*x5 - x3*x4*x5"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&specht(&["--bogus"])), 64);
    assert_eq!(code(&specht(&["wlp", "--n", "4", "--field", "fp:4"])), 64);
    assert_eq!(code(&specht(&["verify", "--theorem", "nope", "--n", "4", "--k", "1"])), 64);
    assert_eq!(code(&specht(&["tableaux", "--n", "5", "--k", "3", "--d", "3"])), 64);
    assert_eq!(code(&specht(&["verify", "--theorem", "rad", "--n", "6", "--k", "1"])), 2);
    assert_eq!(code(&specht(&["wlp", "--n", "11"])), 2);
    assert_eq!(code(&specht(&["--help"])), 0);
    let (v, c) = json(&["verify", "--theorem", "jnk", "--n", "5", "--k", "2", "--field", "fp:2"]);
    assert_eq!(c, 64);
    assert_eq!(v["error"]["kind"], "CharacteristicTooSmall");
}

#[test]
fn allow_large_lifts_caps_with_warning() {
    let o = specht(&["wlp", "--n", "11", "--field", "fp:7", "--allow-large"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn straighten_prints_coordinates() {
    let o = specht(&["straighten", "--tableau", "top=2,1;bottom=3,4", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.contains(" * [top=")), "{out}");
}

#[test]
fn batch_runs_every_entry_in_order() {
    let path = std::env::temp_dir().join(format!("specht-batch-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"[
            {"theorem": "radD", "n": 4, "k": 1, "d": 2},
            {"theorem": "perfectD", "n": 5, "k": 2, "field": "fp:2"},
            {"theorem": "coc", "n": 4, "k": 2, "field": "fp:3"},
            {"theorem": "primary", "n": 5, "k": 2}
        ]"#,
    )
    .unwrap();
    let (v, c) = json(&["verify", "--batch", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(c, 0);
    assert_eq!(v["command"], "batch");
    let names: Vec<&str> = v["result"].as_array().unwrap().iter().map(|r| r["theorem"].as_str().unwrap()).collect();
    assert_eq!(names, ["radD", "perfectD", "coc", "primary"]);
    assert!(validator().is_valid(&v));
}
