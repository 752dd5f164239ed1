use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer-kit"))
        .args(args)
        .env_remove("SPRINGER_KIT_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = kit(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_schema_valid(value: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.schema.json");
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn shape_reports() {
    let v = json(&["shape", "2,2,1,1", "--json"]);
    assert_eq!(v["springer_dim"], 7);
    assert_eq!(v["summary"]["bala_carter"], 6);
    assert_eq!(v["summary"]["singular"], 1);
    assert_eq!(v["reports"].as_array().unwrap().len(), 9);
    assert_schema_valid(&v);

    let v = json(&["shape", "5", "--json"]);
    assert_eq!(v["springer_dim"], 0);
    assert_eq!(v["reports"][0]["singular"]["verdict"], "smooth");
    assert_schema_valid(&v);

    let text = stdout(&kit(&["--no-stamp", "shape", "3,2,2"]));
    assert!(text.contains("dim B_u          6"));
    assert!(text.contains("exists singular  yes"));
}

#[test]
fn composition_reports() {
    let v = json(&["composition", "1,2,2,1", "--json"]);
    assert_eq!(v["singular"]["verdict"], "singular");
    assert_eq!(v["singular"]["witness"]["pattern"], serde_json::json!([1, 2, 2, 1]));
    assert_schema_valid(&v);

    let v = json(&["composition", "2,3,1,2", "--json"]);
    assert_eq!(v["tableau"], serde_json::json!([[1, 2, 5], [3, 4], [6, 8], [7]]));
    assert_schema_valid(&v);

    let v = json(&["composition", "4", "--json"]);
    assert_eq!(v["singular"]["verdict"], "smooth");
    assert_eq!(v["dim"], 0);
    assert_schema_valid(&v);
}

#[test]
fn pattern_reports() {
    let v = json(&["pattern", "1 2 5 | 3 8 | 6 7 | 4", "--json"]);
    assert_eq!(v["tableau"], serde_json::json!([[1, 2, 5], [3, 7], [4, 8], [6]]));
    assert_schema_valid(&v);

    let v = json(&["pattern", "1 2 5 | 3 4 | 6 7", "--json"]);
    assert_eq!(v["in_pi1"], false);
    assert_eq!(v["nesting_violations"].as_array().unwrap().len(), 1);
    assert_schema_valid(&v);

    let v = json(&["pattern", "1 5 | 2 3 4 | 6 7", "--json"]);
    assert_eq!(v["in_pi1"], true);
    assert_eq!(v["dense"], true);
    assert_schema_valid(&v);
}

#[test]
fn pattern_rendering() {
    let text = stdout(&kit(&["--no-stamp", "pattern", "1 4 | 2 3", "--render", "ascii"]));
    assert!(text.ends_with(" +--------+\n |  +--+  |\n 1  2  3  4\n"), "{text}");

    let doc = stdout(&kit(&["pattern", "1 3 | 2 4", "--render", "svg"]));
    assert!(doc.starts_with("<?xml") && doc.trim_end().ends_with("</svg>"));
    assert_eq!(doc.matches("<path").count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("arcs.svg");
    let out = kit(&["pattern", "1 3 | 2 4", "--render", "svg", "--output", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(file).unwrap(), doc);
}

#[test]
fn atlas_files_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = kit(&["atlas", "--max-n", "4", "--out-dir", dir.path().to_str().unwrap()]);
        assert!(out.status.success());
    }
    let mut names: Vec<String> = fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    // p(1) + p(2) + p(3) + p(4) = 11 shapes, plus the index
    assert_eq!(names.len(), 12);
    assert!(names.contains(&"atlas_2-1-1.json".to_string()));
    assert!(names.contains(&"index.json".to_string()));
    for name in &names {
        let first = fs::read(a.path().join(name)).unwrap();
        assert_eq!(first, fs::read(b.path().join(name)).unwrap(), "{name}");
        assert_schema_valid(&serde_json::from_slice(&first).unwrap());
    }

    let empty = tempfile::tempdir().unwrap();
    assert!(kit(&["atlas", "--max-n", "0", "--out-dir", empty.path().to_str().unwrap()])
        .status
        .success());
    assert_eq!(fs::read_dir(empty.path()).unwrap().count(), 1);
}

#[test]
fn verify_suites_pass() {
    let out = kit(&["--no-stamp", "verify", "--suite", "all", "--max-n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
    for suite in ["dims", "orbits"] {
        let out = kit(&["verify", "--suite", suite, "--max-n", "6", "--jobs", "2"]);
        assert!(out.status.success(), "{suite}");
    }
}

#[test]
fn exit_codes() {
    let out = kit(&["shape", "2,x,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"x\""));
    assert_eq!(kit(&["pattern", "1 2 | 2 3"]).status.code(), Some(1));
    assert_eq!(kit(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(kit(&["shape", "11"]).status.code(), Some(2));
    assert_eq!(kit(&["atlas", "--max-n", "11", "--out-dir", "unused"]).status.code(), Some(2));
    assert_eq!(kit(&["verify", "--suite", "dims", "--max-n", "10"]).status.code(), Some(2));

    let capped = Command::new(env!("CARGO_BIN_EXE_springer-kit"))
        .args(["shape", "2,2"])
        .env("SPRINGER_KIT_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn version_stamp_is_optional() {
    let with = stdout(&kit(&["shape", "3,1"]));
    let without = stdout(&kit(&["--no-stamp", "shape", "3,1"]));
    assert!(with.starts_with("springer-kit "));
    assert_eq!(with.split_once('\n').unwrap().1, without);
}
