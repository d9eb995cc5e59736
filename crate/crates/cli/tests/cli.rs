//! End-to-end checks of the binary: exit codes, report formats, and the
//! category-file round trip.

use std::process::Command;

fn codense(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_codense"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn quick_suite_exits_zero() {
    let out = codense(&["suite", "quick"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("suite:quick"));
}

#[test]
fn unknown_suite_exits_two() {
    let out = codense(&["suite", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_file_exits_two_with_diagnostics() {
    let out = codense(&["validate-category", "/nonexistent/path.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn broken_category_file_exits_one_and_names_the_violation() {
    // a one-object category whose only identity is not a unit
    let dir = std::env::temp_dir().join("codense-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(
        &path,
        r#"{
  "name": "broken",
  "objects": ["x"],
  "morphisms": [
    {"id": "e", "src": "x", "tgt": "x"},
    {"id": "a", "src": "x", "tgt": "x"}
  ],
  "identity": {"x": "e"},
  "compose": [
    ["e","e","e"], ["e","a","e"], ["a","e","a"], ["a","a","a"]
  ],
  "faithful": true
}"#,
    )
    .unwrap();
    let out = codense(&["validate-category", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "mathematical failure exits 1");
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("two-sided units"), "{text}");
}

#[test]
fn json_reports_are_deterministic() {
    let a = codense(&[
        "--format",
        "json",
        "codensity",
        "--ambient",
        "finset:3",
        "--subcat",
        "s2",
        "--object",
        "s3",
    ]);
    let b = codense(&[
        "--format",
        "json",
        "codensity",
        "--ambient",
        "finset:3",
        "--subcat",
        "s2",
        "--object",
        "s3",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.contains("\"value-size\": \"8\""), "{text}");
}

#[test]
fn nerve_writes_a_simplicial_set_file() {
    let dir = std::env::temp_dir().join("codense-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nerve.json");
    let out = codense(&[
        "nerve",
        "builtin:arrow",
        "--dim",
        "2",
        "--sset",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let sset = codense_core::simplex::TruncatedSSet::from_json(&text).unwrap();
    sset.check_identities().unwrap();
    assert_eq!(sset.levels[1].len(), 3);
}

#[test]
fn isar_and_walking_verbs_run() {
    let out = codense(&[
        "isar",
        "--monad",
        "builtin:maybe",
        "--window",
        "0..3",
        "--depth",
        "1",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = codense(&[
        "walking",
        "--monad",
        "builtin:maybe",
        "--carrier",
        "2",
        "--maxcard",
        "3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn initial_check_on_ordinal_windows() {
    let out = codense(&["initial-check", "builtin:delta:3", "--subcat", "o1,o2"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("nonempty and connected"));
}
