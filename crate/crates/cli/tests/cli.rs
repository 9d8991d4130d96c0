use std::process::{Command, Output};

fn eog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eog")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn canonical_count() {
    let out = eog(&["canonical", "--k", "3", "--n", "3", "--count"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "total=3840 iso=80\n");
}

#[test]
fn lex_prints_value_then_witness() {
    let out = eog(&["lex", "--n", "5", "--pattern", "path:132"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("6"));
    let witness = eog::parse_eog(&lines.collect::<Vec<_>>().join("\n")).unwrap();
    assert_eq!((witness.vertex_count(), witness.edge_count()), (5, 6));
    let p = eog::parse_pattern("path:132").unwrap();
    assert!(eog::avoids_family(&witness, &[p]).unwrap());
}

#[test]
fn json_output_is_parseable() {
    let out = eog(&["--json", "contains", "--host", "clique:min:5", "--pattern", "path:1423"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["contains"], true);
    let out = eog(&["--json", "chi", "--pattern", "path:1423", "--pattern", "path:2314"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["chi"], "3");
}

#[test]
fn witness_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("eog-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g3.eog");
    let out = eog(&["construct", "recursive", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let spec = format!("file:{}", path.display());
    let out = eog(&["contains", "--host", &spec, "--pattern", "path:1342"]);
    assert_eq!(stdout(&out), "no\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_selected_claims() {
    let out = eog(&["verify", "6", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(eog(&["lex", "--n", "3"]).status.code(), Some(2));
    assert_eq!(eog(&["construct", "nope"]).status.code(), Some(2));
    assert_eq!(eog(&["contains", "--host", "path:11", "--pattern", "path:1"]).status.code(), Some(2));
    assert_eq!(eog(&["verify", "99"]).status.code(), Some(2));
}

#[test]
fn budget_variable_limits_search() {
    let out = Command::new(env!("CARGO_BIN_EXE_eog"))
        .args(["lex", "--n", "8", "--pattern", "cycle:1243"])
        .env("EOG_BUDGET_SECS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).lines().nth(1).unwrap().contains("lower-bound"));
}
