use std::io::Write;
use std::process::{Command, Output};

fn splitcon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcon")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("splitcon-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn classify_triangle() {
    let o = splitcon(&["classify", "--inline", "Bw"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("split: true"));
    assert!(out.contains("balanced: false"));
    assert!(out.contains("ng: true"));
}

#[test]
fn classify_edge_json() {
    let o = splitcon(&["classify", "--inline", "A_", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["is_split"], true);
    assert_eq!(v["order"], 2);
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn classify_edge_list_inline() {
    let o = splitcon(&["classify", "--inline", "4 4\n0 1\n1 2\n2 3\n3 0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("split: false"));
    assert!(out.contains("exceptional: H1(l=2)"));
}

#[test]
fn classify_corpus_file() {
    let path = temp_file("corpus.g6", ">>graph6<<Bw\n\nA_\nDhc\n");
    let o = splitcon(&["classify", "--file", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn corpus_error_reports_line() {
    let path = temp_file("bad.g6", "Bw\nA_\nB!\n");
    let o = splitcon(&["classify", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn verify_contraction_passes() {
    let o = splitcon(&["verify", "--theorem", "THM_CONTRACTION", "--max-n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn verify_json_fields() {
    let o = splitcon(&["verify", "--theorem", "thm_ng", "--max-n", "8", "--format", "json", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["counterexamples", "elapsed_ms", "graphs_checked", "order_range", "theorem", "verdict"]);
    assert_eq!(v["order_range"]["max"], 7);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn verify_all_text() {
    let o = splitcon(&["verify", "--theorem", "all", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" PASS ")).count(), 14);
}

#[test]
fn verify_corpus() {
    let path = temp_file("verify.g6", "Dhc\nCr\nDQo\n");
    let o = splitcon(&["verify", "--theorem", "THM_PSEUDO", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn census_table() {
    let o = splitcon(&["census", "--max-n", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[3]["connected"], 6);
    assert_eq!(v[3]["split"], 5);
    assert_eq!(v[4]["connected"], 21);
    let text = stdout(&splitcon(&["census", "--max-n", "4"]));
    assert!(text.contains("H1(l=2):1"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify"][..],
        &["classify", "--inline", "Bw", "--file", "x"],
        &["verify"],
        &["verify", "--theorem", "THM_6"],
        &["verify", "--theorem", "all", "--max-n", "0"],
        &["census", "--max-n", "9"],
        &["frobnicate"],
    ] {
        assert_eq!(splitcon(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_inline_exits_one() {
    assert_eq!(splitcon(&["classify", "--inline", "B!"]).status.code(), Some(1));
    assert_eq!(splitcon(&["classify", "--inline", "3 1\n0 5"]).status.code(), Some(1));
}
