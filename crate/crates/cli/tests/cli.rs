use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const C4: &str = r#"{"kind":"curve","g":0,"degL":4}"#;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_secantlab"));
    c.env_remove("SECANTLAB_TIMEOUT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct_rnc(dir: &Path, d: &str) -> String {
    let o = run(&["construct", "rnc", d, "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

#[test]
fn construct_writes_both_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_rnc(dir.path(), "3");
    assert!(path.ends_with("C3.ideal"));
    let meta: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("C3.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["n"], 1);
    assert_eq!(meta["Ln"], 3);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains('*') || l.contains('^')).count(), 3);
}

#[test]
fn analyze_secant_of_quartic_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_rnc(dir.path(), "4");
    let o = run(&[
        "--json",
        "analyze",
        &path,
        "--tasks",
        "secant,dim,degree,betti,mult",
        "--point",
        "1,0,0,0,0",
    ]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let item = |n: &str| {
        r["items"]
            .as_array()
            .unwrap()
            .iter()
            .find(|i| i["name"] == n)
            .unwrap_or_else(|| panic!("missing {n}"))["computed"]
            .clone()
    };
    assert_eq!(item("dim"), 3);
    assert_eq!(item("degree"), 3);
    assert_eq!(item("betti")["pd"], 1);
    assert_eq!(item("betti")["betti"], serde_json::json!([[0, 0, 1], [1, 3, 1]]));
    assert_eq!(item("multiplicity"), 2);
    assert_eq!(r["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn verify_quartic_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_rnc(dir.path(), "4");
    let o = run(&["verify", C4, &path, "--point", "1,0,0,0,0"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_corrupted_fixture_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_rnc(dir.path(), "4");
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let last = lines.len() - 1;
    lines[last] = lines[last].replace("32002*", "32001*");
    assert_ne!(lines.join("\n") + "\n", text);
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let o = run(&["--json", "verify", C4, &path, "--point", "1,0,0,0,0"]);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r["items"].as_array().unwrap().iter().any(|i| i["status"] == "fail"));
}

#[test]
fn predict_always_succeeds() {
    let o = run(&["predict", r#"{"kind":"hypersurface","n":1,"d":10,"k":7}"#]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["multiplicity"]["value"], 68);
    assert_eq!(v["du_bois"]["value"], "no");
}

#[test]
fn predict_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("d.json");
    fs::write(&f, C4).unwrap();
    let o = run(&["predict", f.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(code(&run(&["analyze", "/nonexistent/x.ideal"])), 3);
    assert_eq!(code(&run(&["predict", r#"{"kind":"curve","g":0}"#])), 3);
    assert_eq!(code(&run(&["--field", "fp:4", "construct", "rnc", "3"])), 3);
    assert_eq!(code(&run(&["--timeout", "0", "construct", "rnc", "3"])), 3);
    assert_eq!(code(&run(&["bogus"])), 3);
}

#[test]
fn budget_exhaustion_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct_rnc(dir.path(), "5");
    let o = bin()
        .env("SECANTLAB_TIMEOUT", "0.000001")
        .args(["analyze", &path, "--tasks", "secant,dim"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2, "{}", stdout(&o));
    assert!(stdout(&o).contains("skip"));
}

#[test]
fn plane_curve_embed_from_fixture_dir() {
    let dir = tempfile::tempdir().unwrap();
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let o = run(&[
        "--fixture-dir",
        fixtures,
        "--json",
        "construct",
        "plane-curve-embed",
        "plane_cubic",
        "--k",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["Ln"], 6);
    assert_eq!(v["meta"]["genus"], 1);
}
