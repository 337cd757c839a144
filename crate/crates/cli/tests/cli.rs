use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::thread;

use argnlg_core::nlg::normalize;
use argnlg_testkit::{backward_indeed, forward_plain, FIXTURE};
use tempfile::TempDir;

fn fixture(dir: &TempDir) -> PathBuf {
    let p = dir.path().join("graph.json");
    std::fs::write(&p, FIXTURE).unwrap();
    p
}

fn argnlg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_argnlg"))
        .args(args)
        .env_remove("ARG_NLG_ENDPOINT")
        .output()
        .unwrap()
}

fn with_input(cmd: &str, input: &Path, rest: &[&str]) -> Output {
    let mut args = vec![cmd, "--input", input.to_str().unwrap()];
    args.extend_from_slice(rest);
    argnlg(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn explain_backward_gives_the_indeed_passage() {
    let dir = TempDir::new().unwrap();
    let out = with_input(
        "explain",
        &fixture(&dir),
        &["--goal", "present-argument", "--target", "T3", "--style", "backward"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(normalize(&stdout(&out)), normalize(&backward_indeed()));
}

#[test]
fn explain_forward_without_markers() {
    let dir = TempDir::new().unwrap();
    let out = with_input(
        "explain",
        &fixture(&dir),
        &["--goal", "present-argument", "--target", "A2", "--style", "forward", "--no-markers"],
    );
    assert_eq!(normalize(&stdout(&out)), normalize(&forward_plain()));
}

#[test]
fn semantics_lists_both_preferred_extensions() {
    let dir = TempDir::new().unwrap();
    let out = with_input("semantics", &fixture(&dir), &["--semantics", "preferred", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["extensions"], serde_json::json!([["A1", "A2", "A4"], ["A3", "A4"]]));
}

#[test]
fn validate_empty_graph_is_clean() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("empty.json");
    std::fs::write(&p, r#"{"nodes": [], "edges": []}"#).unwrap();
    let out = with_input("validate", &p, &["--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["diagnostics"], serde_json::json!([]));
}

#[test]
fn validate_reports_violations_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(
        &p,
        r#"{"nodes": [{"nodeID": "1", "text": "p", "type": "I"}], "edges": [{"fromID": "1", "toID": "9"}]}"#,
    )
    .unwrap();
    let out = with_input("validate", &p, &[]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("invalid"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("broken.json");
    std::fs::write(&p, "{ not json").unwrap();
    let out = with_input("semantics", &p, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("aif"));
    assert_eq!(argnlg(&["semantics"]).status.code(), Some(2));
}

#[test]
fn status_verdicts_and_tree() {
    let dir = TempDir::new().unwrap();
    let g = fixture(&dir);
    let out = with_input("status", &g, &["--target", "T1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("A1 (T1) is credulously accepted"), "{text}");
    assert!(text.contains("PRO A1 (T1)\n    CON A3 (~T3)\n      PRO A2 (T3)"), "{text}");
    // not accepted is still a successful run
    let out = with_input("status", &g, &["--target", "T1", "--mode", "skeptical"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("is not skeptically accepted"));
}

#[test]
fn unknown_target_is_a_domain_error() {
    let dir = TempDir::new().unwrap();
    let out = with_input("status", &fixture(&dir), &["--target", "T9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no argument claims T9"));
}

#[test]
fn size_bound_is_a_domain_error() {
    let dir = TempDir::new().unwrap();
    let out = with_input("semantics", &fixture(&dir), &["--max-args", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn compile_output_feeds_from_kb() {
    let dir = TempDir::new().unwrap();
    let g = fixture(&dir);
    let kb = dir.path().join("kb.json");
    let out = with_input("compile", &g, &["--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&kb, &out.stdout).unwrap();
    for cmd in ["semantics", "explain"] {
        let from_graph = with_input(cmd, &g, &[]);
        let from_kb = argnlg(&[cmd, "--from-kb", kb.to_str().unwrap()]);
        assert_eq!(from_kb.status.code(), Some(0));
        assert_eq!(stdout(&from_graph), stdout(&from_kb), "{cmd}");
    }
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = fixture(&dir);
    for args in [
        vec!["--goal", "explain-extensions", "--format", "markdown"],
        vec!["--goal", "explain-acceptability", "--target", "A1", "--format", "json"],
        vec!["--strategy", "enumerate", "--style", "forward"],
    ] {
        assert_eq!(stdout(&with_input("explain", &g, &args)), stdout(&with_input("explain", &g, &args)));
    }
}

/// One-shot server answering `/graph/<id>` with the fixture.
fn serve() -> String {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap();
    thread::spawn(move || {
        let (mut stream, _) = listener.accept().unwrap();
        let mut reader = BufReader::new(stream.try_clone().unwrap());
        let mut line = String::new();
        while reader.read_line(&mut line).unwrap() > 2 {
            line.clear();
        }
        write!(
            stream,
            "HTTP/1.1 200 OK\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{}",
            FIXTURE.len(),
            FIXTURE
        )
        .unwrap();
    });
    format!("http://{addr}")
}

#[test]
fn fetch_stores_the_graph() {
    let dir = TempDir::new().unwrap();
    let dest = dir.path().join("fetched.json");
    let out = Command::new(env!("CARGO_BIN_EXE_argnlg"))
        .args(["fetch", "--id", "1724", "--output", dest.to_str().unwrap()])
        .env("ARG_NLG_ENDPOINT", serve())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read_to_string(&dest).unwrap(), FIXTURE);
}

#[test]
fn fetch_without_endpoint_is_an_input_error() {
    assert_eq!(argnlg(&["fetch", "--id", "1724"]).status.code(), Some(2));
}
