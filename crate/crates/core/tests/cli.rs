use std::io::Write;
use std::process::{Command, Output, Stdio};

use tableau_lab::format;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tableau-lab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const SKEW: &str = ". . 1 3\n. 2 4\n5\n";

#[test]
fn rect_from_stdin() {
    let out = run(&["rect"], SKEW);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 3\n2 4\n5\n");
}

#[test]
fn json_output_round_trips() {
    let out = run(&["--format", "json", "rect"], SKEW);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, "{\"outer\":[2,2,1],\"inner\":[],\"rows\":[[1,3],[2,4],[5]]}\n");
    let t = format::from_json(&text).unwrap();
    assert_eq!(format::to_text(&t), "1 3\n2 4\n5\n");
}

#[test]
fn json_input_is_accepted() {
    let json = "{\"outer\":[4,3,1],\"inner\":[2,1],\"rows\":[[1,3],[2,4],[5]]}";
    let out = run(&["rect"], json);
    assert_eq!(stdout(&out), "1 3\n2 4\n5\n");
}

#[test]
fn promote_then_demote_is_identity() {
    let straight = "1 2 4\n3 5 6\n";
    let promoted = stdout(&run(&["promote"], straight));
    let back = stdout(&run(&["demote"], &promoted));
    assert_eq!(back, straight);
    let full = stdout(&run(&["promote", "--power", "6"], straight));
    assert_eq!(full, straight);
}

#[test]
fn quotient_text_report() {
    let out = run(&["quotient", "-r", "3", "7,5,5,5,3,2,1"], "");
    assert_eq!(
        stdout(&out),
        "piece 1: 2,1\npiece 2: 2,2\npiece 3: 1,1\nunion: 5,5,4,4,2,1/4,4,2,2\ncore: 1\n"
    );
}

#[test]
fn verify_reports_status_and_schema() {
    let out = run(&["--format", "json", "verify", "csp", "-a", "2", "-b", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema_version"], "1");
    assert_eq!(report["command"], "verify csp");
    assert_eq!(report["status"], "pass");
    assert!(String::from_utf8_lossy(&out.stderr).contains("[progress]"));
}

#[test]
fn parse_errors_exit_with_two() {
    let out = run(&["rect"], "1 x\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 3"));
}

#[test]
fn unknown_subcommand_exits_with_two() {
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn precondition_failure_exits_with_two() {
    let out = run(&["evacuate"], SKEW);
    assert_eq!(out.status.code(), Some(2));
}
