use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn nsymkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsymkit")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nsymkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("nsymkit-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn mn_twenty_terms() {
    let o = nsymkit(&["mn", "--n", "4", "--alpha", "2,1,3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 20);
    assert!(text.contains("-1 s_(1,1,1,1,2,1,3)\n"));
    assert!(text.contains("+1 s_(2,3,2,3)\n"));
    assert!(text.contains("-1 s_(4,3,3)\n"));
    assert!(text.contains("+1 s_(2,1,7)\n"));
}

#[test]
fn mn_six_terms_and_check() {
    for method in ["rule", "connected", "full", "ribbon"] {
        let o = nsymkit(&["mn", "--n", "2", "--alpha", "1,3,2", "--method", method, "--check"]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        let text = stdout(&o);
        assert_eq!(text.lines().count(), 6);
        assert!(!text.contains("(1,4,3)"));
    }
}

#[test]
fn mn_single_box() {
    let o = nsymkit(&["mn", "--n", "1", "--alpha", "1"]);
    assert_eq!(stdout(&o), "+1 s_(1,1)\n+1 s_(2)\n");
    let o = nsymkit(&["mn", "--n", "1", "--alpha", "empty"]);
    assert_eq!(stdout(&o), "+1 s_(1)\n");
}

#[test]
fn mn_json_is_stable() {
    let a = nsymkit(&["--format", "json", "mn", "--n", "2", "--alpha", "1,3,2"]);
    let b = nsymkit(&["mn", "--n", "2", "--alpha", "1,3,2", "--format", "json", "--method", "connected"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "{\"basis\":\"S\",\"terms\":[{\"comp\":[1,1,1,3,2],\"coeff\":-1},{\"comp\":[1,2,3,2],\"coeff\":-1},\
         {\"comp\":[1,5,2],\"coeff\":1},{\"comp\":[2,1,3,2],\"coeff\":1},{\"comp\":[2,3,3],\"coeff\":-1},\
         {\"comp\":[3,3,2],\"coeff\":1}]}\n"
    );
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(nsymkit(&["mn", "--n", "2", "--alpha", "1,x"]).status.code(), Some(1));
    assert_eq!(nsymkit(&["mn", "--n", "0", "--alpha", "1"]).status.code(), Some(1));
    assert_eq!(nsymkit(&["mn", "--alpha", "1"]).status.code(), Some(1));
    assert_eq!(nsymkit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nsymkit(&["--help"]).status.code(), Some(0));
}

#[test]
fn degree_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_nsymkit"))
        .args(["mn", "--n", "3", "--alpha", "2,1,3"])
        .env("NSYMKIT_MAX_DEGREE", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NSYMKIT_MAX_DEGREE"));
}

#[test]
fn strips_listing() {
    let count = |args: &[&str]| stdout(&nsymkit(args)).lines().filter(|l| l.starts_with('(')).count();
    assert_eq!(count(&["strips", "--alpha", "2,1,3", "--n", "4"]), 26);
    assert_eq!(count(&["strips", "--alpha", "2,1,3", "--n", "4", "--only-p"]), 20);
    let text = stdout(&nsymkit(&["strips", "--alpha", "1", "--n", "1"]));
    assert!(text.starts_with("(1,1)  E={} SE={} NE={} ht=0 coeff=+1\n    #\n    .\n(2)"));
    let json: serde_json::Value =
        serde_json::from_slice(&nsymkit(&["--format", "json", "strips", "--alpha", "2,1,3", "--n", "4"]).stdout).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), 26);
    let zero = rows.iter().filter(|r| r["coeff"] == 0).count();
    assert_eq!(zero, 6);
}

#[test]
fn convert_psi() {
    let o = with_stdin(&["convert", "--input", "-", "--to", "r"], r#"{"basis":"PSI","terms":[{"comp":[2],"coeff":1}]}"#);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1 R_(1,1)\n+1 R_(2)\n");
    let bad = with_stdin(&["convert", "--input", "-", "--to", "s"], "{not json");
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn multiply_ribbons() {
    let left = temp_file("left.json", r#"{"basis":"R","terms":[{"comp":[2,1],"coeff":1}]}"#);
    let right = temp_file("right.json", r#"{"basis":"R","terms":[{"comp":[3],"coeff":1}]}"#);
    let o = nsymkit(&[
        "--format",
        "json",
        "mul",
        "--left",
        left.to_str().unwrap(),
        "--right",
        right.to_str().unwrap(),
        "--out-basis",
        "r",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"basis\":\"R\",\"terms\":[{\"comp\":[2,1,3],\"coeff\":1},{\"comp\":[2,4],\"coeff\":1}]}\n"
    );
    let missing = nsymkit(&["mul", "--left", "/nonexistent", "--right", right.to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(1));
    std::fs::remove_file(left).ok();
    std::fs::remove_file(right).ok();
}

#[test]
fn srct_outputs() {
    let o = nsymkit(&["srct", "--alpha", "3,4,2,3", "--descents"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().find(|l| l.starts_with("(1,1,3,2,2,1,2) ")).map(str::to_owned);
    assert!(line.is_some_and(|l| l.split(' ').nth(1).unwrap().parse::<u64>().unwrap() >= 1));
    assert_eq!(stdout(&nsymkit(&["srct", "--alpha", "2,1", "--count"])), "1\n");
    assert_eq!(stdout(&nsymkit(&["srct", "--alpha", "2,1"])), "descent composition (2,1)\n2 1\n3\n\n");
}

#[test]
fn verify_passes_and_catches_faults() {
    let o = nsymkit(&["verify", "--max-size", "1", "--max-n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap().starts_with("PASS"));

    let o = nsymkit(&["verify", "--max-size", "4", "--max-n", "3", "--seed", "3", "--trials", "1000"]);
    assert_eq!(o.status.code(), Some(0));

    let o = nsymkit(&["verify", "--max-size", "3", "--max-n", "3", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(err.contains("first failing identity: three-way Murnaghan-Nakayama equality"), "{err}");
}
