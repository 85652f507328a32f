//! End-to-end checks of the binary: exit codes, record determinism, and the
//! documented command examples.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_periods"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn classify_examples() {
    let o = run(&["classify", "Z{[0,1],[1,4]}"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("Distinguished"), "{out}");
    assert!(out.contains("EXISTENCE-336"), "{out}");

    let o = run(&["classify", "Z{[0,1],[2,5]}"]);
    assert!(stdout(&o).contains("NotDistinguished"));
    assert!(stdout(&o).contains("JUXTAPOSED-337"));

    let o = run(&["classify", "Z{[0,4],[1,1]}"]);
    assert!(stdout(&o).contains("NotDistinguished"));
}

#[test]
fn parse_errors_exit_2() {
    let o = run(&["classify", "Z{[0,1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error at byte"), "{}", stderr(&o));
}

#[test]
fn precondition_violations_exit_3() {
    // Odd total dimension.
    let o = run(&["classify", "Z{[0,2]}"]);
    assert_eq!(o.status.code(), Some(3));
    // Rank above the supported range.
    let o = run(&["classify", "Z{[0,7]}"]);
    assert_eq!(o.status.code(), Some(3));
    // Decompose with a three-factor product.
    let o = run(&["decompose", "Z{[0,1]} x Z{[1,2]} x Z{[2,3]}"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn subquotients_example() {
    let o = run(&["subquotients", "Z{[0,1]} x Z{[1,2]} x Z{[3,4]}"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("count: 4"), "{out}");
    assert!(out.contains("Z{[0,1],[1,4]}"));
}

#[test]
fn orbits_example() {
    let o = run(&["orbits", "--n", "3", "--k", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("r=2"), "{out}");
    assert!(out.contains("r=0"), "{out}");
    assert!(out.contains("delta=5, twist=-2"), "{out}");
}

#[test]
fn decompose_and_dual_and_jacquet() {
    let o = run(&["decompose", "Z{[0,1]} x Z{[1,2]}"]);
    let out = stdout(&o);
    assert!(out.contains("length: 2"), "{out}");
    assert!(out.contains("socle:   Z{[0,2],[1,1]}"), "{out}");
    assert!(out.contains("cosocle: Z{[0,1],[1,2]}"), "{out}");

    let o = run(&["dual", "Z{[0,3]}"]);
    assert_eq!(stdout(&o).trim(), "Z{[0,0],[1,1],[2,2],[3,3]}");

    let o = run(&["jacquet", "Z{[1,2]} x Z{[3,4]}", "--split", "2"]);
    let out = stdout(&o);
    assert!(out.contains("terms at (2, 2): 3"), "{out}");
}

#[test]
fn scan_records_are_deterministic_json() {
    let a = run(&["scan", "--rank", "4", "--window", "4", "--format", "records"]);
    let b = run(&["scan", "--rank", "4", "--window", "4", "--format", "records"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "record streams must be byte-identical");
    for line in stdout(&a).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON record");
        assert!(v.get("input").is_some());
        assert!(v.get("verdict").is_some());
        assert!(v.get("g_prime").is_some());
    }
}

#[test]
fn verify_conjectures_small() {
    let o = run(&["verify-conjectures", "--rank", "2,4", "--window", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("rank 2:"), "{out}");
    assert!(out.contains("0 unknown"), "{out}");
}
