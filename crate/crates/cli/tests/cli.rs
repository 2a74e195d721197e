use std::process::{Command, Output};

use quadeuclid::classify::classify_field;
use quadeuclid::report::{emit_report, Format};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadeuclid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["classify"][..],
        &["cover", "--d", "5"],
        &["cover", "--d", "5", "--prime", "5"],
        &["cover", "--d", "12", "--prime", "2"],
        &["cover", "--d", "19", "--prime", "2"],
        &["motzkin", "--d", "23", "--prime", "2"],
        &["bogus"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn cover_reports_gap_with_witness() {
    let o = run(&["cover", "--d", "14", "--prime", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("OpenGap"));
    assert!(text.contains("witness ("));

    let o = run(&["cover", "--d", "14", "--prime", "3", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "OpenGap");
    assert_eq!(v["covering_radius_sq"], "135/28");
    assert!(v["witness"]["p"].is_string());

    let o = run(&["cover", "--d", "1", "--ideal", "1,0", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "Covered");
    assert_eq!(v["covering_radius_sq"], "1/2");
}

#[test]
fn classify_output_matches_library() {
    for d in [1, 6, 15, 23] {
        let o = run(&["classify", "--d", &d.to_string(), "--json"]);
        assert!(o.status.success());
        let lib = emit_report(&[classify_field(d).unwrap()], Format::Json);
        assert_eq!(stdout(&o), lib);
    }
    let par = run(&["classify", "--dmax", "60"]);
    let seq = run(&["classify", "--dmax", "60", "--sequential"]);
    assert_eq!(par.stdout, seq.stdout);
    let text = stdout(&par);
    assert!(text.contains("\n1: 1,2,3,7,11\n"));
    assert!(text.contains("\n2: 5,15\n"));
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let o = run(&[
            "figure",
            "--d",
            "23",
            "--prime",
            "2",
            "-o",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let (sa, sb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(sa, sb);
    let text = String::from_utf8(sa).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("OpenGap"));
    assert!(text.trim_end().ends_with("</svg>"));

    let c = dir.path().join("c.svg");
    let o = run(&[
        "figure",
        "--d",
        "5",
        "--prime",
        "2",
        "-o",
        c.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(!std::fs::read_to_string(&c)
        .unwrap()
        .contains("stroke=\"red\""));
}

#[test]
fn motzkin_save_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("d15.state");
    let state_s = state.to_str().unwrap();
    let o = run(&[
        "motzkin",
        "--d",
        "15",
        "--prime",
        "2",
        "--max-norm",
        "20",
        "--max-levels",
        "2",
        "--save",
        state_s,
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("status budget-exhausted"));

    let resumed = run(&[
        "motzkin",
        "--d",
        "15",
        "--prime",
        "2",
        "--max-norm",
        "20",
        "--resume",
        state_s,
    ]);
    let straight = run(&["motzkin", "--d", "15", "--prime", "2", "--max-norm", "20"]);
    assert!(resumed.status.success());
    assert_eq!(resumed.stdout, straight.stdout);

    // a state for a different ideal is refused
    let o = run(&[
        "motzkin",
        "--d",
        "15",
        "--prime",
        "3",
        "--max-norm",
        "20",
        "--resume",
        state_s,
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tampered_state_is_an_invariant_violation() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("d5.state");
    let state_s = state.to_str().unwrap();
    let o = run(&[
        "motzkin",
        "--d",
        "5",
        "--prime",
        "2",
        "--max-norm",
        "6",
        "--max-levels",
        "3",
        "--save",
        state_s,
    ]);
    assert!(o.status.success());
    // move every level-2 ideal down to level 1, which breaks the class law
    let text = std::fs::read_to_string(&state).unwrap();
    assert!(text.contains("\nlevel 2 "));
    let tampered: String = text
        .lines()
        .map(|l| {
            l.replacen("level 2 ", "level 1 ", 1)
                .replacen("level 3 ", "level 2 ", 1)
        })
        .map(|l| l + "\n")
        .collect();
    std::fs::write(&state, tampered).unwrap();
    let o = run(&[
        "motzkin",
        "--d",
        "5",
        "--prime",
        "2",
        "--max-norm",
        "6",
        "--resume",
        state_s,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("violation"));
}

#[test]
fn classgroup_lists_forms() {
    let o = run(&["classgroup", "--d", "23"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("h=3"));
    assert!(text.contains("form (2, 1, 3) order 3"));
    assert!(text.contains("prime over 2"));
}
