use std::process::Command;

use ipf_cli::run;
use ipf_core::words::eval_str;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ipf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn eval_prints_canonical_form() {
    assert_eq!(call(&["eval", "-n", "2", "P1*Q1"]), (0, "ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}\n".into(), String::new()));
    let (code, out, _) = call(&["eval", "Q1*P1", "-n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ipf{n=1; s=[1]; x=[2]; y=[2]}\n");
}

#[test]
fn dimension_is_inferred_from_literals() {
    let (code, out, _) = call(&["eval", "s[2,1]*P1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ipf{n=2; s=[2,1]; x=[1,1]; y=[2,1]}\n");
    let (code, _, err) = call(&["eval", "P1"]);
    assert_eq!(code, 2);
    assert!(err.contains("pass -n"));
}

#[test]
fn errors_exit_with_two() {
    let (code, out, err) = call(&["eval", "-n", "2", "P3"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert_eq!(err, "error: generator index 3 out of range for dimension 2\n");
    let (code, _, err) = call(&["eval", "-n", "2", "P1**Q1"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["solve", "-n", "1", "I", "I"]).0, 2);
    assert_eq!(call(&["check", "--max", "1"]).0, 2);
    assert_eq!(call(&["check", "--suite", "nope"]).0, 2);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
    assert!(err.is_empty());
}

#[test]
fn order_and_quotient_reports() {
    let a = "ipf{n=1; s=[1]; x=[3]; y=[2]}";
    let b = "ipf{n=1; s=[1]; x=[2]; y=[1]}";
    let (code, out, _) = call(&["order", a, b]);
    assert_eq!(code, 0);
    assert_eq!(out, "a<=b: true\nb<=a: false\nmg_related: true\ngreen: L=false R=false H=false D=true J=true\n");

    let (code, out, _) = call(&["quotient", "ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "upsilon: quo{s=[2,1]; z=[0,-1]}\npsi: sdp{s=[2,1]; p=[(0,0),(1,2)]}\ntop: ipf{n=2; s=[2,1]; x=[1,1]; y=[1,2]}\n"
    );
}

#[test]
fn congruence_and_test_pair() {
    let (code, out, _) = call(&["congruence", "s[2,1]", "I", "--test", "e[1,2]", "e[2,1]"]);
    assert_eq!(code, 0);
    assert_eq!(out, "cong{kind=group; n=2; K=[[1,2],[2,1]]; reps=[[0,0],[0,0]]; L=[[1,-1]]}\nrelates: true\n");
    let (code, out, _) = call(&["congruence", "-n", "3", "P1", "P1"]);
    assert_eq!((code, out.as_str()), (0, "cong{kind=identity; n=3}\n"));
}

#[test]
fn solve_and_units() {
    let (code, out, _) = call(&["solve", "--right", "P1", "e[2]"]);
    assert_eq!((code, out.as_str()), (0, "ipf{n=1; s=[1]; x=[3]; y=[2]}\n"));
    let (code, out, _) = call(&["solve", "--left", "-n", "1", "P1", "I"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = call(&["units", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(call(&["units", "9"]).0, 2);
}

#[test]
fn json_payloads_round_trip() {
    let (code, out, _) = call(&["--json", "solve", "--right", "-n", "2", "s[2,1]*e[2,1]", "e[3,3]"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["schema"], "ipf-cli/1");
    assert_eq!(doc["command"], "solve");
    let sols = doc["result"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len() as u64, doc["result"]["count"].as_u64().unwrap());
    assert!(!sols.is_empty());
    for s in sols {
        let text = s["text"].as_str().unwrap();
        let back = eval_str(text, 2).unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(serde_json::json!(back.x().coords()), s["x"]);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "check", "--suite", "words", "--max", "2"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn check_reports_every_criterion() {
    let (code, out, _) = call(&["check", "--n", "1", "--max", "2", "--suite", "quotient"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
    assert!(out.ends_with("3/3 criteria passed\n"));
}

#[test]
fn expressions_from_files() {
    let dir = std::env::temp_dir().join(format!("ipf-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("expr.txt");
    std::fs::write(&path, "Q1 * P1\n").unwrap();
    let arg = format!("@{}", path.display());
    let (code, out, _) = call(&["eval", "-n", "1", &arg]);
    assert_eq!((code, out.as_str()), (0, "ipf{n=1; s=[1]; x=[2]; y=[2]}\n"));
    std::fs::remove_dir_all(&dir).unwrap();
    let (code, _, err) = call(&["eval", "-n", "1", &arg]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: cannot read"));
}

#[test]
fn max_dim_environment_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_ipf"))
        .args(["units", "3"])
        .env("IPF_MAX_DIM", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr), "error: dimension 3 exceeds the configured cap 2\n");

    let out = Command::new(env!("CARGO_BIN_EXE_ipf"))
        .args(["eval", "-n", "10", "I"])
        .env("IPF_MAX_DIM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
