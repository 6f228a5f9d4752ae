use std::process::{Command, Output};

fn bt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bt"))
        .args(args)
        .env_remove("BT_FORMAT")
        .output()
        .expect("run bt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn harmonic_transform_at_one_half() {
    let o = bt(&[
        "transform",
        "eval",
        "--seq",
        "harmonic",
        "--n",
        "2",
        "--q",
        "1/2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7/8");
    let o = bt(&[
        "transform",
        "eval",
        "--seq",
        "harmonic",
        "--n",
        "2",
        "--q",
        "1/2",
        "--format",
        "json",
    ]);
    assert_eq!(json(&o)["value"], "7/8");
}

#[test]
fn format_falls_back_to_the_environment() {
    let run = |fmt: &str| {
        Command::new(env!("CARGO_BIN_EXE_bt"))
            .args(["pmf", "binomial", "--n", "2", "--s", "1/3"])
            .env("BT_FORMAT", fmt)
            .output()
            .unwrap()
    };
    let o = run("csv");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k,p\n0,4/9\n1,4/9\n2,1/9\n");
    assert_eq!(run("xml").status.code(), Some(2));
}

#[test]
fn composed_law_equals_the_direct_binomial() {
    let a = bt(&[
        "pmf", "compose", "--n", "2", "--x", "1/2", "--y", "1/3", "--format", "csv",
    ]);
    let b = bt(&[
        "pmf", "binomial", "--n", "2", "--s", "1/3", "--format", "csv",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn listing_covers_the_registry() {
    let o = bt(&["list", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ids: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert!(ids.len() >= 35);
    assert!(ids.contains(&"P1.c"));
    let o = bt(&["list", "--module", "appell", "--format", "json"]);
    assert!(json(&o)
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["module"] == "appell"));
}

#[test]
fn clean_verification_exits_zero() {
    let o = bt(&["verify", "--id", "P1.c", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["summary"]["passed"], 1);
    assert_eq!(v["entries"][0]["status"], "pass");
}

#[test]
fn corrupted_difference_fails_with_a_witness() {
    let o = bt(&[
        "verify",
        "--id",
        "P1.c",
        "--corrupt",
        "3,1,1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let e = &v["entries"][0];
    assert_eq!(e["status"], "fail");
    assert_ne!(e["witness"]["lhs"], e["witness"]["rhs"]);
}

#[test]
fn usage_and_configuration_errors_exit_two() {
    assert_eq!(bt(&["verify", "--id", "NOPE"]).status.code(), Some(2));
    assert_eq!(bt(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        bt(&["verify", "--id", "BT.a", "--n-max", "3"])
            .status
            .code(),
        Some(2)
    );
    let o = bt(&[
        "transform",
        "eval",
        "--seq",
        "harmonic",
        "--n",
        "2",
        "--q",
        "1/0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
