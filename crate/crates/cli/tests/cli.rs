use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hooklab"))
        .args(args)
        .env_remove("HOOKLAB_ORDER_DEFAULT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn macdonald_type_c_passes() {
    let out = run(&[
        "verify",
        "macdonald",
        "--family",
        "C",
        "--t",
        "2",
        "--order",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["status"], "pass");
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["equal"] == true));
}

#[test]
fn symplectic_hook_formula() {
    let out = run(&["verify", "hook-formula", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["checks"][0]["expected"], "1/3840");
    assert_eq!(report["checks"][0]["actual"], "1/3840");
}

#[test]
fn even_rank_type_a_is_a_usage_error() {
    let out = run(&[
        "verify",
        "macdonald",
        "--family",
        "A",
        "--t",
        "2",
        "--order",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["status"], "error");
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn malformed_arguments_exit_with_two() {
    assert_eq!(
        run(&["verify", "macdonald", "--family", "D", "--t", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["expand", "eta-power"]).status.code(), Some(2));
    assert_eq!(
        run(&["bijection", "gks", "--partition", "1,3", "--t", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn other_verify_targets_pass() {
    for args in [
        vec!["verify", "no", "--order", "6"],
        vec!["verify", "no", "--z", "-3", "--order", "8"],
        vec!["verify", "type-c", "--order", "6"],
        vec!["verify", "type-c", "--t", "-1", "--order", "10"],
        vec!["verify", "pair", "--t", "2", "--order", "8"],
        vec!["verify", "genfunc", "--t", "3", "--order", "15"],
        vec!["verify", "compact-lemma", "--t", "1", "--set", "-1,-2,-3,1"],
        vec![
            "verify",
            "compact-lemma",
            "--t",
            "3",
            "--samples",
            "50",
            "--seed",
            "9",
        ],
        vec![
            "verify",
            "macdonald",
            "--family",
            "B",
            "--t",
            "3",
            "--order",
            "8",
        ],
        vec![
            "verify",
            "macdonald",
            "--family",
            "BC",
            "--t",
            "2",
            "--order",
            "8",
        ],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
        assert_eq!(json(&out)["status"], "pass", "{args:?}");
    }
}

#[test]
fn non_compact_set_is_rejected() {
    let out = run(&["verify", "compact-lemma", "--t", "1", "--set", "-1,-3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eta_power_zero() {
    let out = run(&["expand", "eta-power", "--e", "0", "--order", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "0\t1/1");
    assert!(lines[1..]
        .iter()
        .enumerate()
        .all(|(k, l)| *l == format!("{}\t0/1", k + 1)));
}

#[test]
fn partition_counts() {
    let text = stdout(&run(&["expand", "no-rhs", "--z", "0", "--order", "5"]));
    let coeffs: Vec<&str> = text
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(coeffs, ["1/1", "1/1", "2/1", "3/1", "5/1", "7/1"]);
}

#[test]
fn lattice_expansion_matches_eta() {
    let a = stdout(&run(&[
        "expand",
        "macdonald",
        "--family",
        "BC",
        "--t",
        "1",
        "--order",
        "5",
    ]));
    let b = stdout(&run(&["expand", "eta-power", "--e", "1", "--order", "5"]));
    assert_eq!(a, b);
    assert!(a.starts_with("1/24\t1/1\n"));
}

#[test]
fn structured_series() {
    let out = run(&[
        "expand",
        "type-c-rhs",
        "--t",
        "2",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["offset"], "0");
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    assert_eq!(v["terms"][1]["coefficient"], "-10/1");
}

#[test]
fn order_default_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hooklab"))
        .args(["expand", "eta-power", "--e", "24"])
        .env("HOOKLAB_ORDER_DEFAULT", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn bijection_examples() {
    let out = run(&["bijection", "gks", "--partition", "7,5,3,1,1", "--t", "3"]);
    assert_eq!(stdout(&out).lines().next(), Some("(3,-2,-1)"));

    let out = run(&[
        "bijection",
        "varphi",
        "--lambda",
        "7,5,3,2,2,1,1",
        "--mu",
        "5,3,1,1",
        "--t",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("(-2,-3)"));
    assert!(text.contains("1\t8\t-1\t11\t11"));
    assert!(text.contains("2\t13\t-1\t16\t16"));

    let out = run(&[
        "bijection",
        "varphi-inv",
        "--vector",
        "0,0",
        "--t",
        "2",
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["lambda"], "()");
    assert_eq!(v["mu"], "()");

    let out = run(&[
        "bijection",
        "phi1",
        "--partition",
        "7,5,3,2,2,1,1",
        "--t",
        "3",
    ]);
    assert_eq!(stdout(&out).lines().next(), Some("(-3)"));
    let out = run(&["bijection", "phi2", "--partition", "5,3,1,1", "--t", "3"]);
    assert_eq!(stdout(&out).lines().next(), Some("(-2)"));
    let out = run(&["bijection", "gks-inv", "--vector", "3,-2,-1", "--t", "3"]);
    assert_eq!(stdout(&out).lines().next(), Some("(7,5,3,1,1)"));
    let out = run(&["bijection", "pair-to-dd", "--lambda", "", "--mu", "3,1"]);
    assert_eq!(stdout(&out).lines().next(), Some("(5,1,1,1)"));
}

#[test]
fn class_violations_name_the_invariant() {
    let out = run(&["bijection", "phi1", "--partition", "3,1", "--t", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not self-conjugate"));
    let out = run(&["bijection", "gks", "--partition", "3", "--t", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a 3-core"));
    let out = run(&[
        "bijection",
        "varphi",
        "--lambda",
        "2,1",
        "--mu",
        "",
        "--t",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify",
        "compact-lemma",
        "--t",
        "2",
        "--samples",
        "40",
        "--seed",
        "5",
        "--no-timing",
        "--jobs",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "no", "--order", "6", "--no-timing", "--jobs", "1"];
    let one = run(&args).stdout;
    let many = run(&["verify", "no", "--order", "6", "--no-timing", "--jobs", "4"]).stdout;
    assert_eq!(one, many);
}
