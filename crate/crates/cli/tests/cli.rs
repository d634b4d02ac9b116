use std::path::PathBuf;
use std::process::{Command, Output};

fn qshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn product_of_equal_generators() {
    let out = qshuffle(&["--cartan", "A1", "product", "a1:0 a1:0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "product");
    assert_eq!(v["element"]["degree"], serde_json::json!([2]));
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (
            &[
                "serre", "--alpha", "1", "--beta", "2", "--modes", "0,-1", "--s", "1",
            ],
            0,
        ),
        (
            &[
                "--cartan", "B2", "serre", "--alpha", "2", "--beta", "1", "--modes", "0,1,0",
                "--s", "-1",
            ],
            0,
        ),
        (
            &[
                "--cartan", "B2", "serre", "--alpha", "1", "--beta", "2", "--modes", "0,1,0",
                "--s", "-1",
            ],
            2,
        ),
        (
            &[
                "serre", "--alpha", "1", "--beta", "1", "--modes", "0,0", "--s", "0",
            ],
            2,
        ),
        (&["--orientation", "printed", "product", "a1:0 a1:1"], 3),
        (&["identities", "--m", "0"], 2),
        (&["product", "a3:0"], 2),
        (&["--cartan", "X9", "product", "a1:0"], 2),
        (
            &[
                "--window",
                "3:1",
                "identities",
                "--m",
                "1",
                "--window-check",
            ],
            2,
        ),
        (&["--cartan", "A1xA1", "wheel", "a1:0 a2:0"], 0),
    ];
    for (args, code) in cases {
        assert_eq!(qshuffle(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn orthogonal_roots_have_no_serre_relation() {
    let out = qshuffle(&[
        "--cartan", "A1xA1", "serre", "--alpha", "1", "--beta", "2", "--modes", "0", "--s", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_without_timing() {
    let args = ["--no-timing", "--seed", "3", "selftest", "--cases", "5"];
    let a = qshuffle(&args);
    let b = qshuffle(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["failures"], serde_json::json!([]));
    let a = qshuffle(&["--no-timing", "identities", "--m", "1"]);
    let b = qshuffle(&["--no-timing", "identities", "--m", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8(a.stdout).unwrap().contains("elapsed_ms"));
}

#[test]
fn cartan_file_and_json_output() {
    let cartan = scratch("b2.json");
    std::fs::write(
        &cartan,
        r#"{"rank": 2, "matrix": [[2, -1], [-2, 2]], "symmetrizers": [2, 1]}"#,
    )
    .unwrap();
    let report = scratch("serre.json");
    let out = qshuffle(&[
        "--cartan",
        cartan.to_str().unwrap(),
        "--json",
        report.to_str().unwrap(),
        "serre",
        "--alpha",
        "2",
        "--beta",
        "1",
        "--modes",
        "0,0,1",
        "--s",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["is_zero"], true);

    std::fs::write(
        &cartan,
        r#"{"rank": 3, "matrix": [[2, -1], [-1, 2]], "symmetrizers": [1, 1]}"#,
    )
    .unwrap();
    assert_eq!(
        qshuffle(&["--cartan", cartan.to_str().unwrap(), "product", "a1:0"])
            .status
            .code(),
        Some(2)
    );
    std::fs::write(
        &cartan,
        r#"{"rank": 2, "matrix": [[2, -1], [-1, 2]], "symmetrizers": [1, 1], "x": 0}"#,
    )
    .unwrap();
    assert_eq!(
        qshuffle(&["--cartan", cartan.to_str().unwrap(), "product", "a1:0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn wheel_report_lists_every_pair() {
    let out = qshuffle(&["--cartan", "B2", "wheel", "a2:0 a2:1 a1:0 a2:-1"]);
    assert_eq!(out.status.code(), Some(0));
    let pairs = json(&out)["pairs"].as_array().unwrap().clone();
    assert_eq!(pairs.len(), 2);
    assert!(pairs.iter().all(|p| p["holds"] == true));
}
