use std::process::Command;

use polybell_cli::{run, Table, TableKind, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn polybell(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("polybell").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/tests/golden/{name}",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

#[test]
fn value_examples() {
    assert_eq!(
        polybell(&["value", "--kind", "pbell", "--n", "6", "--p", "1"]).1,
        "2057/42\n"
    );
    assert_eq!(
        polybell(&["value", "--kind", "polybell", "--n", "7", "--p", "-3"]).1,
        "21336\n"
    );
    assert_eq!(
        polybell(&["value", "--kind", "pbell", "--n", "0", "--p", "5"]).1,
        "1\n"
    );
    assert_eq!(
        polybell(&["value", "--kind", "polybell", "--n", "4", "--p", "2"]).1,
        "13/12\n"
    );
    for backend in ["explicit", "r3", "ztriangle", "genbernoulli"] {
        let (code, out, _) = polybell(&["value", "--n", "6", "--p", "3", "--backend", backend]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "8389/840\n"));
    }
    let (code, out, _) = polybell(&["value", "--n", "9", "--p", "2", "--cross-check", "--approx"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    let exact = lines.next().unwrap();
    assert!(lines.next().unwrap().starts_with("approx "));
    assert!(exact.contains('/'));
    assert_eq!(
        polybell(&["value", "--kind", "pbell-poly", "--n", "2", "--p", "1"]).1,
        "x^2 + x + 5/6\n"
    );
    assert_eq!(
        polybell(&[
            "value",
            "--kind",
            "pbell-poly",
            "--n",
            "2",
            "--p",
            "1",
            "--x",
            "1"
        ])
        .1,
        "17/6\n"
    );
}

#[test]
fn value_usage_errors() {
    assert_eq!(polybell(&["value", "--n", "3", "--p", "-1"]).0, EXIT_USAGE);
    assert_eq!(
        polybell(&["value", "--n", "3", "--p", "1", "--backend", "magic"]).0,
        EXIT_USAGE
    );
    assert_eq!(polybell(&["value", "--n", "x", "--p", "1"]).0, EXIT_USAGE);
    assert_eq!(
        polybell(&[
            "value",
            "--kind",
            "pbell-poly",
            "--n",
            "2",
            "--p",
            "1",
            "--x",
            "1/0"
        ])
        .0,
        EXIT_USAGE
    );
    assert_eq!(polybell(&["frobnicate"]).0, EXIT_USAGE);
    let (code, out, _) = polybell(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn tables_match_golden_files() {
    assert_eq!(
        polybell(&["table", "--n-max", "6", "--p-max", "3"]).1,
        golden("pbell_numbers_n6_p3.csv")
    );
    for backend in ["explicit", "r3", "genbernoulli"] {
        let out = polybell(&[
            "table",
            "--n-max",
            "6",
            "--p-max",
            "3",
            "--backend",
            backend,
        ])
        .1;
        assert_eq!(out, golden("pbell_numbers_n6_p3.csv"));
    }
    let out = polybell(&[
        "table",
        "--kind",
        "polybell-neg",
        "--n-max",
        "9",
        "--p-max",
        "4",
    ])
    .1;
    assert_eq!(out, golden("polybell_neg_n9_p4.csv"));
    assert_eq!(
        polybell(&["table", "--n-max", "0", "--p-max", "0"]).1,
        golden("pbell_numbers_n0_p0.csv")
    );
    assert_eq!(
        polybell(&["table", "--n-max", "0", "--p-max", "5"]).1,
        "n\\p,0,1,2,3,4,5\n0,1,1,1,1,1,1\n"
    );
}

#[test]
fn tables_round_trip() {
    for kind in ["pbell-numbers", "polybell-neg", "pbell-poly-coeffs"] {
        let k = match kind {
            "pbell-numbers" => TableKind::PbellNumbers,
            "polybell-neg" => TableKind::PolybellNeg,
            _ => TableKind::PbellPolyCoeffs,
        };
        let csv = polybell(&["table", "--kind", kind, "--n-max", "7", "--p-max", "3"]).1;
        assert_eq!(Table::from_csv(k, &csv).unwrap().to_csv(), csv);
        let json = polybell(&[
            "table", "--kind", kind, "--n-max", "7", "--p-max", "3", "--format", "json",
        ])
        .1;
        let parsed = Table::from_json(k, &json).unwrap();
        assert_eq!(parsed.to_json(), json);
        assert_eq!(parsed, Table::from_csv(k, &csv).unwrap());
    }
    let json = polybell(&["table", "--n-max", "2", "--p-max", "1", "--format", "json"]).1;
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[3], serde_json::json!({"n": 1, "p": 1, "value": "1/2"}));
    assert!(Table::from_csv(TableKind::PbellNumbers, "n\\p,0\n0,2/4\n").is_err());
    assert!(Table::from_csv(TableKind::PbellNumbers, "n\\p,0\n1,1\n").is_err());
    assert!(Table::from_json(TableKind::PbellNumbers, "[]").is_err());
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let (code, out, _) = polybell(&["table", "--out", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("pbell_numbers_n6_p3.csv")
    );
    let bad = dir.path().join("missing").join("s.csv");
    let (code, _, err) = polybell(&["table", "--out", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
}

#[test]
fn verify_command() {
    let (code, out, _) = polybell(&["verify", "--only", "double-egf-polybell"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(polybell(&["verify", "--only", "nope"]).0, EXIT_USAGE);
    let (code, out, _) = polybell(&["verify", "--only", "aaa,aaa-from-c1", "--text"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.starts_with("FAIL aaa "));
    assert!(out.lines().nth(1).unwrap().starts_with("PASS aaa-from-c1"));
    let (code, out, _) = polybell(&[
        "verify",
        "--nmax",
        "0",
        "--pmax",
        "2",
        "--order",
        "4",
        "--only",
        "row-identity,cor2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn numeric_command() {
    let (code, out, _) = polybell(&["numeric", "dobinski", "--n", "2", "--p", "1"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["target"], "5/6");
    assert_eq!(v["pass"], true);
    for key in ["estimate", "abs_error", "tolerance", "samples_or_terms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let mc = [
        "numeric",
        "mc",
        "--n",
        "1",
        "--p",
        "1",
        "--x",
        "0",
        "--samples",
        "1000000",
        "--seed",
        "42",
    ];
    let (code, first, _) = polybell(&mc);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(first.trim()).unwrap();
    assert_eq!(v["target"], "1/2");
    assert!(v["ci_half_width"].as_f64().unwrap() > 0.0);
    assert_eq!(polybell(&mc).1, first);
    let (code, out, _) = polybell(&["numeric", "mgf", "--p", "1", "--t", "0.3"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["derived_pass"], true);
    assert!(v.get("printed_abs_error").is_some());
    let (code, out, _) = polybell(&["numeric", "cesaro", "--n", "3", "--p", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\"target\":\"14/15\""));
    assert_eq!(
        polybell(&[
            "numeric",
            "dobinski-poly",
            "--n",
            "2",
            "--p",
            "1",
            "--x",
            "-1.5"
        ])
        .0,
        EXIT_OK
    );
    let (code, _, _) = polybell(&["numeric", "pmf", "--p", "2", "--samples", "200000"]);
    assert_eq!(code, EXIT_OK);
    // an impossible tolerance is a check failure, not a usage error
    assert_eq!(
        polybell(&["numeric", "dobinski", "--n", "8", "--p", "1", "--tol", "1e-30"]).0,
        EXIT_CHECK_FAILED
    );
    assert_eq!(
        polybell(&["numeric", "mc", "--n", "1", "--p", "0"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        polybell(&["numeric", "cesaro", "--n", "0", "--p", "1"]).0,
        EXIT_USAGE
    );
    assert_eq!(polybell(&["numeric"]).0, EXIT_USAGE);
}

#[test]
fn bench_command() {
    let (code, out, _) = polybell(&["bench", "--nmax", "0"]);
    assert_eq!(code, EXIT_OK);
    let mut rd = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(rd.records().count(), 4);
    let (code, out, _) = polybell(&[
        "bench",
        "--nmax",
        "12",
        "--pmax",
        "3",
        "--backends",
        "explicit,r3",
        "--repeat",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<Vec<String>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 6);
    assert!(rows
        .iter()
        .all(|r| r[7] == rows[0][7] && r[6] == rows[0][6]));
    assert_eq!(rows.iter().filter(|r| r[0] == "r3").count(), 3);
    assert_eq!(polybell(&["bench", "--repeat", "0"]).0, EXIT_USAGE);
    assert_eq!(
        polybell(&["bench", "--p", "1", "--pmax", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(polybell(&["bench", "--backends", "nope"]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes_and_thread_cap() {
    let bin = env!("CARGO_BIN_EXE_polybell");
    let out = Command::new(bin)
        .args(["value", "--n", "6", "--p", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2057/42\n");
    let out = Command::new(bin)
        .args(["verify", "--only", "aaa"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .args(["table", "--kind", "nope"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .env("POLYBELL_THREADS", "1")
        .args([
            "numeric",
            "mc",
            "--n",
            "2",
            "--p",
            "2",
            "--samples",
            "50000",
            "--seed",
            "9",
        ])
        .output()
        .unwrap();
    let threaded = Command::new(bin)
        .env("POLYBELL_THREADS", "4")
        .args([
            "numeric",
            "mc",
            "--n",
            "2",
            "--p",
            "2",
            "--samples",
            "50000",
            "--seed",
            "9",
        ])
        .output()
        .unwrap();
    assert_eq!(out.stdout, threaded.stdout);
    let out = Command::new(bin)
        .env("POLYBELL_THREADS", "zero")
        .args(["value", "--n", "1", "--p", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
