use std::path::Path;
use std::process::{Command, Output};

fn qrdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrdist"))
        .args(args)
        .env_remove("QRDIST_CACHE")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_field(out: &Output, name: &str) -> String {
    let text = stdout(out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    row[i].to_string()
}

#[test]
fn count_examples() {
    let out = qrdist(&["count", "--p", "13", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).lines().next().unwrap(),
        "p,class4,class8,class12,selector,Q,N,size,main_term,gap,normalized_gap"
    );
    assert_eq!(
        (csv_field(&out, "Q"), csv_field(&out, "N")),
        ("3".into(), "3".into())
    );

    let out = qrdist(&["count", "--p", "7", "--odds"]);
    assert_eq!(
        (csv_field(&out, "Q"), csv_field(&out, "N")),
        ("1".into(), "2".into())
    );
    assert_eq!(csv_field(&out, "gap"), "-1/2");

    let out = qrdist(&["count", "--p", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an odd prime"));
}

#[test]
fn table_prints_fraction_and_decimal() {
    let out = qrdist(&["count", "--p", "11", "--k", "2", "--format", "table"]);
    assert!(stdout(&out).contains("-3/2 (-1.5)"));
}

#[test]
fn sum_examples() {
    for (p, den, want) in [("11", "4", "0"), ("7", "2", "1"), ("13", "2", "0")] {
        let out = qrdist(&["sum", "--p", p, "--den", den]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(csv_field(&out, "sum"), want, "p = {p}, den = {den}");
    }
    let out = qrdist(&["sum", "--p", "13", "--from", "2", "--to", "5"]);
    assert_eq!(csv_field(&out, "sum"), "0");
    let out = qrdist(&["sum", "--p", "5", "--dump"]);
    assert_eq!(
        stdout(&out),
        "m,chi,prefix\n0,0,0\n1,1,1\n2,-1,0\n3,-1,-1\n4,1,0\n"
    );
}

#[test]
fn classnum_examples() {
    let out = qrdist(&["classnum", "--d", "-23"]);
    assert_eq!(csv_field(&out, "h"), "3");
    assert_eq!(csv_field(&out, "agree"), "true");
    let out = qrdist(&["classnum", "--p", "13", "--family", "4p"]);
    assert_eq!(csv_field(&out, "h"), "2");
    assert_eq!(csv_field(&out, "weighted"), "2");
    let out = qrdist(&["classnum", "--d=-8"]);
    assert_eq!(csv_field(&out, "h"), "1");
    assert_eq!(qrdist(&["classnum", "--d", "5"]).status.code(), Some(2));
    assert_eq!(
        qrdist(&["classnum", "--p", "13", "--family", "p"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn lvalue_examples() {
    for (args, want) in [
        (&["lvalue", "--p", "7"][..], 1.187410),
        (&["lvalue", "--p", "23"][..], 1.965202),
        (&["lvalue", "--p", "13", "--family", "3p"][..], 2.012230),
    ] {
        let out = qrdist(args);
        assert_eq!(out.status.code(), Some(0));
        let exact: f64 = csv_field(&out, "exact").parse().unwrap();
        assert!((exact - want).abs() < 1e-6, "{args:?}: {exact}");
        assert_eq!(csv_field(&out, "consistent"), "true");
    }
    assert_eq!(qrdist(&["lvalue", "--p", "13"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = qrdist(&[
        "verify",
        "--min",
        "5",
        "--max",
        "10000",
        "--identities",
        "all",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",0")));
    assert_eq!(
        qrdist(&["verify", "--min", "10", "--max", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrdist(&["verify", "--min", "5", "--max", "50", "--jobs", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrdist(&["verify", "--min", "5", "--max", "50", "--eps", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrdist(&["verify", "--min", "5", "--max", "50", "--identities", "X9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrdist(&["verify", "--min", "100", "--max", "100"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_claims_json() {
    let out = qrdist(&[
        "verify",
        "--min",
        "5",
        "--max",
        "1000",
        "--claims",
        "all",
        "--format",
        "json",
        "--witness-cap",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let claim = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "T1.1-pos")
        .unwrap();
    let failing: Vec<u64> = claim["witnesses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["p"].as_u64().unwrap())
        .collect();
    let expected: Vec<u64> = qrdist::primes_in_range(5, 1000)
        .unwrap()
        .into_iter()
        .filter(|p| p % 8 == 3)
        .collect();
    assert_eq!(failing, expected);
}

#[test]
fn expectation_file_sets_exit_status() {
    let snapshot = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/claims-expected.json");
    let out = qrdist(&[
        "verify",
        "--min",
        "5",
        "--max",
        "3000",
        "--identities",
        "none",
        "--claims",
        "all",
        "--expect",
        snapshot.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let dir = tempfile::tempdir().unwrap();
    let wrong = dir.path().join("wrong.json");
    std::fs::write(&wrong, r#"{"T1.1-pos": {"r8=3": "pass"}}"#).unwrap();
    let out = qrdist(&[
        "verify",
        "--min",
        "5",
        "--max",
        "300",
        "--identities",
        "none",
        "--claims",
        "T1.1-pos",
        "--expect",
        wrong.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mismatch"));
}

#[test]
fn verify_writes_files_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let counts = dir.path().join("c.csv");
    let cache = dir.path().join("h.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_qrdist"))
        .args(["verify", "--min", "5", "--max", "200", "--format", "json"])
        .arg("--output")
        .arg(&report)
        .arg("--counts-csv")
        .arg(&counts)
        .env("QRDIST_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    qrdist::VerificationReport::from_json(&text).unwrap();
    let rows = std::fs::read_to_string(&counts).unwrap();
    assert!(rows.starts_with("p,class4,class8,class12,selector,"));
    assert!(std::fs::read_to_string(&cache)
        .unwrap()
        .starts_with("d,h\n"));
}
