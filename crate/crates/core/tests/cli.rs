use std::process::Command;

use outerplanar::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use outerplanar::report::{CensusRow, ConstantsReport, CountTable, OutputRecord, SCHEMA_VERSION};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("outerplanar").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn counts(csv: &str) -> Vec<String> {
    csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().to_string()).collect()
}

#[test]
fn count_general() {
    let (code, out, _) = call(&["count", "--family", "general", "--n", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().next(), Some("n,count"));
    assert_eq!(counts(&out), ["1", "1", "2", "4", "10", "25", "80", "277"]);
}

#[test]
fn count_dissections() {
    let (code, out, _) = call(&["count", "--family", "dissections", "--n", "9"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().last(), Some("9,262"));
    assert_eq!(counts(&out), ["1", "1", "2", "3", "9", "20", "75", "262"]);
}

#[test]
fn count_connected_empty() {
    let (code, out, _) = call(&["count", "--family", "connected", "--n", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n,count\n");
}

#[test]
fn count_bipartite() {
    let (_, out, _) = call(&["count", "--family", "bipartite-general", "--n", "7"]);
    assert_eq!(counts(&out), ["1", "1", "2", "3", "7", "12", "29", "61"]);
}

#[test]
fn count_json_round_trip() {
    let (code, out, _) = call(&["count", "--family", "connected", "--n", "40", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let rec: OutputRecord<CountTable> = serde_json::from_str(&out).unwrap();
    assert_eq!(rec.schema_version, SCHEMA_VERSION);
    assert_eq!(rec.command.name, "count");
    assert_eq!(rec.command.args["n"], "40");
    let last = rec.payload.rows.last().unwrap();
    assert_eq!(last.n, 40);
    // Exact counts are strings, well past the f64 integer range at n = 40.
    assert!(last.count.len() > 17 && last.count.bytes().all(|b| b.is_ascii_digit()));
    let (_, csv, _) = call(&["count", "--family", "connected", "--n", "40"]);
    assert_eq!(csv, rec.payload.to_csv());
}

#[test]
fn count_by_edges() {
    let (code, out, _) = call(&["count", "--family", "general", "--n", "3", "--edges"]);
    assert_eq!(code, EXIT_OK);
    let want = "n,m,count\n0,0,1\n1,0,1\n2,0,1\n2,1,1\n3,0,1\n3,1,1\n3,2,1\n3,3,1\n";
    assert_eq!(out, want);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["count", "--family", "trees"]).0, EXIT_USAGE);
    assert_eq!(call(&["count", "--n", "100000"]).0, EXIT_USAGE);
    assert_eq!(call(&["count", "--family", "bipartite-general", "--edges"]).0, EXIT_USAGE);
    assert_eq!(call(&["asym", "--digits", "20"]).0, EXIT_USAGE);
    assert_eq!(call(&["asym", "--m", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["oracle", "--n", "9"]).0, EXIT_USAGE);
    assert_eq!(call(&["oracle", "--n", "8"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_ne!(EXIT_FAILURE, EXIT_USAGE);
}

#[test]
fn oracle_output() {
    let (code, out, _) = call(&["oracle", "--n", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n,m,connected,two_connected,bipartite,count\n1,0,true,false,true,1\n");
    let (_, json, _) = call(&["oracle", "--n", "4", "--format", "json"]);
    let rec: OutputRecord<Vec<CensusRow>> = serde_json::from_str(&json).unwrap();
    let total: u64 = rec.payload.iter().map(|r| r.count.parse::<u64>().unwrap()).sum();
    assert_eq!(total, 10);
}

#[test]
fn asym_report() {
    let (code, out, err) = call(&["asym", "--m", "1", "--digits", "40"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let rec: OutputRecord<ConstantsReport> = serde_json::from_str(&out).unwrap();
    let rho = rec.payload.get("rho").unwrap();
    assert!(rho.value.starts_with("0.134618"));
    assert_eq!(rho.method.m, Some(1));
    assert_eq!(rho.method.digits, 40);
    assert!(rho.to_float(128).unwrap() > 0.13);
    for key in ["tau", "delta_inv", "rho_b", "d", "c", "g", "prob_connected", "edge_mu", "edge_sigma2"] {
        assert!(rec.payload.get(key).is_some(), "{key}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_outerplanar");
    let ok = Command::new(bin).args(["count", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "n,count\n0,1\n1,1\n2,2\n3,4\n");
    let bad = Command::new(bin).args(["asym", "--digits", "20"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
