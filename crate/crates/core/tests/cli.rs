use std::process::{Command, Output};

use serde_json::Value;

const ENUMERATE_5: &str = include_str!("golden/enumerate_5.txt");
const UNIT_PACKETS_ON_5: &str = include_str!("golden/unit_packets_on_5.txt");

fn partkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partkit"))
        .args(args)
        .env_remove("PARTKIT_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = partkit(&full);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).expect("stdout is one json object"))
}

#[test]
fn compute_examples() {
    let o = partkit(&["--format", "csv", "compute", "P", "0..5"]);
    assert_eq!(
        stdout(&o),
        "statistic,k,n,value\nP,,0,1\nP,,1,1\nP,,2,2\nP,,3,3\nP,,4,5\nP,,5,7\n"
    );
    let (code, v) = json(&["compute", "Q", "--k", "5", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["values"][0]["value"], "5");
    assert_eq!(stdout(&partkit(&["compute", "S", "0"])), "S(0) = 0\n");
    assert_eq!(partkit(&["compute", "V", "3"]).status.code(), Some(2));
    assert_eq!(partkit(&["compute", "S", "3", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn enumerate_examples() {
    let o = partkit(&["enumerate", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), ENUMERATE_5);

    let (_, v) = json(&["enumerate", "0"]);
    assert_eq!(v["result"]["count"], 1);
    assert_eq!(v["result"]["partitions"][0]["parts"], serde_json::json!([]));

    let (_, v) = json(&["enumerate", "2", "--stats"]);
    let ps = v["result"]["partitions"].as_array().unwrap();
    assert_eq!(ps[0]["parts"], serde_json::json!([2]));
    assert_eq!(ps[0]["distinct"], 1);
    assert_eq!(ps[1]["parts"], serde_json::json!([1, 1]));
    assert_eq!(ps[1]["distinct"], 1);
    assert_eq!(ps[1]["multiplicities"]["1"], 2);

    let csv = stdout(&partkit(&["--format", "csv", "enumerate", "2", "--stats"]));
    assert_eq!(csv, "index,partition,parts,distinct,multiplicities\n0,2,1,1,2:1\n1,1+1,2,1,1:2\n");
}

#[test]
fn enumeration_cap_flag_env_and_refusal() {
    let o = partkit(&["enumerate", "61"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap is 60"));

    let bin = env!("CARGO_BIN_EXE_partkit");
    let env_only = Command::new(bin).args(["enumerate", "5"]).env("PARTKIT_ENUM_CAP", "4").output().unwrap();
    assert_eq!(env_only.status.code(), Some(2));
    let flag_wins = Command::new(bin)
        .args(["--enum-cap", "10", "enumerate", "5"])
        .env("PARTKIT_ENUM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(partkit(&["verify", "thm1", "--n-max", "200", "--k-max", "12"]).status.code(), Some(0));
    assert_eq!(partkit(&["verify", "stanley", "--n-max", "0"]).status.code(), Some(0));
    assert_eq!(partkit(&["verify", "elder"]).status.code(), Some(0));
    assert_eq!(partkit(&["verify", "thm2", "--n-max", "30"]).status.code(), Some(0));
    assert_eq!(partkit(&["verify", "pythagoras"]).status.code(), Some(2));
    assert_eq!(partkit(&["verify", "elder", "--n-max", "70"]).status.code(), Some(2));
    let explicit = ["verify", "congruences", "--stat", "Q", "--c", "5", "--a", "5", "--b", "4", "--m", "5"];
    assert_eq!(partkit(&explicit).status.code(), Some(0));
    let failing = ["verify", "congruences", "--stat", "P", "--a", "1", "--b", "0", "--m", "2", "--n-max", "5"];
    assert_eq!(partkit(&failing).status.code(), Some(1));
}

#[test]
fn builtin_congruences_report_both_outcomes() {
    let (code, v) = json(&["verify", "congruences", "--builtin", "--n-max", "40"]);
    assert_eq!(code, 1);
    let claims = v["result"]["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 7);
    let by = |c: u64, a: u64| {
        claims
            .iter()
            .find(|x| x["claim"]["C"] == c && x["claim"]["A"] == a)
            .unwrap()
            .clone()
    };
    let asserted = by(5, 25);
    assert_eq!(asserted["source"], "asserted");
    assert_eq!(asserted["report"]["passed"], false);
    assert_eq!(asserted["report"]["counterexamples"][0]["n"], 0);
    assert_eq!(asserted["report"]["counterexamples"][0]["value"], "660");
    assert_eq!(asserted["report"]["counterexamples"][0]["residue"], "10");
    assert_eq!(asserted["as_expected"], true);
    let repaired = by(25, 25);
    assert_eq!(repaired["source"], "derived-repair");
    assert_eq!(repaired["report"]["passed"], true);
    assert!(claims.iter().all(|c| c["as_expected"] == true));

    let text = stdout(&partkit(&["verify", "congruences", "--n-max", "10"]));
    assert!(text.contains("FAIL  Q_5(25n+24) ≡ 0 (mod 25)"));
    assert!(text.contains("n=0 value=660 residue=10"));
    assert!(text.contains("PASS  Q_25(25n+24) ≡ 0 (mod 25)"));
}

#[test]
fn scan_examples() {
    let csv = stdout(&partkit(&["--format", "csv", "scan", "5", "4", "5", "--c-max", "6", "--n-max", "100"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("C,passed,n_max"));
    let cs: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert!(cs.contains(&"5"));
    assert!(!cs.contains(&"1"));

    let csv = stdout(&partkit(&["--format", "csv", "scan", "7", "5", "7", "--c-max", "8", "--n-max", "100"]));
    assert!(csv.lines().any(|l| l == "7,true,100"));

    let (code, v) = json(&["scan", "5", "4", "5", "--c-max", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["survivors"], serde_json::json!([]));

    for bad in [["scan", "0", "4", "5"], ["scan", "5", "4", "1"], ["scan", "5", "x", "5"]] {
        assert_eq!(partkit(&bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn ferrers_examples() {
    let (code, v) = json(&["ferrers", "add", "2+2+1", "--k", "2"]);
    assert_eq!(code, 0);
    let results = v["result"]["outcomes"][0]["results"].as_array().unwrap();
    let parts: Vec<&str> = results.iter().map(|r| r["partition"].as_str().unwrap()).collect();
    assert_eq!(parts, ["2+2+1+1+1", "3+3+1"]);
    assert_eq!(results[1]["rows"], serde_json::json!(["**#", "**#", "*"]));
    assert_eq!(results[1]["addition"], serde_json::json!({"kind": "merge", "value": 2}));
    assert_eq!(results[0]["marks"], serde_json::json!([[3, 0], [4, 0]]));

    let o = partkit(&["ferrers", "count", "5", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("19 = 19"));

    let o = partkit(&["ferrers", "show", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("empty diagram"));

    assert_eq!(stdout(&partkit(&["ferrers", "add", "--all-of", "5", "--k", "1"])), UNIT_PACKETS_ON_5);
    assert_eq!(stdout(&partkit(&["ferrers", "show", "--partition", "3+2"])), "3+2\n***\n**\n");

    for bad in ["1+2", "2+0", "two"] {
        assert_eq!(partkit(&["ferrers", "add", bad, "--k", "1"]).status.code(), Some(2), "{bad}");
    }
    assert_eq!(partkit(&["ferrers", "add", "--k", "1"]).status.code(), Some(2));
    assert_eq!(partkit(&["ferrers", "count", "5", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn json_is_one_object_and_round_trips() {
    for args in [
        vec!["--format", "json", "compute", "P", "0..30"],
        vec!["--format", "json", "verify", "congruences", "--n-max", "5"],
        vec!["--format", "json", "ferrers", "add", "--all-of", "4", "--k", "2"],
    ] {
        let raw = stdout(&partkit(&args));
        let v: Value = serde_json::from_str(&raw).unwrap();
        assert!(v.is_object());
        let env: partkit::cli::OutputEnvelope = serde_json::from_str(&raw).unwrap();
        assert_eq!(serde_json::to_string_pretty(&env).unwrap() + "\n", raw);
        assert_eq!(serde_json::to_value(&env).unwrap(), v);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for format in ["json", "csv"] {
        let args = ["--format", format, "scan", "5", "4", "5", "--c-max", "12", "--n-max", "60"];
        assert_eq!(partkit(&args).stdout, partkit(&args).stdout);
    }
}

#[test]
fn provenance_can_be_suppressed() {
    let (_, with) = json(&["compute", "P", "3"]);
    assert_eq!(with["provenance"]["tool"], "partkit");
    let (_, without) = json(&["--no-provenance", "compute", "P", "3"]);
    assert!(without.get("provenance").is_none());
    assert_eq!(without["command"], "compute");
    assert_eq!(without["format"], "json");
    assert_eq!(without["parameters"]["statistic"], "P");
}

#[test]
fn no_oracle_flag_reaches_reports() {
    let (_, v) = json(&["--no-oracle", "verify", "stanley", "--n-max", "10"]);
    assert_eq!(v["result"]["reports"][0]["oracle_points"], 0);
    let (_, v) = json(&["verify", "stanley", "--n-max", "10"]);
    assert_eq!(v["result"]["reports"][0]["oracle_points"], 11);
}
