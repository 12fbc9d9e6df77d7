use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_blockforest"));
    c.env_remove("BLOCKFOREST_ORACLE_LIMIT");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

/// Rows of a TSV table keyed by their first cell.
fn rows(tsv: &str) -> Vec<Vec<String>> {
    tsv.lines().skip(1).map(|l| l.split('\t').map(String::from).collect()).collect()
}

fn column(tsv: &str, name: &str) -> Vec<String> {
    let header: Vec<&str> = tsv.lines().next().unwrap().split('\t').collect();
    let i = header.iter().position(|h| *h == name).unwrap();
    rows(tsv).into_iter().map(|r| r[i].clone()).collect()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "husimi", "4"]), "n\tcount\n4\t29\n");
    assert_eq!(stdout(&["count", "husimi", "1"]), "n\tcount\n1\t1\n");
    let t = stdout(&["count", "cacti", "3", "--by-distribution"]);
    let mut got = rows(&t);
    got.sort();
    assert_eq!(got, [["n2=2", "3"], ["n3=1", "1"]]);
}

#[test]
fn count_by_distribution_sums_to_total() {
    for species in ["husimi", "cacti", "oriented", "triangular"] {
        let total: u64 = stdout(&["count", species, "7"]).lines().nth(1).unwrap().split('\t').nth(1).unwrap().parse().unwrap();
        let t = stdout(&["count", species, "7", "--by-distribution"]);
        let sum: u64 = column(&t, "count").iter().map(|c| c.parse::<u64>().unwrap()).sum();
        assert_eq!(sum, total, "{species}");
    }
}

#[test]
fn count_agrees_with_oracle() {
    for species in ["husimi", "cacti", "oriented"] {
        let formula = stdout(&["count", species, "5", "--by-distribution"]);
        let oracle = stdout(&["oracle", species, "5", "--by-distribution"]);
        assert_eq!(formula, oracle, "{species}");
    }
}

#[test]
fn unlabeled_examples() {
    let t = stdout(&["unlabeled", "triangular", "9"]);
    assert_eq!(column(&t, "unrooted"), ["1", "0", "1", "0", "1", "0", "2", "0", "4"]);
    let t = stdout(&["unlabeled", "husimi", "6"]);
    assert_eq!(column(&t, "unrooted"), ["1", "1", "2", "4", "9", "22"]);
    assert_eq!(stdout(&["unlabeled", "oriented", "1"]), "n\trooted\tunrooted\n1\t1\t1\n");
    assert_eq!(stdout(&["unlabeled", "husimi", "--order", "6"]), stdout(&["unlabeled", "husimi", "6"]));
}

#[test]
fn unlabeled_agrees_with_oracle() {
    let t = stdout(&["unlabeled", "husimi", "6"]);
    let (rooted, unrooted) = (column(&t, "rooted"), column(&t, "unrooted"));
    for n in 1..=6 {
        let o = stdout(&["oracle", "husimi", &n.to_string(), "--unlabeled"]);
        assert_eq!(column(&o, "count"), [unrooted[n - 1].clone()]);
        let o = stdout(&["oracle", "husimi", &n.to_string(), "--unlabeled", "--rooted"]);
        assert_eq!(column(&o, "count"), [rooted[n - 1].clone()]);
    }
}

#[test]
fn weighted_oriented_rows_sum_to_counts() {
    let plain = stdout(&["unlabeled", "oriented", "6"]);
    let weighted = stdout(&["unlabeled", "oriented", "6", "--weighted"]);
    let rs = rows(&weighted);
    for (i, total) in column(&plain, "unrooted").iter().enumerate() {
        let n = (i + 1).to_string();
        let sum: u64 = rs.iter().filter(|r| r[0] == n).map(|r| r[3].parse::<u64>().unwrap()).sum();
        assert_eq!(sum.to_string(), *total, "n={n}");
    }
    let cut = stdout(&["unlabeled", "oriented", "6", "--weighted", "--marker-truncation", "2"]);
    assert!(rows(&cut).iter().all(|r| r[1] == "1" || r[1].starts_with("y2")));
}

#[test]
fn prufer_examples() {
    let out = stdout(&["prufer", "encode", "3; {1,2},{2,3}"]);
    assert_eq!(out, "lambda: 2; pi: {1}|{3}\n");
    assert_eq!(stdout(&["prufer", "decode", "lambda: 2; pi: {1}|{3}"]), "3; {1,2},{2,3}\n");
    assert_eq!(stdout(&["prufer", "encode", "3; {1,2,3}"]), "lambda: -; pi: {1,2,3}\n");
}

#[test]
fn prufer_round_trip_through_pipes() {
    let graphs = "# comment\n3; {1,2},{2,3}\n\n5; {1,2,3},{3,4},{4,5}\n4; {1,4},{2,4},{3,4}\n";
    let codes = with_stdin(&["prufer", "encode"], graphs);
    assert!(codes.status.success());
    let back = with_stdin(&["prufer", "decode"], std::str::from_utf8(&codes.stdout).unwrap());
    assert!(back.status.success());
    let want: Vec<&str> = graphs.lines().filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    assert_eq!(String::from_utf8(back.stdout).unwrap().lines().collect::<Vec<_>>(), want);
}

#[test]
fn prufer_errors_name_the_line() {
    let out = with_stdin(&["prufer", "encode"], "3; {1,2},{2,3}\n3; {1,2},{1,2}\n");
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn virial_examples() {
    let t = stdout(&["virial", "2"]);
    assert!(column(&t, "gamma")[0].starts_with("0.5000000000"));
    let t = stdout(&["virial", "2", "--alpha", "4pi"]);
    assert!(column(&t, "gamma")[0].starts_with("0.0625000000"));
    let j: Value = serde_json::from_str(&stdout(&["virial", "3", "--format", "json"])).unwrap();
    assert_eq!(j["summary"]["verdict"], "agree");
    let residual: f64 = j["summary"]["max_residual"].as_str().unwrap().parse().unwrap();
    assert!(residual < 1e-12);
    assert_eq!(j["rows"][0][1], "1:-1");
}

#[test]
fn virial_low_precision_and_plain_alpha() {
    let t = stdout(&["virial", "2", "--alpha", "3.14159", "--precision", "4"]);
    assert_eq!(column(&t, "gamma"), ["0.5000"]);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "husimi", "4"]), 0);
    assert_eq!(code(&["count", "foo", "4"]), 2);
    assert_eq!(code(&["count", "husimi", "0"]), 2);
    assert_eq!(code(&["count", "husimi"]), 2);
    assert_eq!(code(&["unlabeled", "husimi", "4", "--weighted"]), 2);
    assert_eq!(code(&["unlabeled", "cacti", "4"]), 2);
    assert_eq!(code(&["virial", "2", "--precision", "500"]), 2);
    assert_eq!(code(&["virial", "2", "--alpha", "-1"]), 2);
    assert_eq!(code(&["--oracle-limit", "99", "oracle", "husimi", "3"]), 2);
    assert_eq!(code(&["virial", "9"]), 3);
    assert_eq!(code(&["oracle", "husimi", "8"]), 3);
    assert_eq!(code(&["prufer", "decode", "lambda: 9; pi: {1}"]), 3);
}

#[test]
fn oracle_limit_from_environment() {
    let out = bin().env("BLOCKFOREST_ORACLE_LIMIT", "4").args(["oracle", "husimi", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin().env("BLOCKFOREST_ORACLE_LIMIT", "4").args(["oracle", "husimi", "4"]).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn burnside_agrees_with_canonical_forms() {
    for n in 1..=5 {
        let n = n.to_string();
        let a = stdout(&["oracle", "husimi", &n, "--unlabeled", "--burnside"]);
        let b = stdout(&["oracle", "husimi", &n, "--unlabeled"]);
        assert_eq!(column(&a, "count"), column(&b, "count"));
    }
}

#[test]
fn selftest_fast_passes_and_fault_is_named() {
    assert!(stdout(&["selftest"]).lines().skip(1).all(|l| l.contains("\tpass\t")));
    let out = run(&["selftest", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("triangular recurrence vs fixed point"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["count", "oriented", "9", "--by-distribution"][..],
        &["unlabeled", "oriented", "7", "--weighted", "--format", "json"],
        &["virial", "4", "--format", "json"],
        &["oracle", "oriented", "5", "--unlabeled", "--by-distribution"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn tsv_uses_lf_and_matching_widths() {
    let t = stdout(&["virial", "4"]);
    assert!(!t.contains('\r'));
    let width = t.lines().next().unwrap().split('\t').count();
    assert!(t.lines().all(|l| l.split('\t').count() == width));
}

/// Checks a report against the published schema: the keys it requires, the
/// command enum, string-only values and row widths.
fn conforms(report: &Value, schema: &Value) -> Result<(), String> {
    let obj = report.as_object().ok_or("not an object")?;
    let props = schema["properties"].as_object().unwrap();
    for key in schema["required"].as_array().unwrap() {
        let key = key.as_str().unwrap();
        if !obj.contains_key(key) {
            return Err(format!("missing {key}"));
        }
    }
    if let Some(extra) = obj.keys().find(|k| !props.contains_key(*k)) {
        return Err(format!("unexpected key {extra}"));
    }
    if !props["command"]["enum"].as_array().unwrap().contains(&obj["command"]) {
        return Err("unknown command".into());
    }
    for map in ["params", "summary"] {
        if !obj[map].as_object().ok_or(map)?.values().all(Value::is_string) {
            return Err(format!("{map} has a non-string value"));
        }
    }
    let columns = obj["columns"].as_array().ok_or("columns")?;
    if columns.is_empty() || !columns.iter().all(Value::is_string) {
        return Err("bad columns".into());
    }
    for row in obj["rows"].as_array().ok_or("rows")? {
        let row = row.as_array().ok_or("row")?;
        if row.len() != columns.len() || !row.iter().all(Value::is_string) {
            return Err("bad row".into());
        }
    }
    Ok(())
}

#[test]
fn json_matches_published_schema_and_round_trips() {
    let schema: Value =
        serde_json::from_str(include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json"))).unwrap();
    for args in [
        &["count", "husimi", "30", "--format", "json"][..],
        &["count", "cacti", "6", "--by-distribution", "--format", "json"],
        &["unlabeled", "oriented", "5", "--weighted", "--format", "json"],
        &["prufer", "encode", "3; {1,2},{2,3}", "--format", "json"],
        &["virial", "3", "--format", "json"],
        &["oracle", "husimi", "5", "--unlabeled", "--format", "json"],
        &["selftest", "--format", "json"],
    ] {
        let text = stdout(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        conforms(&v, &schema).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v, "{args:?}");
    }
    // Big totals stay exact.
    let v: Value = serde_json::from_str(&stdout(&["count", "husimi", "30", "--format", "json"])).unwrap();
    assert!(v["rows"][0][1].as_str().unwrap().len() > 20);
}
