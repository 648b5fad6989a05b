use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ncforms(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncforms")).current_dir(dir).args(args).output().expect("spawn ncforms")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_rows(o: &Output) -> Vec<Value> {
    serde_json::from_str(&stdout(o)).expect("json output")
}

fn without_runtime(rows: Vec<Value>) -> Vec<Value> {
    rows.into_iter()
        .map(|mut r| {
            r.as_object_mut().unwrap().remove("runtime_ms");
            r
        })
        .collect()
}

#[test]
fn expand_hauptmodul() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncforms(dir.path(), &["expand", "--series", "t", "--terms", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1, -8, 32\n");
}

#[test]
fn tables_a2_all_match() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncforms(dir.path(), &["tables", "--a", "2", "--primes", "5..59", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_rows(&o);
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert_eq!(rows[2]["claim"], "frobenius-factorization/a=2/p=11");
    assert!(dir.path().join(".ncforms-cache/pointcounts.json").exists());
}

#[test]
fn asd_check_logs_pairings() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncforms(dir.path(), &["asd-check", "--prime", "5", "--nmax", "600"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("PASS  asd-congruence/p=5"));
    assert_eq!(s.matches(": holds").count(), 2);
}

#[test]
fn too_little_precision_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncforms(dir.path(), &["asd-check", "--prime", "5", "--precision", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["tables", "--a", "3"][..], &["asd-check", "--prime", "9"], &["frobnicate"], &["expand"]] {
        assert_eq!(ncforms(dir.path(), args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_formats_share_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = stdout(&ncforms(dir.path(), &["qm-check", "--format", "csv"]));
    assert!(csv.starts_with("claim,pass,witness,runtime_ms\n"));
    assert_eq!(csv.lines().filter(|l| l.starts_with("slash-action/")).count(), 2);
    let md = stdout(&ncforms(dir.path(), &["qm-check", "--format", "md"]));
    assert!(md.starts_with("| claim | pass |"));
    let rows = json_rows(&ncforms(dir.path(), &["qm-check", "--format", "json"]));
    assert_eq!(rows.len(), 5);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["twist-check", "--primes", "5..23", "--format", "json"];
    let first = without_runtime(json_rows(&ncforms(dir.path(), &args)));
    let cached = without_runtime(json_rows(&ncforms(dir.path(), &args)));
    let mut uncached_args = args.to_vec();
    uncached_args.push("--no-cache");
    let uncached = without_runtime(json_rows(&ncforms(dir.path(), &uncached_args)));
    assert_eq!(first, cached);
    assert_eq!(first, uncached);
}

#[test]
fn tampered_cache_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    assert!(ncforms(dir.path(), &["frobpoly", "--prime", "7"]).status.success());
    let path = dir.path().join(".ncforms-cache/pointcounts.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rec = &mut v["records"]["a=2/p=7/degree=1"];
    rec["total"] = Value::from(rec["total"].as_i64().unwrap() + 2);
    std::fs::write(&path, v.to_string()).unwrap();
    let o = ncforms(dir.path(), &["frobpoly", "--prime", "7", "--no-cache"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disagrees"));
}

#[test]
fn isogeny_check_is_deterministic_under_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["isogeny-check", "--primes", "13,17,29", "--trials", "40", "--seed", "9", "--format", "json"];
    let a = without_runtime(json_rows(&ncforms(dir.path(), &args)));
    let b = without_runtime(json_rows(&ncforms(dir.path(), &args)));
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r["pass"] == true && r["witness"]["trials"] == 40));
}

#[test]
fn claims_registry_lists_ids() {
    let dir = tempfile::tempdir().unwrap();
    let rows = json_rows(&ncforms(dir.path(), &["claims", "--format", "json"]));
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().any(|r| r["id"] == "asd-congruence"));
}
