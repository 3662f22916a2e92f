use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use skewbrace::groups::{make_group, Family, Group};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewbrace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn tables_csv() {
    let o = run(&["tables", "--p", "3", "--q", "7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("gamma_type,g_type,e_prime,e,classes\n"));
    assert!(out.contains("\n2,2,48,48,6×1;6×7\n"), "{out}");
    assert!(out.contains("\n2,1,6,21,3×2\n"), "{out}");
    assert!(out.contains("\n1,15\n"), "{out}");
}

#[test]
fn tables_json() {
    let o = run(&["tables", "--p", "3", "--q", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cell = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["gamma_type"] == "1" && c["g_type"] == "4")
        .unwrap();
    assert_eq!(cell["e_prime"], 54);
    assert_eq!(cell["e"], 6);
}

#[test]
fn invalid_primes() {
    let o = run(&["tables", "--p", "3", "--q", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("4 is not prime"));
    let o = run(&["tables", "--p", "2", "--q", "3"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("p = 2"));
    let o = run(&["tables", "--p", "x", "--q", "3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn enumerate_writes_records_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("braces.jsonl");
    let args = [
        "enumerate",
        "--p",
        "3",
        "--q",
        "2",
        "--type",
        "4",
        "--method",
        "structured",
        "--out",
        path.to_str().unwrap(),
    ];
    let o = run(&args);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let records = std::fs::read_to_string(&path).unwrap();
    assert_eq!(records.lines().count(), 56);
    let first: Value = serde_json::from_str(records.lines().next().unwrap()).unwrap();
    assert_eq!(first["group"]["family"], "P2Q-Type4");
    assert_eq!(first["gamma"].as_array().unwrap().len(), 18);
    let summary: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(summary["total"], 56);
    assert_eq!(summary["counts"]["type1"], 54);

    // Same bytes again, and from the search.
    let o2 = run(&args);
    assert_eq!(stdout(&o), stdout(&o2));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), records);
    let o3 = run(&[
        "enumerate",
        "--p",
        "3",
        "--q",
        "2",
        "--type",
        "4",
        "--method",
        "search",
    ]);
    assert_eq!(stdout(&o3), records);
}

#[test]
fn enumerate_summary_of_type3() {
    let o = run(&[
        "enumerate",
        "--p",
        "3",
        "--q",
        "19",
        "--type",
        "3",
        "--summary",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["type1"], 38);
    assert_eq!(v["counts"]["type2"], 76);
    assert_eq!(v["counts"]["type3"], 192);
}

#[test]
fn enumerate_errors() {
    let o = run(&["enumerate", "--p", "3", "--q", "7", "--type", "3"]);
    assert_eq!(code(&o), 2);
    let o = run(&[
        "enumerate",
        "--p",
        "3",
        "--q",
        "19",
        "--type",
        "1",
        "--method",
        "oracle",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("oracle-too-large"));
    let o = run(&[
        "enumerate",
        "--p",
        "7",
        "--q",
        "3",
        "--type",
        "4",
        "--method",
        "search",
    ]);
    assert_eq!(code(&o), 3);
}

fn report(args: &[&str]) -> (i32, Value) {
    let o = run(args);
    (code(&o), serde_json::from_str(&stdout(&o)).unwrap())
}

fn statuses(v: &Value, status: &str) -> Vec<String> {
    v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == status)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn verify_small() {
    let (c, v) = report(&["verify", "--p", "3", "--q", "2"]);
    assert_eq!(c, 0);
    assert_eq!(v["passed"], true);
    assert!(statuses(&v, "fail").is_empty());
    assert!(statuses(&v, "skipped").is_empty());
}

#[test]
fn verify_with_raised_oracle_limit() {
    let (c, v) = report(&["verify", "--p", "3", "--q", "7", "--oracle-limit", "8000"]);
    assert_eq!(c, 0);
    assert!(statuses(&v, "skipped").is_empty());
    assert!(statuses(&v, "pass").contains(&"P2Q-Type2: closure-oracle = structured".to_string()));
}

#[test]
fn verify_skips_gated_oracles() {
    let (c, v) = report(&["verify", "--p", "3", "--q", "19"]);
    assert_eq!(c, 0);
    assert!(statuses(&v, "fail").is_empty());
    assert!(statuses(&v, "skipped").contains(&"P2Q-Type3: closure-oracle".to_string()));
}

#[test]
fn verify_pq_groups() {
    let (c, v) = report(&["verify", "--p", "3", "--q", "7", "--pq"]);
    assert_eq!(c, 0);
    assert_eq!(v["p"], 7);
    assert!(statuses(&v, "fail").is_empty());
}

#[test]
fn pq_tables() {
    let o = run(&["pq", "--p", "3", "--q", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\ncyclic,metacyclic,6,2,2×3\n"));
    let o = run(&["pq", "--p", "2", "--q", "3"]);
    assert_eq!(code(&o), 2);
}

fn write_table(dir: &Path, name: &str, n: usize, table: Vec<Vec<u32>>) -> String {
    let path = dir.join(name);
    let json = serde_json::json!({ "n": n, "table": table });
    std::fs::write(&path, json.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn classify_cayley() {
    let dir = tempfile::tempdir().unwrap();

    let c18 = (0..18u32)
        .map(|i| (0..18).map(|j| (i + j) % 18).collect())
        .collect();
    let path = write_table(dir.path(), "c18.json", 18, c18);
    let o = run(&["classify-cayley", "--in", &path]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "type1\n");

    let d9 = Group::new(make_group(Family::Type4, 3, 2).unwrap()).cayley_table();
    let path = write_table(dir.path(), "d9.json", 18, d9.table);
    let o = run(&["classify-cayley", "--in", &path]);
    assert_eq!(stdout(&o), "type4\n");

    // Z/6 with one intercalate swapped: a loop, not a group.
    let mut t: Vec<Vec<u32>> = (0..6u32)
        .map(|i| (0..6).map(|j| (i + j) % 6).collect())
        .collect();
    t[1][1] = 5;
    t[1][4] = 2;
    t[4][1] = 2;
    t[4][4] = 5;
    let path = write_table(dir.path(), "loop.json", 6, t);
    let o = run(&["classify-cayley", "--in", &path]);
    assert_eq!(code(&o), 2);

    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"n\": 2}").unwrap();
    let o = run(&["classify-cayley", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}
