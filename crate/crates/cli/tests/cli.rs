use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use sha2::{Digest, Sha256};
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_acute-cube"))
}

fn run(args: &[&str]) -> Output {
    bin().arg("--no-cache").args(args).output().unwrap()
}

fn run_cached(dir: &Path, args: &[&str]) -> Output {
    bin().arg("--cache-dir").arg(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .arg("--no-cache")
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn count_examples() {
    let o = run(&["count", "3", "--vertices", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6\n");
    assert_eq!(stdout(&run(&["count", "5", "--vertices", "16"])), "169112\n");
    assert_eq!(stdout(&run(&["count", "3", "--simplices"])), "1 1\n2 3\n3 3\n4 6\n");
    assert_eq!(stdout(&run(&["count", "2", "--all"])), "6\n");
    assert_eq!(
        stdout(&run(&["count", "2", "--simplices", "--format", "csv"])),
        "n,k,count\n2,1,1\n2,2,2\n2,3,1\n"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["count", "4", "--vertices", "5", "--format", "json"]))).unwrap();
    assert_eq!(v, serde_json::json!({"n": 4, "counts": [{"k": "5", "count": "27"}]}));
}

#[test]
fn triangle_examples() {
    assert_eq!(stdout(&run(&["triangles", "2", "--acute"])), "0\n");
    assert_eq!(stdout(&run(&["triangles", "2", "--right"])), "1\n");
    assert_eq!(stdout(&run(&["triangles", "17"])), "219\n");
    assert_eq!(stdout(&run(&["triangles", "3", "--acute", "--list"])), "1 1 1 0 acute nu=0,3,5\n");
}

#[test]
fn enumerate_examples() {
    let o = run(&["enumerate-acute", "6", "--format", "jsonl"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[0],
        serde_json::json!({"n": 6, "nu": [0, 3, 5, 9, 17, 33, 62], "det": "5", "hessenberg": true})
    );
    let o = run(&["enumerate-acute", "3", "--format", "matrix"]);
    assert_eq!(stdout(&o), "# det 2 hessenberg true\n3 4\n0110\n0101\n0011\n\n");
}

#[test]
fn enumerate_writes_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("five.jsonl");
    let o = run(&["enumerate-acute", "5", "--out", path.to_str().unwrap(), "--jobs", "2"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 2);
}

#[test]
fn canon_reads_stdin_and_files() {
    let o = with_stdin(&["canon"], "3 3\n011\n010\n001\n");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let again = with_stdin(&["canon", "--in", "-"], &text);
    assert_eq!(stdout(&again), text);
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("m.json");
    fs::write(&path, r#"{"n": 3, "columns": [6, 5, 3]}"#).unwrap();
    let o = run(&["canon", "--in", path.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({"n": 3, "k": 3, "columns": [0, 3, 5]}));
}

#[test]
fn check_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let acute = dir.path().join("acute.txt");
    fs::write(&acute, r#"{"n": 3, "columns": [0, 3, 5, 6]}"#).unwrap();
    let o = run(&["check", acute.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "acute: yes\nultrametric: yes\n");

    let right = dir.path().join("right.txt");
    fs::write(&right, "3 3\n010\n001\n000\n").unwrap();
    let o = run(&["check", right.to_str().unwrap(), "--acute"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "acute: no\n");

    let missing = dir.path().join("missing.txt");
    assert_eq!(run(&["check", missing.to_str().unwrap()]).status.code(), Some(1));
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "2 2\n01\n0x\n").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn hessenberg_and_kepler() {
    let o = run(&["hessenberg", "5", "--verify"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "<4> det 4 minimal_candidate true nu=0,3,5,9,17,30\n<2,2> det 5 minimal_candidate true nu=0,3,5,14,22,25\n"
    );
    let o = run(&["kepler", "--depth", "2"]);
    let nodes: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(nodes.len(), 7);
    assert_eq!(nodes[0], serde_json::json!({"level": 0, "p": 1, "q": 2, "sum": 3, "lambda": [3]}));
    let sums: Vec<u64> = nodes.iter().map(|n| n["sum"].as_u64().unwrap()).collect();
    assert_eq!(sums, [3, 4, 5, 5, 7, 7, 8]);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["bogus"][..],
        &["count", "3"],
        &["count", "3", "--all", "--simplices"],
        &["count", "3", "--vertices", "9"],
        &["cycle-index", "x"],
        &["cycle-index", "0"],
        &["cycle-index", "20"],
        &["enumerate-acute", "2"],
        &["enumerate-acute", "12"],
        &["hessenberg", "2"],
        &["triangles", "5", "--acute", "--right"],
        &["kepler"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn cycle_index_formats() {
    let table = stdout(&run(&["cycle-index", "3"]));
    assert!(table.starts_with("count | 1 2 3 4 6\n    1 | 8"));
    assert_eq!(table.lines().count(), 7);
    let csv = stdout(&run(&["cycle-index", "2", "--format", "csv"]));
    assert_eq!(csv.lines().next().unwrap(), "count,x1,x2,x4");
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["cycle-index", "3", "--format", "json"]))).unwrap();
    assert_eq!(v["n"], 3);
}

#[test]
fn cache_round_trip() {
    let dir = TempDir::new().unwrap();
    let cold = stdout(&run(&["cycle-index", "7", "--format", "json"]));
    let first = run_cached(dir.path(), &["cycle-index", "7", "--format", "json"]);
    let entry = dir.path().join("cycle-index-7.json");
    assert!(entry.exists());
    let warm = run_cached(dir.path(), &["cycle-index", "7", "--format", "json"]);
    assert_eq!(stdout(&first), cold);
    assert_eq!(stdout(&warm), cold);

    let stored: serde_json::Value = serde_json::from_str(&fs::read_to_string(&entry).unwrap()).unwrap();
    assert_eq!(stored["schema_version"], 1);
    assert_eq!(stored["n"], 7);
    assert_eq!(stored["checksum"].as_str().unwrap().len(), 64);

    // A consistent entry is trusted as is, which shows the warm run reads it.
    let mut planted = stored.clone();
    planted["payload"]["rows"][0]["count"] = serde_json::json!("41");
    let digest = Sha256::digest(planted["payload"].to_string().as_bytes());
    planted["checksum"] = serde_json::json!(format!("{digest:x}"));
    fs::write(&entry, planted.to_string()).unwrap();
    let read: serde_json::Value =
        serde_json::from_str(&stdout(&run_cached(dir.path(), &["cycle-index", "7", "--format", "json"]))).unwrap();
    assert_eq!(read["rows"][0]["count"], "41");
}

#[test]
fn cache_from_environment() {
    let dir = TempDir::new().unwrap();
    let o = bin().env("ACUTE_CUBE_CACHE", dir.path()).args(["count", "4", "--vertices", "5"]).output().unwrap();
    assert_eq!(stdout(&o), "27\n");
    assert!(dir.path().join("cycle-index-4.json").exists());
}

#[test]
fn damaged_cache_entries_are_recomputed() {
    let dir = TempDir::new().unwrap();
    let entry = dir.path().join("cycle-index-4.json");
    let cold = stdout(&run(&["count", "4", "--simplices"]));
    run_cached(dir.path(), &["count", "4", "--simplices"]);

    // A tampered payload no longer matches its checksum.
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&entry).unwrap()).unwrap();
    v["payload"]["rows"][0]["count"] = serde_json::json!("999");
    fs::write(&entry, v.to_string()).unwrap();
    assert_eq!(stdout(&run_cached(dir.path(), &["count", "4", "--simplices"])), cold);
    let fixed: serde_json::Value = serde_json::from_str(&fs::read_to_string(&entry).unwrap()).unwrap();
    assert_ne!(fixed["payload"]["rows"][0]["count"], "999");

    // Another schema version is ignored.
    v["schema_version"] = serde_json::json!(0);
    fs::write(&entry, v.to_string()).unwrap();
    assert_eq!(stdout(&run_cached(dir.path(), &["count", "4", "--simplices"])), cold);

    fs::write(&entry, "not json").unwrap();
    assert_eq!(stdout(&run_cached(dir.path(), &["count", "4", "--simplices"])), cold);
}

#[test]
fn jobs_do_not_change_output() {
    let a = run(&["enumerate-acute", "6", "--jobs", "1", "--format", "matrix"]);
    let b = run(&["enumerate-acute", "6", "--jobs", "4", "--format", "matrix"]);
    assert_eq!(a.stdout, b.stdout);
}
