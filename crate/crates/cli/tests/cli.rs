use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use khds_cli::{PierceReport, SolveReport};
use tempfile::TempDir;

fn khds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_khds"))
        .args(args)
        .output()
        .expect("khds runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PATH_10: &str = "10 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n";
const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
// triangle with one pendant on each corner
const TRIANGLE_PENDANTS: &str = "6 6\n0 1\n1 2\n2 0\n0 3\n1 4\n2 5\n";

#[test]
fn solve_then_verify_through_files() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "path.txt", PATH_10);
    let out = khds(&["solve", s(&g), "--k", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("size=4"));
    let set = write(&dir, "set.txt", &stdout(&out));
    let v = khds(&["verify", s(&g), s(&set), "--k", "1"]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).starts_with("covered=true"));
}

#[test]
fn dropping_a_member_is_reported_with_a_witness() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "path.txt", PATH_10);
    let out = khds(&["solve", s(&g), "--k", "1", "--json"]);
    let report: SolveReport = serde_json::from_str(&stdout(&out)).unwrap();
    let short: Vec<String> = report.members[1..].iter().map(|v| v.to_string()).collect();
    let set = write(&dir, "short.txt", &short.join("\n"));
    let v = khds(&["verify", s(&g), s(&set), "--k", "1"]);
    assert_eq!(code(&v), 1);
    assert!(stdout(&v).contains("covered=false"));
    assert!(stdout(&v).contains("witness="));
}

#[test]
fn json_reports_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "tp.txt", TRIANGLE_PENDANTS);
    let out = khds(&["solve", s(&g), "--k", "1", "--json", "--oracle"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let report: SolveReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.size, 3);
    assert!(report.oracle.as_ref().unwrap().agrees);
    assert!(report.wall_time_ns.is_none());
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim_end());
}

#[test]
fn k4_is_unsupported() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.txt", K4);
    let out = khds(&["solve", s(&g), "--k", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not a cactus"));
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "path.txt", PATH_10);
    let bad = write(&dir, "bad.txt", "3 2\n0 1\n1 7\n");
    let empty = write(&dir, "empty.txt", "# nothing\n");

    assert_eq!(code(&khds(&["solve", s(&bad), "--k", "1"])), 1);
    assert_eq!(code(&khds(&["solve", s(&g), "--k", "0"])), 1);
    assert_eq!(code(&khds(&["solve", "/no/such/file", "--k", "1"])), 1);
    assert_eq!(code(&khds(&["solve", s(&g)])), 1);
    assert_eq!(code(&khds(&["frobnicate"])), 1);

    let out = khds(&["verify", s(&g), s(&empty), "--k", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("usage"));
}

#[test]
fn help_exits_zero() {
    let out = khds(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("solve"));
}

#[test]
fn disjoint_arcs_need_one_point_each() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "12 3\n0 1\n4 5\n8 9\n");
    let out = khds(&["pierce", s(&a), "--json", "--oracle"]);
    assert_eq!(code(&out), 0);
    let r: PierceReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.size, 3);
    assert!(r.pierces_all);
    assert!(r.oracle.unwrap().agrees);
}

#[test]
fn arcs_through_a_common_point_need_one() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.txt", "12 3\n0 5\n3 8\n4 10\n");
    let out = khds(&["pierce", s(&a)]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("size=1"));
    let p: usize = text.lines().last().unwrap().parse().unwrap();
    assert!((4..=5).contains(&p));
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let dir = TempDir::new().unwrap();
    // brute force covers trees and cacti only when small
    for (kind, n) in [("tree", "18"), ("unicyclic", "300"), ("cactus", "18"), ("arcs", "300")] {
        let args = ["gen", "--kind", kind, "--n", n, "--seed", "9", "--cycles", "3"];
        let a = stdout(&khds(&args));
        assert_eq!(a, stdout(&khds(&args)), "{kind}");
        let f = write(&dir, kind, &a);
        let out = if kind == "arcs" {
            khds(&["pierce", s(&f), "--oracle"])
        } else {
            khds(&["solve", s(&f), "--k", "2", "--oracle"])
        };
        assert_eq!(code(&out), 0, "{kind}: {}", stderr(&out));
        assert!(stdout(&out).contains("agrees"), "{kind}");
    }
}

#[test]
fn bench_prints_a_table() {
    let out = khds(&["bench", "--kind", "tree", "--from", "8", "--to", "9", "--runs", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("# kind=tree"));
    assert!(text.contains("n\tmedian_ms\tratio"));
    assert_eq!(code(&khds(&["bench", "--kind", "tree", "--from", "9", "--to", "8"])), 1);
}
