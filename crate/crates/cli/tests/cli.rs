use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn drp(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_drp")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p {n} {}\n", edges.len());
    for (a, b) in edges {
        s += &format!("e {a} {b}\n");
    }
    s
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, out, err) = drp(&all);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

#[test]
fn decompose_cycle_and_k23() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6", &edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]));
    let (code, r) = json(&["decompose", "--graph", c6.to_str().unwrap(), "--verify", "debug"]);
    assert_eq!(code, 0);
    assert_eq!(r["detail"]["strong"]["cut_nodes"], 0);
    assert_eq!(r["detail"]["strong"]["cycle_nodes"], 1);
    assert_eq!(r["detail"]["special"]["leaves"], 3);
    let k23 = write(dir.path(), "k23", &edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]));
    let (code, r) = json(&["decompose", "--graph", k23.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["detail"]["strong"]["cut_nodes"], 1);
}

#[test]
fn malformed_input_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad", "p 3 1\ne 0 7\n");
    let (code, _, err) = drp(&["decompose", "--graph", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = drp(&["decompose", "--graph", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(code, 2);
    let path = write(dir.path(), "path", &edge_list(3, &[(0, 1), (1, 2)]));
    let (code, _, _) = drp(&["decompose", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn solve_exit_codes_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let g = write(dir.path(), "k5", &edge_list(5, &k5));
    let g = g.to_str().unwrap();
    let (code, r) = json(&["solve", "--graph", g, "--terminals", "0,1,2,3", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(r["detail"]["kind"], "two_paths");
    let c6 = write(dir.path(), "c6", &edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]));
    let c6 = c6.to_str().unwrap();
    let (code, out, _) = drp(&["solve", "--graph", c6, "--terminals", "0,2,1,3", "--json"]);
    assert_eq!(code, 1);
    let cert = write(dir.path(), "cert.json", &out);
    let (code, _, _) = drp(&["verify", "--graph", c6, "--terminals", "0,2,1,3", "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code, 0);
    // The same certificate claims nothing about other terminals.
    let (code, _, _) = drp(&["verify", "--graph", c6, "--terminals", "0,1,2,3", "--certificate", cert.to_str().unwrap()]);
    assert_eq!(code, 3);
    let (code, _, _) = drp(&["solve", "--graph", c6, "--terminals", "0,0,1,3"]);
    assert_eq!(code, 2);
    let (code, _, _) = drp(&["solve", "--graph", c6, "--terminals", "0,1"]);
    assert_eq!(code, 2);
}

#[test]
fn compact_runs_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text, _) = drp(&["generate", "--family", "kk3", "--n", "60"]);
    let g = write(dir.path(), "kk3", &text);
    let g = g.to_str().unwrap();
    let (code, r) = json(&["compact", "--graph", g, "--n0", "6", "--verify", "full", "--protected", "0"]);
    assert_eq!(code, 0);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    assert!(!r["detail"]["steps"].as_array().unwrap().is_empty());
    let (code, r) = json(&["compact", "--graph", g, "--n0", "6", "--step"]);
    assert_eq!(code, 0);
    assert_eq!(r["detail"]["shrink"]["tag"], "Triangles");
    // Below n0 nothing happens.
    let (code, r) = json(&["compact", "--graph", g]);
    assert_eq!(code, 0);
    assert!(r["detail"]["steps"].as_array().unwrap().is_empty());
    let c6 = write(dir.path(), "c6", &edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]));
    let (code, _, err) = drp(&["compact", "--graph", c6.to_str().unwrap(), "--n0", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("not 3-connected"));
    let (code, _, _) = drp(&["compact", "--graph", g, "--c", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn dense_compaction_deletes_edges() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text, _) = drp(&["generate", "--family", "dense", "--n", "100", "--seed", "4"]);
    let g = write(dir.path(), "dense", &text);
    let (code, r) = json(&["compact", "--graph", g.to_str().unwrap(), "--n0", "50", "--step", "--verify", "full"]);
    assert_eq!(code, 0);
    assert_eq!(r["detail"]["shrink"]["tag"], "EdgeSet");
    assert!(r["shrink_ratios"][0].as_f64().unwrap() > 0.2);
}

#[test]
fn bench_is_deterministic() {
    let args = ["bench", "--family", "sparse", "--sizes", "300,600", "--n0", "50", "--seed", "9"];
    let (code, a) = json(&args);
    let (_, b) = json(&args);
    assert_eq!(code, 0);
    let strip = |v: &Value| {
        v["detail"]["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| (r["n"].clone(), r["m"].clone(), r["steps"].clone(), r["shrink_ratios"].clone()))
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(strip(&a).len(), 2);
    let (code, r) = json(&["bench", "--family", "sparse"]);
    assert_eq!(code, 0);
    assert!(r["detail"]["rows"].as_array().unwrap().is_empty());
}
