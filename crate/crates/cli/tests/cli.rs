use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;
use weakdeg_core::corpus;
use weakdeg_core::graph::IdMap;
use weakdeg_core::io::write_rotation;

struct Run {
    code: i32,
    out: String,
    err: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.out).unwrap_or_else(|e| panic!("{e}: {}", self.out))
    }
}

fn weakdeg(args: &[&str]) -> Run {
    let o = Command::new(env!("CARGO_BIN_EXE_weakdeg")).args(args).output().unwrap();
    Run {
        code: o.status.code().unwrap(),
        out: String::from_utf8(o.stdout).unwrap(),
        err: String::from_utf8(o.stderr).unwrap(),
    }
}

fn put(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn rot(dir: &TempDir, name: &str, pg: &weakdeg_core::PlaneGraph) -> String {
    put(dir, &format!("{name}.rot"), &write_rotation(pg, &IdMap::identity(pg.graph().n())))
}

const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const K5: &str = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn check_class_on_cycles() {
    let d = TempDir::new().unwrap();
    let c8 = rot(&d, "c8", &corpus::cycle(8));
    let r = weakdeg(&["check-class", &c8]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["in_class"], true);
    let k4 = rot(&d, "k4", &corpus::k4());
    assert_eq!(weakdeg(&["check-class", &k4]).code, 1);
}

#[test]
fn wd_of_k4() {
    let d = TempDir::new().unwrap();
    let k4 = put(&d, "k4.txt", K4);
    let r = weakdeg(&["wd", &k4]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["value"], 3);
    assert_eq!(r.json()["verified"], true);
    assert_eq!(weakdeg(&["wd", &k4, "--k", "2"]).code, 1);
    assert_eq!(weakdeg(&["wd", &k4, "--k", "3"]).code, 0);
    let r = weakdeg(&["degeneracy", &k4]);
    assert_eq!(r.json()["value"], 3);
}

#[test]
fn no_partition_for_k5() {
    let d = TempDir::new().unwrap();
    let k5 = put(&d, "k5.txt", K5);
    let r = weakdeg(&["if-partition", &k5]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["partition"], "none");
}

#[test]
fn partition_certificate_round_trip() {
    let d = TempDir::new().unwrap();
    let pg = corpus::seven_face_host();
    let input = rot(&d, "seven", &pg);
    let cert = d.path().join("seven.part");
    let c = cert.to_str().unwrap();
    let r = weakdeg(&["if-partition", &input, "--out", c]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.json()["verified"], true);
    assert_eq!(weakdeg(&["verify-partition", &input, c]).code, 0);
    let bad = put(&d, "bad.part", &format!("I: {}\nF:\n", (0..pg.graph().n()).map(|v| v.to_string()).collect::<Vec<_>>().join(" ")));
    assert_eq!(weakdeg(&["verify-partition", &input, &bad]).code, 1);
}

#[test]
fn reduce_then_verify() {
    let d = TempDir::new().unwrap();
    for h in corpus::in_class_config_hosts().iter().take(4) {
        let input = rot(&d, &h.name(), &h.pg);
        let seq = d.path().join(format!("{}.seq", h.name()));
        let s = seq.to_str().unwrap();
        let r = weakdeg(&["reduce", &input, "--out", s, "--prefer-configurations"]);
        assert_eq!(r.code, 0, "{}", r.err);
        let prov = std::fs::read_to_string(format!("{s}.prov")).unwrap();
        assert_eq!(prov.lines().count(), h.pg.graph().n());
        assert!(prov.lines().last().unwrap() != "two-minus", "{}", h.name());
        assert_eq!(weakdeg(&["verify-seq", &input, s]).code, 0);
        assert_eq!(weakdeg(&["verify-seq", &input, s, "--const", "1"]).code, 1);
    }
    let k4 = rot(&d, "k4", &corpus::k4());
    assert_eq!(weakdeg(&["reduce", &k4]).code, 1);
}

#[test]
fn wd_witness_file_verifies() {
    let d = TempDir::new().unwrap();
    let input = put(&d, "g.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    let seq = d.path().join("g.seq");
    let s = seq.to_str().unwrap();
    let r = weakdeg(&["wd", &input, "--out", s]);
    assert_eq!(r.json()["value"], 2);
    assert_eq!(weakdeg(&["verify-seq", &input, s, "--const", "2"]).code, 0);
    assert_eq!(weakdeg(&["verify-seq", &input, s, "--const", "1"]).code, 1);
}

#[test]
fn gapped_labels_survive() {
    let d = TempDir::new().unwrap();
    let input = put(&d, "g.rot", "10: 20 30\n20: 30 10\n30: 10 20\n");
    let seq = d.path().join("g.seq");
    let s = seq.to_str().unwrap();
    let r = weakdeg(&["reduce", &input, "--out", s]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["labels"], serde_json::json!([10, 20, 30]));
    let text = std::fs::read_to_string(&seq).unwrap();
    assert!(text.lines().all(|l| ["D 10", "D 20", "D 30"].contains(&l)), "{text}");
    assert_eq!(weakdeg(&["verify-seq", &input, s]).code, 0);
}

#[test]
fn strict_check_and_values() {
    let d = TempDir::new().unwrap();
    let tree = put(&d, "t.txt", "0 1\n1 2\n1 3\n");
    let tri = put(&d, "c3.txt", "0 1\n1 2\n2 0\n");
    assert_eq!(weakdeg(&["strict-check", &tree, "--const", "2"]).code, 0);
    assert_eq!(weakdeg(&["strict-check", &tri, "--const", "2"]).code, 1);
    let f = put(&d, "f.txt", "0: 2\n1: 2\n2: 3\n");
    assert_eq!(weakdeg(&["strict-check", &tri, "--f", &f]).code, 0);
    assert_eq!(weakdeg(&["strict-check", &tri]).code, 2);
}

#[test]
fn sfdt_from_cover_file() {
    let d = TempDir::new().unwrap();
    let tri = put(&d, "c3.txt", "0 1\n1 2\n2 0\n");
    let cover = put(&d, "c3.cover", "s=2\n0 1: 1-1 2-2\n1 2: 1-1 2-2\n0 2: 1-1 2-2\n");
    let r = weakdeg(&["sfdt", &tri, "--cover", &cover, "--const", "1,2"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(weakdeg(&["sfdt", &tri, "--cover", &cover, "--const", "1,1"]).code, 1);
    let bad = put(&d, "bad.cover", "s=2\n0 1: 1-1 1-2\n");
    assert_eq!(weakdeg(&["sfdt", &tri, "--cover", &bad, "--const", "1,2"]).code, 2);
}

#[test]
fn input_errors_exit_two() {
    let d = TempDir::new().unwrap();
    let k4 = put(&d, "k4.txt", K4);
    let r = weakdeg(&["faces", &k4]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("embedding"));
    assert_eq!(weakdeg(&["wd", &put(&d, "loop.txt", "1 1\n")]).code, 2);
    assert_eq!(weakdeg(&["wd", &put(&d, "junk.txt", "a b c\n")]).code, 2);
    assert_eq!(weakdeg(&["check-class", "/nonexistent.rot"]).code, 2);
    assert_eq!(weakdeg(&["no-such-command"]).code, 2);
    let big = put(&d, "big.txt", &(0..30).map(|i| format!("{i} {}\n", i + 1)).collect::<String>());
    let r = weakdeg(&["wd", &big]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("cap"), "{}", r.err);
    assert_eq!(weakdeg(&["wd", &big, "--cap", "40"]).json()["value"], 1);
}

#[test]
fn graph6_input() {
    let d = TempDir::new().unwrap();
    let g6 = put(&d, "k4.g6", "C~\n");
    assert_eq!(weakdeg(&["wd", &g6]).json()["value"], 3);
    assert_eq!(weakdeg(&["find-config", &g6]).code, 1);
    assert_eq!(weakdeg(&["audit-lemma1", &g6]).code, 2);
}

#[test]
fn faces_discharge_and_configs() {
    let d = TempDir::new().unwrap();
    let cube = rot(&d, "cube", &corpus::cube());
    let r = weakdeg(&["faces", &cube]);
    assert_eq!(r.json()["census"]["4"], 6);
    assert_eq!(r.json()["euler"], 2);
    let trd = rot(&d, "trd", &corpus::truncated_rhombic_dodecahedron());
    let r = weakdeg(&["discharge", &trd]);
    assert_eq!(r.code, 0, "{}", r.out);
    assert_eq!(r.json()["total_after"], "-12");
    assert!(r.json().get("ledger").is_none());
    assert!(weakdeg(&["discharge", &trd, "--ledger"]).json()["ledger"]["transfers"].is_array());
    let r = weakdeg(&["find-config", &trd]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["matches"].as_array().unwrap().len(), 48);
    assert_eq!(weakdeg(&["audit-lemma1", &cube]).code, 1);
    let seven = rot(&d, "seven", &corpus::seven_face_host());
    assert_eq!(weakdeg(&["audit-lemma1", &seven]).code, 0);
    let two = put(&d, "two.rot", "0:\n1:\n");
    assert_eq!(weakdeg(&["discharge", &two]).code, 2);
    assert!(Path::new(&two).exists());
}
