use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const DIAMOND: &str = "a 1 1\nb 1 2\nc 1 2\nd 2 2\n";
const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";
const STAR: &str = "c 1 3\nx 1 1\ny 2 2\nz 3 3\n";

fn ivham(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ivham"))
        .args(args)
        .output()
        .expect("run ivham")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_reports_the_diamond() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "diamond.txt", DIAMOND);
    let out = ivham(&["analyze", s(&g), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["scattering_number"], 0);
    assert_eq!(report["p_star"], 2);
    assert_eq!(report["model"]["u1"], "a");
    assert_eq!(report["model"]["un"], "d");
    assert_eq!(report["scattering_set"], serde_json::json!(["b", "c"]));
    assert_eq!(report["classification"]["hamiltonian"], true);
    assert_eq!(report["classification"]["hamilton_connected"], false);
}

#[test]
fn analyze_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let gen = ivham(&["gen", "random", "--n", "500", "--seed", "9", "--connected"]);
    assert_eq!(gen.status.code(), Some(0));
    let g = write(&dir, "random.txt", &stdout(&gen));
    for flags in [&["--json", "--certificates"][..], &[][..]] {
        let mut args = vec!["analyze", s(&g)];
        args.extend_from_slice(flags);
        let first = ivham(&args);
        let second = ivham(&args);
        assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn non_interval_input_exits_with_two() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.txt", C4);
    let out = ivham(&["analyze", s(&g)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not chordal"), "{}", stderr(&out));
}

#[test]
fn missing_file_and_unknown_label_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("absent.txt");
    assert_eq!(ivham(&["analyze", s(&missing)]).status.code(), Some(2));
    let g = write(&dir, "diamond.txt", DIAMOND);
    let out = ivham(&["certify", s(&g), "--cert-kind", "path-between", "--pair", "a", "zz"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn undecided_pair_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "diamond.txt", DIAMOND);
    let out = ivham(&["certify", s(&g), "--cert-kind", "path-between", "--pair", "b", "c"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("scattering number 0"));
}

#[test]
fn missing_certificate_exits_with_one() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "star.txt", STAR);
    let out = ivham(&["certify", s(&g), "--cert-kind", "path"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("no Hamilton path"));
}

#[test]
fn certificates_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "diamond.txt", DIAMOND);
    for kind in ["path", "cycle", "stave", "path-cover"] {
        let cert = dir.path().join(format!("{kind}.json"));
        let out = ivham(&["certify", s(&g), "--cert-kind", kind, "-o", s(&cert)]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", stderr(&out));
        let out = ivham(&["verify", s(&g), s(&cert)]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", stderr(&out));
        assert!(stdout(&out).starts_with("ok: valid"));
    }
}

#[test]
fn path_between_with_removal_round_trips() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let cert = dir.path().join("between.json");
    let out = ivham(&[
        "certify", s(&g), "--cert-kind", "path-between", "--pair", "0", "4", "--remove", "2", "-o", s(&cert),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(json["removed"], serde_json::json!(["2"]));
    assert_eq!(ivham(&["verify", s(&g), s(&cert)]).status.code(), Some(0));
}

#[test]
fn tampered_certificates_are_rejected() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "diamond.txt", DIAMOND);
    let out = ivham(&["certify", s(&g), "--cert-kind", "path"]);
    let mut json: Value = serde_json::from_str(&stdout(&out)).unwrap();

    json["vertices"][0] = Value::from("q");
    let bad = write(&dir, "unknown.json", &json.to_string());
    let out = ivham(&["verify", s(&g), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("violation:"));

    json["vertices"] = serde_json::json!(["a", "d", "b", "c"]);
    let bad = write(&dir, "swapped.json", &json.to_string());
    let out = ivham(&["verify", s(&g), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not adjacent"), "{}", stderr(&out));

    let bad = write(&dir, "garbage.json", "{ not json");
    assert_eq!(ivham(&["verify", s(&g), s(&bad)]).status.code(), Some(1));
}

#[test]
fn gen_output_feeds_analyze() {
    let dir = TempDir::new().unwrap();
    let out = ivham(&["gen", "family", "onion", "--n", "12", "--emit", "intervals"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let g = write(&dir, "onion.txt", &stdout(&out));
    assert_eq!(ivham(&["analyze", s(&g)]).status.code(), Some(0));

    let out_dir = dir.path().join("all");
    let out = ivham(&["gen", "exhaustive", "--n", "4", "--out-dir", s(&out_dir)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let files: Vec<_> = fs::read_dir(&out_dir).unwrap().collect();
    assert!(!files.is_empty());
    assert!(stdout(&out).contains(&format!("wrote {} graphs", files.len())));
}

#[test]
fn bench_emits_json_rows() {
    let out = ivham(&["bench", "--sizes", "1000,2000", "--runs", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["n"], 1000);
    assert!(rows[0]["doubling_ratio"].is_null());
    assert!(rows[1]["doubling_ratio"].as_f64().is_some());
}

#[test]
fn hidden_oracle_flag_agrees_on_small_input() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "diamond.txt", DIAMOND);
    let out = ivham(&["analyze", s(&g), "--oracle"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("oracle agrees: yes"));
}
