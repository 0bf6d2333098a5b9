use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn sp4coh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sp4coh")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

#[test]
fn chi_prints_the_integer() {
    let out = sp4coh(&["chi", "--m1", "20", "--m2", "19"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-265");
}

#[test]
fn cusp_prints_the_integer() {
    let out = sp4coh(&["cusp", "--m1", "18", "--m2", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "50");
}

#[test]
fn cusp_is_symbolic_by_default_and_resolves_on_request() {
    assert_eq!(stdout(&sp4coh(&["cusp", "--m1", "0", "--m2", "10"])).trim(), "2ζ-4");
    let assumed = sp4coh(&["cusp", "--m1", "0", "--m2", "10", "--zk-mode", "assume"]);
    assert_eq!(stdout(&assumed).trim(), "0");
    let set = sp4coh(&["cusp", "--m1", "0", "--m2", "10", "--zk-mode", "set", "24=2"]);
    assert_eq!(stdout(&set).trim(), "0");
}

#[test]
fn hq_json_for_the_trivial_weight() {
    let out = sp4coh(&["hq", "--m1", "0", "--m2", "0", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"h":[1,0,1,0,0,0],"total":2}"#);
}

#[test]
fn hq_total_at_a_large_weight() {
    let out = sp4coh(&["hq", "--m1", "18", "--m2", "70"]);
    assert!(stdout(&out).contains("total = 4389"));
}

#[test]
fn json_round_trips_byte_identically() {
    let cases: &[&[&str]] = &[
        &["hq", "--m1", "0", "--m2", "10", "--format", "json"],
        &["chi", "--m1", "3", "--m2", "4", "--format", "json"],
        &["cusp", "--m1", "0", "--m2", "12", "--format", "json"],
        &["table", "h_total", "--format", "json"],
        &["table", "euler_sym", "--k-max", "20", "--format", "json"],
        &["torsion", "--format", "json"],
    ];
    for args in cases {
        let text = stdout(&sp4coh(args));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{value}\n"), text, "{args:?}");
    }
}

#[test]
fn csv_has_a_header_row() {
    let text = stdout(&sp4coh(&["table", "cuspidal", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m1,m2,value"));
    assert_eq!(lines.next(), Some("0,0,0"));
    assert_eq!(text.lines().count(), 1 + 15 * 15);
}

#[test]
fn euler_sym_text_uses_fifteen_columns() {
    let text = stdout(&sp4coh(&["table", "euler_sym"]));
    assert_eq!(text.lines().count(), 11);
    let first_row = text.lines().nth(1).unwrap();
    assert_eq!(first_row.split_whitespace().count(), 16);
}

#[test]
fn torsion_lists_all_classes() {
    let text = stdout(&sp4coh(&["torsion", "--format", "csv"]));
    assert_eq!(text.lines().count(), 57);
}

#[test]
fn invalid_arguments_exit_two() {
    assert_eq!(sp4coh(&["chi", "--m1", "-1", "--m2", "0"]).status.code(), Some(2));
    assert_eq!(sp4coh(&["hq", "--m1", "0", "--m2", "0", "--zk-mode", "maybe"]).status.code(), Some(2));
    let out = sp4coh(&["hq", "--m1", "0", "--m2", "10", "--zk-mode", "set", "24=3"]);
    assert_eq!(out.status.code(), Some(2));
    let capped = sp4coh(&["table", "h_total", "--m1-max", "100", "--n1-cap", "50"]);
    assert_eq!(capped.status.code(), Some(2));
}

#[test]
fn verify_passes_on_embedded_fixtures() {
    let out = sp4coh(&["verify", "--n1-max", "30"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn verify_passes_on_a_copied_fixture_directory() {
    let dir = std::env::temp_dir().join(format!("sp4coh-cli-copy-{}", std::process::id()));
    copy_data(&dir);
    let out = Command::new(env!("CARGO_BIN_EXE_sp4coh"))
        .args(["verify", "--n1-max", "20"])
        .env("SP4COH_FIXTURE_DIR", &dir)
        .output()
        .unwrap();
    fs::remove_dir_all(&dir).unwrap();
    assert!(out.status.success());
}

#[test]
fn verify_rejects_a_tampered_fixture_directory() {
    let dir = std::env::temp_dir().join(format!("sp4coh-cli-tamper-{}", std::process::id()));
    copy_data(&dir);
    let path = dir.join("cuspidal.json");
    let text = fs::read_to_string(&path).unwrap().replacen("50", "51", 1);
    fs::write(&path, text).unwrap();
    let out = sp4coh(&["verify", "--n1-max", "20", "--fixture-dir", dir.to_str().unwrap()]);
    fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cuspidal.json"));
}

#[test]
fn verify_names_the_failing_cell_when_checksums_are_regenerated() {
    let dir = std::env::temp_dir().join(format!("sp4coh-cli-cell-{}", std::process::id()));
    copy_data(&dir);
    let path = dir.join("euler_sym.json");
    let text = fs::read_to_string(&path).unwrap().replacen("[2,", "[3,", 1);
    fs::write(&path, &text).unwrap();
    let manifest_path = dir.join("manifest.json");
    let mut manifest: serde_json::Value = serde_json::from_str(&fs::read_to_string(&manifest_path).unwrap()).unwrap();
    manifest["files"]["euler_sym.json"] = serde_json::Value::String(hex_sha256(text.as_bytes()));
    fs::write(&manifest_path, manifest.to_string()).unwrap();
    let out = sp4coh(&["verify", "--n1-max", "20", "--fixture-dir", dir.to_str().unwrap()]);
    fs::remove_dir_all(&dir).unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("FAIL Sym^2k Euler characteristics"), "{report}");
    assert!(report.contains("k = 0"), "{report}");
}

fn hex_sha256(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn copy_data(dir: &PathBuf) {
    fs::create_dir_all(dir).unwrap();
    for entry in fs::read_dir(data_dir()).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dir.join(entry.file_name())).unwrap();
    }
}
