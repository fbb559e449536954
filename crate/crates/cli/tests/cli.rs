//! End-to-end tests of the binary: exit codes, report shape, lockfile
//! round trip, export formats and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn gq24(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gq24"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_gq22_veldkamp_reports_dimension_five() {
    let out = gq24(&["verify", "--suite", "veldkamp", "--geometry", "gq22"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["geometry"], "gq22");
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    let rank = checks
        .iter()
        .find(|c| c["check"] == "veldkamp.gq22_rank")
        .expect("rank check present");
    assert_eq!(rank["expected"], 5);
    assert_eq!(rank["actual"], 5);
    assert_eq!(rank["pass"], true);
}

#[test]
fn verify_hyperplanes_table() {
    let out = gq24(&["verify", "--suite", "hyperplanes"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    for (name, value) in [
        ("hyperplanes.gq24_total", 63),
        ("hyperplanes.gq24_perps", 27),
        ("hyperplanes.gq24_doilies", 36),
        ("hyperplanes.gq24_ovoids", 0),
    ] {
        let check = checks.iter().find(|c| c["check"] == name).unwrap();
        assert_eq!(check["actual"], value, "{name}");
        assert_eq!(check["pass"], true, "{name}");
    }
}

#[test]
fn verify_steiner_design_parameters() {
    let out = gq24(&["verify", "--suite", "steiner", "--seed-point", "3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["seed_point"], 3);
    let checks = report["checks"].as_array().unwrap();
    for (name, value) in [
        ("steiner.design_points", 28),
        ("steiner.design_block_size", 12),
        ("steiner.design_lambda", 11),
        ("steiner.isotropic_lines", 315),
    ] {
        let check = checks.iter().find(|c| c["check"] == name).unwrap();
        assert_eq!(check["actual"], value, "{name}");
    }
}

#[test]
fn lockfile_roundtrip() {
    let dir = std::env::temp_dir();
    let lock: PathBuf = dir.join(format!("gq24-test-{}.lock", std::process::id()));
    let out = gq24(&[
        "verify",
        "--suite",
        "models",
        "--write-lock",
        lock.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let frozen: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&lock).unwrap()).unwrap();
    assert_eq!(frozen["models.w3_points"], 40);

    // a second run checked against the frozen baselines still passes
    let out = gq24(&[
        "verify",
        "--suite",
        "models",
        "--lock",
        lock.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let w3 = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "models.w3_points")
        .unwrap();
    assert_eq!(w3["expected"], 40);
    std::fs::remove_file(&lock).ok();
}

#[test]
fn reports_are_byte_identical() {
    let a = gq24(&["verify", "--suite", "graphs"]);
    let b = gq24(&["verify", "--suite", "graphs"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_gray_graph6_is_a_54_vertex_line() {
    let out = gq24(&["export", "gray", "--format", "graph6"]);
    assert!(out.status.success());
    let line = stdout(&out);
    let line = line.trim_end();
    // graph6 size byte: n + 63 = 117 = 'u'
    assert_eq!(line.as_bytes()[0], 54 + 63);
    // 54 vertices need 1 + ceil(54*53/2 / 6) bytes
    assert_eq!(line.len(), 1 + (54usize * 53 / 2).div_ceil(6));
    let again = gq24(&["export", "gray", "--format", "graph6"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn export_veldkamp_lines_has_651_typed_records() {
    let out = gq24(&["export", "veldkamp-lines", "--format", "json"]);
    assert!(out.status.success());
    let records: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = records.as_array().unwrap();
    assert_eq!(records.len(), 651);
    let count = |t: &str| {
        records
            .iter()
            .filter(|r| r["line_type"] == t)
            .count()
    };
    assert_eq!(count("I"), 45);
    assert_eq!(count("II"), 216);
    assert_eq!(count("III"), 270);
    assert_eq!(count("IV"), 120);
}

#[test]
fn export_clebsch_dot_has_16_vertices() {
    let out = gq24(&["export", "clebsch", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph clebsch {"));
    assert_eq!(text.matches(" -- ").count(), 40); // 16 * 5 / 2 edges
}

#[test]
fn usage_errors_exit_2() {
    let out = gq24(&["export", "veldkamp-lines", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gq24(&["export", "no-such-thing"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gq24(&["verify", "--suite", "steiner", "--seed-point", "28"]);
    assert_eq!(out.status.code(), Some(2));
}
