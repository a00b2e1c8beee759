use std::path::{Path, PathBuf};
use std::process::Command;

use toric_tensegrity::cli::{parse, run, to_json, InputDocument};

const FIXTURES: [&str; 5] = ["example_3_5a", "example_3_5b", "example_2_2", "triangle", "crossing"];

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["tensegrity"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("tensegrity-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

/// Analyze output of every fixture is pinned; `BLESS_GOLDEN=1` rewrites the files.
#[test]
fn analyze_matches_golden_output() {
    let bless = std::env::var_os("BLESS_GOLDEN").is_some();
    for name in FIXTURES {
        let (_, out, _) = cli(&["analyze", &fixture(name), "--table"]);
        let path = golden_path(name);
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, expected, "golden mismatch for {name}");
    }
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(cli(&["analyze", &fixture("example_3_5a")]).0, 0);
    assert_eq!(cli(&["analyze", &fixture("example_3_5b")]).0, 0);
    assert_eq!(cli(&["analyze", &fixture("example_2_2")]).0, 0);
    assert_eq!(cli(&["analyze", &fixture("crossing")]).0, 3);
    assert_eq!(cli(&["analyze", "/nonexistent/input.json"]).0, 2);
    assert_eq!(cli(&["analyze"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
}

#[test]
fn route_selection() {
    for route in ["a", "b", "both"] {
        let (code, out, _) = cli(&["analyze", &fixture("example_3_5a"), "--route", route]);
        assert_eq!(code, 0, "route {route}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim_stress_space"], 1, "route {route}");
    }
    for order in ["lex", "revlex"] {
        let (code, out, _) = cli(&["analyze", &fixture("example_3_5b"), "--triangulation-order", order]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dim_stress_space"], 0);
        assert_eq!(v["routes_agree"], true);
    }
}

#[test]
fn parse_errors_report_position() {
    let path = scratch("float.json", r#"{"type": "planar", "vertices": [{"id": "a", "xy": [1.5, 0]}], "edges": []}"#);
    let (code, _, err) = cli(&["check", &path]);
    assert_eq!(code, 2);
    assert!(err.contains("vertices[0].xy[0]"), "{err}");
    assert!(err.contains("line 1"), "{err}");

    let path = scratch("tag.json", r#"{"type": "spherical"}"#);
    assert_eq!(cli(&["analyze", &path]).0, 2);
}

#[test]
fn fan_of_triangle() {
    let (code, out, _) = cli(&["fan", &fixture("triangle")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rays"].as_array().unwrap().len(), 4);
    assert_eq!(v["max_cones"].as_array().unwrap().len(), 4);
    assert_eq!(v["walls"].as_array().unwrap().len(), 6);
    assert_eq!(v["rays"][0]["label"], "assistant");
}

#[test]
fn fan_and_table_reject_general_input() {
    assert_eq!(cli(&["fan", &fixture("example_2_2")]).0, 2);
    assert_eq!(cli(&["table", &fixture("example_2_2")]).0, 2);
}

#[test]
fn table_of_example_a() {
    let (code, out, _) = cli(&["table", &fixture("example_3_5a")]);
    assert_eq!(code, 0);
    assert!(out.contains("s041\t21"), "{out}");
    let row = out.lines().find(|l| l.starts_with("D5\t")).expect("row D5");
    assert!(row.split('\t').any(|c| c == "-7/15"), "{row}");

    let (code, md, _) = cli(&["table", &fixture("example_3_5a"), "--format", "md"]);
    assert_eq!(code, 0);
    assert!(md.contains("| D0 | 1/42 |"), "{md}");
}

#[test]
fn check_reports_crossing() {
    let (code, out, _) = cli(&["check", &fixture("crossing")]);
    assert_eq!(code, 3);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(cli(&["check", &fixture("triangle")]).0, 0);
}

#[test]
fn text_format() {
    let (code, out, _) = cli(&["analyze", &fixture("example_3_5b"), "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("no tensegrity"), "{out}");
}

#[test]
fn documents_round_trip() {
    for name in FIXTURES {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let doc = parse(&text).unwrap();
        let again = parse(&to_json(&doc)).unwrap();
        assert_eq!(to_json(&doc), to_json(&again), "{name}");
        let framework_trip = match &doc {
            InputDocument::Planar(p) => {
                let fw = p.to_framework().unwrap();
                to_json(&InputDocument::Planar(toric_tensegrity::cli::PlanarDoc::from_framework(&fw)))
            }
            InputDocument::General(g) => {
                let fw = g.to_framework().unwrap();
                to_json(&InputDocument::General(toric_tensegrity::cli::GeneralDoc::from_framework(&fw)))
            }
        };
        assert_eq!(parse(&framework_trip).map(|d| to_json(&d)).unwrap(), to_json(&doc), "{name}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tensegrity");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["analyze", &fixture("example_3_5a")]), Some(0));
    assert_eq!(status(&["check", &fixture("crossing")]), Some(3));
    assert_eq!(status(&["analyze", "/nonexistent/input.json"]), Some(2));
    assert_eq!(status(&["--help"]), Some(0));
}
