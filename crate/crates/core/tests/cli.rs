use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_planar-euler"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).expect("stdout is JSON")
}

#[test]
fn validate_exit_codes() {
    for ok in ["triangle.pg", "c4.pg", "cube.pg", "grid_2x2.pg", "k4.pg", "bowtie.pg"] {
        let (code, out, _) = run(&["validate", fixture(ok).to_str().unwrap()]);
        assert_eq!(code, 0, "{ok}");
        assert_eq!(json(&out)["graph"]["genus"], 0);
    }
    for bad in ["duplicate.pg", "k4_torus.pg", "syntax.pg", "missing.pg"] {
        let (code, _, err) = run(&["validate", fixture(bad).to_str().unwrap()]);
        assert_eq!(code, 1, "{bad}");
        assert!(err.starts_with("error:"));
    }
    let (_, _, err) = run(&["validate", fixture("duplicate.pg").to_str().unwrap()]);
    assert!(err.contains("line 3"));
}

#[test]
fn cube_printed_variant_exits_two() {
    let cube = fixture("cube.pg");
    let (code, out, _) = run(&[
        "check",
        cube.to_str().unwrap(),
        "--relation",
        "GAMMA2",
        "--variant",
        "printed",
    ]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["relations"][0]["residual"], -4);

    let (code, out, _) = run(&["check", cube.to_str().unwrap(), "--relation", "GAMMA2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["relations"][0]["residual"], 0);

    let (code, _, _) = run(&["check", cube.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn check_rejects_unknown_relation() {
    let (code, _, _) = run(&["check", fixture("cube.pg").to_str().unwrap(), "--relation", "EQ99"]);
    assert_eq!(code, 64);
}

#[test]
fn classify_grid_is_not_gamma2() {
    let (code, out, _) = run(&["classify", fixture("grid_2x2.pg").to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["classes"]["gamma1"], true);
    assert_eq!(v["classes"]["gamma2"], false);
    assert!(v["gamma2_scan"]["row_visits"].as_u64().unwrap() <= 9);
}

#[test]
fn census_of_bowtie_gates_incidence() {
    let (code, out, _) = run(&["census", fixture("bowtie.pg").to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    let gated = v["counting"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["identity"] == "FACE_INCIDENCE")
        .unwrap();
    assert_eq!(gated["applicable"], false);
}

#[test]
fn report_lists_every_relation_once() {
    for f in ["cube.pg", "c4.pg", "bowtie.pg", "k4.pg"] {
        let (code, out, _) = run(&["report", fixture(f).to_str().unwrap()]);
        assert_eq!(code, 0);
        let v = json(&out);
        assert_eq!(v["schema"], "planar-euler.report/1");
        let names: Vec<_> = v["relations"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["relation"].as_str().unwrap().to_string())
            .collect();
        assert_eq!(
            names,
            ["MASTER", "D4_GENERAL", "GAMMA2_CORRECTED", "GAMMA2_PRINTED", "FACE_SYSTEM", "F3_PREDICTION"]
        );
    }
}

#[test]
fn generate_round_trips_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prism.pg");
    let (code, _, _) = run(&["generate", "--family", "prism", "--params", "6", "-o", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["graph"]["vertices"], 12);
}

#[test]
fn enumerate_streams_k4() {
    let (code, out, _) = run(&["enumerate", "--max-n", "4", "--gonality", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().map(json).collect();
    assert!(lines
        .iter()
        .any(|l| l["vertices"] == 4 && l["edges"] == 6));
    assert!(lines.iter().all(|l| l.get("summary").is_some()
        || l["violations"].as_array().unwrap().is_empty()));
}

#[test]
fn fuzz_stream() {
    let (code, out, _) = run(&["fuzz", "--family", "k4", "--seed", "7", "--ops", "10"]);
    assert_eq!(code, 0);
    let v = json(out.lines().next().unwrap());
    assert_eq!(v["vertices"], 14);
    let (code, _, _) = run(&["fuzz", "--family", "dodecahedron", "--seed", "1", "--ops", "1"]);
    assert_eq!(code, 64);
}
