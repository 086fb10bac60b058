use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bernstein-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, body: &[u8]) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn generated(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    write(dir, name, &out.stdout)
}

fn analyze(path: &Path) -> Value {
    stdout_json(&run(&["analyze", path.to_str().unwrap()]))
}

#[test]
fn hardy_weinberg_document_analysis() {
    let dir = TempDir::new().unwrap();
    let r = analyze(&generated(&dir, "hw.json", &["hardy-weinberg"]));
    assert_eq!(r["bernstein"], true);
    assert_eq!(r["type"]["m"], 2);
    assert_eq!(r["type"]["delta"], 1);
    assert_eq!(r["dim_J"], 2);
    assert_eq!(r["classification"]["kind"], "ExtendedMendel");
    assert_eq!(r["main_theorem_status"], "holds");
    assert_eq!(r["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn quadrille_document_analysis() {
    let dir = TempDir::new().unwrap();
    let r = analyze(&generated(&dir, "q.json", &["quadrille"]));
    assert_eq!(r["r"], 4);
    assert_eq!(r["dim_J"], 3);
    assert_eq!(r["gene_structure"], "NonElementary");
    assert_eq!(r["classification"]["kind"], "ExtendedQuadrille");
    assert_eq!(r["classification"]["nu"], 2);
    assert_eq!(r["classification"]["nu_bar"], 2);
    assert_eq!(r["classification"]["cells"].as_array().unwrap().len(), 4);
}

#[test]
fn classified_reports_are_regular_and_normal() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [
        ("m.json", vec!["mendel"]),
        ("u.json", vec!["unit", "--n", "3"]),
        ("c.json", vec!["constant", "--c", "1/2,1/2"]),
        ("eq.json", vec!["eqalgebra", "--nu", "2", "--nubar", "3"]),
    ] {
        let r = analyze(&generated(&dir, name, &args));
        let kind = r["classification"]["kind"].as_str().unwrap();
        if kind != "Unclassified" && kind != "Constant" {
            assert_eq!(r["regular"]["regular"], true, "{name}");
            assert_eq!(r["normality"]["normal"], true, "{name}");
        }
    }
}

#[test]
fn stochasticity_violation_names_the_pair() {
    let dir = TempDir::new().unwrap();
    let doc = br#"{"n": 2, "scalar": "rational", "coefficients": [
        {"i": 1, "k": 1, "j": 1, "value": "1"},
        {"i": 1, "k": 2, "j": 1, "value": "3/4"},
        {"i": 2, "k": 2, "j": 2, "value": "1"}]}"#;
    let out = run(&["analyze", write(&dir, "bad.json", doc).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("(1, 2)") && err.contains("3/4"), "{err}");
}

#[test]
fn schema_violations_exit_2() {
    let dir = TempDir::new().unwrap();
    let cases: [&[u8]; 4] = [
        b"not json",
        br#"{"n": 1, "scalar": "rational"}"#,
        br#"{"n": 1, "scalar": "rational", "coefficients": [
            {"i": 1, "k": 1, "j": 1, "value": "1"}, {"i": 1, "k": 1, "j": 1, "value": "0"}]}"#,
        br#"{"n": 2, "scalar": "rational", "coefficients": [{"i": 3, "k": 1, "j": 1, "value": "1"}]}"#,
    ];
    for (x, doc) in cases.iter().enumerate() {
        let path = write(&dir, &format!("s{x}.json"), doc);
        let out = run(&["analyze", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "case {x}");
    }
}

#[test]
fn dimension_guard_exit_4() {
    let dir = TempDir::new().unwrap();
    let path = generated(&dir, "u.json", &["unit", "--n", "13"]);
    let out = run(&["faces", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let out = run(&["faces", path.to_str().unwrap(), "--max-n", "13"]);
    assert!(out.status.success());
    assert_eq!(
        run(&["faces", path.to_str().unwrap(), "--max-n", "21"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn missing_file_exit_1() {
    assert_eq!(
        run(&["analyze", "/nonexistent/operator.json"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn generate_mendel_matches_the_table() {
    let r = stdout_json(&run(&["generate", "mendel"]));
    assert_eq!(r["n"], 3);
    assert_eq!(r["scalar"], "rational");
    let entries: Vec<(u64, u64, u64, String)> = r["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            (
                c["i"].as_u64().unwrap(),
                c["k"].as_u64().unwrap(),
                c["j"].as_u64().unwrap(),
                c["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let expected: Vec<(u64, u64, u64, &str)> = vec![
        (1, 1, 1, "1"),
        (1, 2, 3, "1"),
        (1, 3, 1, "1/2"),
        (1, 3, 3, "1/2"),
        (2, 2, 2, "1"),
        (2, 3, 2, "1/2"),
        (2, 3, 3, "1/2"),
        (3, 3, 1, "1/4"),
        (3, 3, 2, "1/4"),
        (3, 3, 3, "1/2"),
    ];
    let expected: Vec<(u64, u64, u64, String)> = expected
        .into_iter()
        .map(|(i, k, j, v)| (i, k, j, v.to_string()))
        .collect();
    assert_eq!(entries, expected);
}

#[test]
fn generated_emalgebra_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = generated(
        &dir,
        "e.json",
        &[
            "emalgebra",
            "--m",
            "2",
            "--pairs",
            "1,2",
            "--alpha",
            "1/4",
            "--beta",
            "1/4",
        ],
    );
    let r = analyze(&path);
    assert_eq!(r["n"], 3);
    let c = &r["classification"];
    assert_eq!(c["kind"], "ExtendedMendel");
    assert_eq!(c["alpha"][0], "1/4");
    assert_eq!(c["beta"][0], "1/4");
    assert_eq!(c["pairs"][0][0], 1);
    assert_eq!(c["pairs"][0][1], 2);
}

#[test]
fn invalid_generator_parameters_exit_2() {
    for args in [
        vec![
            "generate",
            "emalgebra",
            "--m",
            "2",
            "--pairs",
            "1,2",
            "--alpha",
            "1/2",
            "--beta",
            "1/2",
        ],
        vec![
            "generate",
            "emalgebra",
            "--m",
            "3",
            "--pairs",
            "1,2;1,2",
            "--alpha",
            "0,0",
            "--beta",
            "0,0",
        ],
        vec!["generate", "eqalgebra", "--nu", "1", "--nubar", "3"],
        vec!["generate", "unit"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = run(&[
        "generate",
        "emalgebra",
        "--m",
        "2",
        "--pairs",
        "1,2",
        "--alpha",
        "1/2",
        "--beta",
        "1/2",
    ]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("gamma_1"));
}

#[test]
fn eqalgebra_two_by_three_has_type_four_two() {
    let dir = TempDir::new().unwrap();
    let r = analyze(&generated(
        &dir,
        "eq.json",
        &["eqalgebra", "--nu", "2", "--nubar", "3"],
    ));
    assert_eq!(r["n"], 6);
    assert_eq!(r["type"]["m"], 4);
    assert_eq!(r["type"]["delta"], 2);
}

fn faces_of(path: &Path) -> Value {
    stdout_json(&run(&["faces", path.to_str().unwrap()]))
}

#[test]
fn quadrille_faces() {
    let dir = TempDir::new().unwrap();
    let r = faces_of(&generated(&dir, "q.json", &["quadrille"]));
    let faces = r["faces"].as_array().unwrap();
    let constant_singletons = faces
        .iter()
        .filter(|f| f["constant"] == true && f["vertices"].as_array().unwrap().len() == 1)
        .count();
    assert_eq!(constant_singletons, 4);
    assert_eq!(faces.iter().filter(|f| f["cell_dim"] == 2).count(), 1);
    assert_eq!(r["summary"]["cell_dims"]["02"], 1);
}

#[test]
fn mendel_faces() {
    let dir = TempDir::new().unwrap();
    let r = faces_of(&generated(&dir, "m.json", &["mendel"]));
    let constant: Vec<&Value> = r["faces"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|f| f["constant"] == true)
        .map(|f| &f["vertices"])
        .collect();
    assert_eq!(
        constant,
        vec![&serde_json::json!([1]), &serde_json::json!([2])]
    );
    assert_eq!(r["summary"]["cell_dims"]["00"], 2);
}

#[test]
fn unit_faces_are_all_subsets() {
    let dir = TempDir::new().unwrap();
    let r = faces_of(&generated(&dir, "u.json", &["unit", "--n", "3"]));
    let faces = r["faces"].as_array().unwrap();
    assert_eq!(faces.len(), 7);
    assert!(faces.iter().all(|f| f["essential"] == true));
}

#[test]
fn identity_suite_passes_on_families() {
    let dir = TempDir::new().unwrap();
    for (name, args) in [("q.json", vec!["quadrille"]), ("m.json", vec!["mendel"])] {
        let path = generated(&dir, name, &args);
        let out = run(&[
            "check-identities",
            path.to_str().unwrap(),
            "--samples",
            "10",
        ]);
        let r = stdout_json(&out);
        assert_eq!(r["passed"], true);
        let names: Vec<&str> = r["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap())
            .collect();
        assert!(names.contains(&"basis_idempotents/four_term"));
        assert!(names.contains(&"weight_multiplicative"));
        let four = r["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == "basis_idempotents/four_term")
            .unwrap();
        assert!(four["evaluations"].as_u64().unwrap() > 0);
    }
}

#[test]
fn identity_suite_skips_non_bernstein_input() {
    let dir = TempDir::new().unwrap();
    let doc = br#"{"n": 2, "scalar": "rational", "coefficients": [
        {"i": 1, "k": 1, "j": 1, "value": "1"},
        {"i": 1, "k": 2, "j": 2, "value": "1"},
        {"i": 2, "k": 2, "j": 2, "value": "1"}]}"#;
    let path = write(&dir, "nb.json", doc);
    let r = stdout_json(&run(&["check-identities", path.to_str().unwrap()]));
    assert_eq!(r["bernstein"], false);
    assert_eq!(r["notices"].as_array().unwrap().len(), 1);
    assert_eq!(r["checks"][0]["name"], "weight_multiplicative");
    assert_eq!(r["checks"][0]["evaluations"], 50);
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let path = generated(&dir, "eq.json", &["eqalgebra", "--nu", "2", "--nubar", "3"]);
    let p = path.to_str().unwrap();
    for cmd in ["analyze", "faces", "classify", "check-identities"] {
        let a = run(&[cmd, p, "--samples", "5"]);
        let b = bin()
            .args([cmd, p, "--samples", "5"])
            .env("BERNSTEIN_LAB_THREADS", "1")
            .output()
            .unwrap();
        assert!(a.status.success(), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn generated_documents_reserialize_identically() {
    for args in [
        vec!["generate", "quadrille"],
        vec!["generate", "constant", "--c", "1/3,2/3"],
    ] {
        let out = run(&args);
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let mut again = serde_json::to_string_pretty(&v).unwrap();
        again.push('\n');
        assert_eq!(again.as_bytes(), out.stdout.as_slice());
    }
}

#[test]
fn float_documents_are_snapped() {
    let dir = TempDir::new().unwrap();
    let doc = br#"{"n": 2, "scalar": "float", "coefficients": [
        {"i": 1, "k": 1, "j": 1, "value": 0.3333333333},
        {"i": 1, "k": 1, "j": 2, "value": "0.6666666667"},
        {"i": 1, "k": 2, "j": 1, "value": 0.3333333333},
        {"i": 1, "k": 2, "j": 2, "value": 0.6666666667},
        {"i": 2, "k": 2, "j": 1, "value": 0.3333333333},
        {"i": 2, "k": 2, "j": 2, "value": 0.6666666667}]}"#;
    let r = analyze(&write(&dir, "f.json", doc));
    assert_eq!(r["classification"]["kind"], "Constant");
    assert_eq!(
        r["classification"]["value"],
        serde_json::json!(["1/3", "2/3"])
    );
}

#[test]
fn out_flag_and_text_format() {
    let dir = TempDir::new().unwrap();
    let path = generated(&dir, "m.json", &["mendel"]);
    let target = dir.path().join("report.txt");
    let out = run(&[
        "classify",
        path.to_str().unwrap(),
        "--format",
        "text",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(target).unwrap();
    assert!(
        text.contains("classification.kind: ExtendedMendel"),
        "{text}"
    );
}

#[test]
fn sweeps() {
    let empty = stdout_json(&run(&["sweep", "--m", "", "--nu", ""]));
    assert_eq!(empty["points"], 0);
    let eq = stdout_json(&run(&["sweep", "eqalgebra"]));
    assert_eq!(eq["points"], 9);
    assert_eq!(eq["passed"], 9);
    let em = stdout_json(&run(&["sweep", "emalgebra", "--m", "2"]));
    assert_eq!(em["points"], 122);
    assert_eq!(em["passed"], 122);
    assert!(em["anomalies"].as_array().unwrap().is_empty());
}
