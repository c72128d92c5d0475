use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn arrcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrcoh"))
        .args(args)
        .env_remove("ARRCOH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const RP2: &str = r#"{"m": 6, "facets": [[4,5,6],[3,5,6],[2,4,6],[2,3,5],[2,3,4],
    [1,4,5],[1,3,6],[1,3,4],[1,2,6],[1,2,5]]}"#;

fn ranks(cohomology: &Value) -> Vec<(i64, u64, Vec<u64>)> {
    cohomology
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            let torsion = g["torsion"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| t.as_u64().unwrap())
                .collect();
            (
                g["degree"].as_i64().unwrap(),
                g["rank"].as_u64().unwrap(),
                torsion,
            )
        })
        .collect()
}

#[test]
fn rp2_cohomology_table() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "rp2.json", RP2);
    let out = arrcoh(&[
        "cohomology",
        "--space",
        "diagonal",
        "--ambient",
        "complex",
        "--complex",
        &file,
        "--oracle",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&out);
    assert_eq!(
        ranks(&v["result"]["cohomology"]),
        vec![
            (0, 1, vec![]),
            (3, 10, vec![]),
            (4, 15, vec![]),
            (5, 6, vec![]),
            (7, 0, vec![2])
        ]
    );
    assert!(v["input_hash"].as_str().unwrap().starts_with("sha256:"));
    let oracle = v["result"]["oracle"].as_array().unwrap();
    assert_eq!(oracle.len(), 3);
    assert!(oracle.iter().all(|p| p["agrees"] == Value::Bool(true)));
}

#[test]
fn mf_of_square() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "square.json",
        r#"{"m": 4, "facets": [[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    let out = arrcoh(&["mf", "--complex", &file]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(
        v["result"]["missing_faces"],
        serde_json::json!([[1, 3], [2, 4]])
    );
    assert_eq!(v["result"]["common_vertex"], Value::Bool(false));
    let text = arrcoh(&["--format", "text", "mf", "--complex", &file]);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("missing faces: {1,3} {2,4}"));
    assert!(text.contains("common_vertex = false"));
}

#[test]
fn kequal_real_report() {
    let out = arrcoh(&["kequal", "--m", "5", "--k", "3", "--ambient", "real"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["s"], 31);
    assert_eq!(ranks(&v["result"]["gm"])[1], (1, 31, vec![]));
    assert_eq!(v["result"]["closed_form_matches_gm"], Value::Bool(true));
    assert_eq!(v["result"]["coordinate_matches_gm"], Value::Bool(true));
    assert!(v.get("input_hash").is_none());
}

#[test]
fn equivalent_inputs_share_a_hash() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"m": 4, "facets": [[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"{"m": 4, "missing_faces": [[2,4],[1,3]]}"#,
    );
    let ha = json(&arrcoh(&["mf", "--complex", &a]))["input_hash"].clone();
    let hb = json(&arrcoh(&["mf", "--complex", &b]))["input_hash"].clone();
    assert_eq!(ha, hb);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"m": 3, "facets": [[1, 2], [1]]}"#,
    );
    let garbage = write(dir.path(), "garbage.json", "{ nope");
    let square = write(
        dir.path(),
        "sq.json",
        r#"{"m": 4, "missing_faces": [[1,3],[2,4]]}"#,
    );
    assert_eq!(arrcoh(&["mf", "--complex", &bad]).status.code(), Some(2));
    assert_eq!(
        arrcoh(&["mf", "--complex", &garbage]).status.code(),
        Some(2)
    );
    assert_eq!(
        arrcoh(&["mf", "--complex", "/no/such/file"]).status.code(),
        Some(2)
    );
    assert_eq!(arrcoh(&["mf", "--bogus"]).status.code(), Some(2));
    assert_eq!(arrcoh(&["frobnicate"]).status.code(), Some(2));
    let domain = arrcoh(&["check-suspension", "--complex", &square]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("pairwise intersecting"));
    let real_product = arrcoh(&["product", "--ambient", "real", "--example", "square"]);
    assert_eq!(real_product.status.code(), Some(1));
    assert_eq!(
        arrcoh(&["kequal", "--m", "3", "--k", "5"]).status.code(),
        Some(1)
    );
    assert_eq!(arrcoh(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["product", "--example", "rp2"];
    let first = arrcoh(&args);
    assert!(first.status.success());
    let second = arrcoh(&args);
    let serial = arrcoh(&["--jobs", "1", "product", "--example", "rp2"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, serial.stdout);
    let v = json(&first);
    assert_eq!(
        v["result"]["nonzero_blocks"],
        serde_json::json!([[3, 4, 7]])
    );
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arrcoh"))
        .args(["--format", "text", "cohomology", "--complex", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"m": 2, "facets": [[1],[2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("H^0 = Z\nH^1 = Z\n"), "{text}");
}

#[test]
fn cache_directory_is_used() {
    let cache = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_arrcoh"))
            .args(["bbcg", "--example", "rp2"])
            .env("ARRCOH_CACHE_DIR", cache.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(cache.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, arrcoh(&["bbcg", "--example", "rp2"]).stdout);
}

#[test]
fn checks_and_wedges() {
    for cmd in ["check-cone", "check-suspension", "golod-check"] {
        let out = arrcoh(&[cmd, "--example", "rp2"]);
        assert!(out.status.success(), "{cmd}");
    }
    let v = json(&arrcoh(&["bbcg", "--example", "rp2-cone", "--oracle"]));
    assert_eq!(
        v["result"]["wedge"],
        "(S^7)^{∨10} ∨ (S^8)^{∨15} ∨ (S^9)^{∨6} ∨ Σ^9RP²"
    );
    let lattice = json(&arrcoh(&["lattice", "--example", "square"]));
    assert_eq!(
        lattice["result"]["lattice"]["strata"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
}
