use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn grcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grcat"))
        .args(args)
        .env_remove("GRCAT_SIZE_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn final_example() -> String {
    fixture("final-example.grcat.json").display().to_string()
}

const GOLDEN_TABLE: &str = "\
object  length  GR measure
P1m1    1       {1}
S3      1       {1}
S2      1       {1}
I2m1    2       {1, 2}
P2      2       {1, 2}
S1m1    3       {1, 2, 3}
GR chain: {1} < {1, 2} < {1, 2, 3}
";

#[test]
fn measure_table_is_golden() {
    let o = grcat(&["measure", &final_example()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), GOLDEN_TABLE);
    assert!(stderr(&o).is_empty());
}

#[test]
fn measure_single_object() {
    let o = grcat(&["measure", &final_example(), "--object", "S1m1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{1, 2, 3}\n");
    let o = grcat(&[
        "--format",
        "json",
        "measure",
        &final_example(),
        "--object",
        "S1m1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["measure"], "{1,2,3}");
}

#[test]
fn measure_unknown_object_is_a_domain_failure() {
    let o = grcat(&["measure", &final_example(), "--object", "Q9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Q9"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn measure_json_has_the_same_content() {
    let o = grcat(&["--format", "json", "measure", &final_example()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<(String, u64, String)> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["object"].as_str().unwrap().to_string(),
                r["length"].as_u64().unwrap(),
                r["measure"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(rows[5], ("S1m1".to_string(), 3, "{1,2,3}".to_string()));
    assert_eq!(v["gr_chain"], serde_json::json!(["{1}", "{1,2}", "{1,2,3}"]));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(grcat(&["validate", &final_example()]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grcat.json");
    let text = std::fs::read_to_string(fixture("final-example.grcat.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // a stable conflation whose lengths no longer add up
    v["conflations"][0]["b"] = serde_json::json!(["S3"]);
    v["conflations"][0]["stable"] = serde_json::json!(true);
    std::fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let o = grcat(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("stability-arithmetic"));

    let o = grcat(&["validate", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(
        grcat(&["validate", garbage.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn check_all_passes_on_bundled_fixtures() {
    for name in ["final-example", "db-window-1", "db-window-2", "db-window-3"] {
        let path = fixture(&format!("{name}.grcat.json"));
        let o = grcat(&["check", path.to_str().unwrap(), "--suite", "all"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
    }
}

#[test]
fn corrupted_spec_fails_gr_axioms_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupted.grcat.json");
    let text = std::fs::read_to_string(fixture("final-example.grcat.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // make the subobject relation cyclic
    v["inflations"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!({"sub": "S1m1", "target": ["I2m1"]}));
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let o = grcat(&["check", path.to_str().unwrap(), "--suite", "gr-axioms"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("poset-consistency"));
    assert!(out.contains("witness [I2m1, S1m1]"), "{out}");
}

#[test]
fn ext_bound_is_skipped_without_ext() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("noext.grcat.json");
    let text = std::fs::read_to_string(fixture("final-example.grcat.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v.as_object_mut().unwrap().remove("ext");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let o = grcat(&["check", path.to_str().unwrap(), "--suite", "ext-bound"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped"));
    let o = grcat(&[
        "--format",
        "json",
        "check",
        path.to_str().unwrap(),
        "--suite",
        "ext-bound",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["checks"][0]["status"], "skipped");
}

#[test]
fn report_lines() {
    let o = grcat(&["report", &final_example()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# Brauer-Thrall I holds trivially"));
    assert!(out.contains("\n6 indecomposables; max length 3; GR chain of length 3; finite type\n"));

    let db = fixture("db-window-3.grcat.json");
    let out = stdout(&grcat(&["report", db.to_str().unwrap()]));
    assert!(out.contains("33 indecomposables; max length 3;"));
    assert!(out.contains("models an infinite-type category: yes"));
    assert!(out.contains("bounded-length signature: yes"));
}

#[test]
fn generate_fixture_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fe.grcat.json");
    let o = grcat(&[
        "generate",
        "fixture",
        "--name",
        "final-example",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 indecomposables"));
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(fixture("final-example.grcat.json")).unwrap()
    );
    for w in 1..=3 {
        let o = grcat(&[
            "generate",
            "fixture",
            "--name",
            "db-window",
            "--w",
            &w.to_string(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            o.stdout,
            std::fs::read(fixture(&format!("db-window-{w}.grcat.json"))).unwrap()
        );
    }
}

#[test]
fn generate_an_writes_a_spec() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a3.grcat.json");
    let o = grcat(&["generate", "an", "--n", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["indecomposables"].as_array().unwrap().len(), 6);
    assert_eq!(grcat(&["check", out.to_str().unwrap()]).status.code(), Some(0));
    let o = grcat(&["measure", out.to_str().unwrap()]);
    assert!(stdout(&o).ends_with("GR chain: {1} < {1, 2} < {1, 2, 3}\n"));
}

#[test]
fn guards() {
    let o = grcat(&["generate", "an", "--n", "99"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("n = 99"));
    assert!(stdout(&o).is_empty());

    let o = grcat(&["generate", "fixture", "--name", "nope"]);
    assert_eq!(o.status.code(), Some(1));

    let o = Command::new(env!("CARGO_BIN_EXE_grcat"))
        .args(["generate", "an", "--n", "7"])
        .env("GRCAT_SIZE_GUARD", "an=6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_grcat"))
        .args(["generate", "an", "--n", "2"])
        .env("GRCAT_SIZE_GUARD", "bogus=1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_payload() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("table.txt");
    let o = grcat(&["measure", &final_example(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out).unwrap(), GOLDEN_TABLE);
}
