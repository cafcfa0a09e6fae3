use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn coxq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxq")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn mutate_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = dir.path().join("a2.json");
    let q = coxeter_quotients::quiver::Quiver::from_arrows(2, &[(0, 1, 1)]).unwrap();
    fs::write(&a2, q.to_json() + "\n").unwrap();
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    let o = coxq(&["mutate", a2.to_str().unwrap(), "1", "--out", once.to_str().unwrap()]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(&once).unwrap()).unwrap();
    assert_eq!(v["arrows"], serde_json::json!([[1, 0, 1]]));
    coxq(&["mutate", once.to_str().unwrap(), "1", "--out", twice.to_str().unwrap()]);
    assert_eq!(fs::read(&a2).unwrap(), fs::read(&twice).unwrap());
}

#[test]
fn invalid_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"n": 2, "arrows": [[0, 0, 1]]}"#).unwrap();
    assert_eq!(coxq(&["mutate", bad.to_str().unwrap(), "0"]).status.code(), Some(3));
    let q = dir.path().join("q.json");
    fs::write(&q, r#"{"n": 2, "arrows": [[0, 1, 1]]}"#).unwrap();
    assert_eq!(coxq(&["mutate", q.to_str().unwrap(), "5"]).status.code(), Some(3));
}

#[test]
fn double_arrow_quiver_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("kronecker.json");
    fs::write(&q, r#"{"n": 2, "arrows": [[0, 1, 2]]}"#).unwrap();
    let o = coxq(&["present", q.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multiple arrow"));
}

#[test]
fn present_annulus_matches_shipped_text() {
    let o = coxq(&["present", data("punctured_annulus.json").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("gens 5\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("rel")).count(), 11);
    assert!(text.lines().any(|l| l == "rel 1 4 3 5 3 4 1 4 3 5 3 4"));
}

#[test]
fn present_tetrahedron_in_json() {
    let o = coxq(&["--format", "json", "present", data("tetrahedron.json").to_str().unwrap()]);
    let v = json(&o);
    assert_eq!(v["generators"], 6);
    let r3 = v["relators"].as_array().unwrap().iter().filter(|r| r["kind"] == "R3").count();
    assert_eq!(r3, 8);
}

#[test]
fn flipgraph_on_four_punctured_sphere() {
    let o = coxq(&["--format", "json", "flipgraph", data("tetrahedron.json").to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["invariants_equal"], true);
    assert_eq!(v["graph"]["nodes"].as_array().unwrap().len(), 2);
    let o = coxq(&["--budget-nodes", "1", "flipgraph", data("tetrahedron.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rigid_fan_has_singleton_flip_graph() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("fan.json");
    let fan = coxeter_quotients::surface::PolygonGluing::opposite(2).realize();
    fs::write(&tri, fan.to_json()).unwrap();
    let o = coxq(&["--format", "json", "--budget-cosets", "2000", "flipgraph", tri.to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["graph"]["nodes"].as_array().unwrap().len(), 1);
    assert!(v["graph"]["edges"].as_array().unwrap().is_empty());
}

#[test]
fn example_d4_passes_and_validates() {
    let o = coxq(&["--format", "json", "example-d4"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["kernel_element"]["trivial"], true);
    let schema: Value = serde_json::from_str(include_str!("../schema/example-d4.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    assert!(validator.is_valid(&v));

    let bad = coxq(&["--format", "json", "example-d4", "--corrupt"]);
    assert_eq!(bad.status.code(), Some(1));
    let b = json(&bad);
    assert!(validator.is_valid(&b));
    let failing: Vec<&Value> = b["relators"].as_array().unwrap().iter().filter(|r| r["trivial"] == false).collect();
    assert!(!failing.is_empty());
    let text = stdout(&coxq(&["example-d4", "--corrupt"]));
    assert!(text.lines().any(|l| l.starts_with("FAIL relator 11 R3")));
}

#[test]
fn counterexample_default_and_single_gluing() {
    let o = coxq(&["--format", "json", "counterexample"]);
    assert!(o.status.success());
    let v = json(&o);
    assert!(v["classes"].as_array().unwrap().len() >= 2);
    assert_eq!(v["all_rigid"], true);

    let hex = coxq(&["counterexample", "--genus", "1"]);
    assert!(hex.status.success());
    assert!(stdout(&hex).contains("1 inequivalent"));

    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    fs::write(&g, r#"{"g": 2, "pairing": [[0,3],[1,4],[2,7],[5,8],[6,9]]}"#).unwrap();
    let o = coxq(&["--format", "json", "counterexample", "--gluing", g.to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["equivalent_to_opposite"], false);
    assert!(v["loop_free_flips"].as_array().unwrap().is_empty());
}

#[test]
fn reglue_and_group_commands() {
    let o = coxq(&["reglue", "--genus", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "genus 1: 1 of 1 gluings reach the opposite pairing");

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("a2.txt");
    fs::write(&p, "gens 2\nrel 1 2 1 2 1 2\n").unwrap();
    let o = coxq(&["todd-coxeter", p.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "index 6");
    let o = coxq(&["todd-coxeter", p.to_str().unwrap(), "--subgroup", "1"]);
    assert_eq!(stdout(&o).trim(), "index 3");
    let o = coxq(&["--format", "json", "homcount", p.to_str().unwrap(), "--target", "S3"]);
    let v = json(&o);
    assert_eq!(v["f2_rank"], 1);
    assert!(v["hom_counts"]["S3"].as_u64().unwrap() > 0);
    let o = coxq(&["--budget-cosets", "2", "todd-coxeter", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn associate_and_flip() {
    let o = coxq(&["--format", "json", "flip", data("tetrahedron.json").to_str().unwrap(), "0"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["arc_map"].as_array().unwrap().len(), 6);
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    fs::write(&t, serde_json::to_string(&v["triangulation"]).unwrap()).unwrap();
    let o = coxq(&["--format", "json", "associate", t.to_str().unwrap()]);
    assert!(o.status.success());
    let a = json(&o);
    assert_eq!(a["signature"]["g"], 0);
    let flipped = coxeter_quotients::data::tetrahedron().flip(0).unwrap();
    let opts = coxeter_quotients::surface::AssociateOptions::default();
    let (lib, rec) = coxeter_quotients::surface::associate_triangulation(&flipped, opts);
    assert_eq!(a["signature"]["p"], lib.surface_signature().p);
    assert_eq!(a["record"]["steps"].as_array().unwrap().len(), rec.steps.len());
}
