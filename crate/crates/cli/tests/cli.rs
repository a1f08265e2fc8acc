use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmap")).args(args).output().expect("runs")
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "structured"]);
    let o = qmap(&a);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stderr)));
    (o.status.code().unwrap(), v)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(qmap(&["verify", "bogus"]).status.code(), Some(2));
    let o = qmap(&["verify", "queer"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 3);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_all_is_byte_identical() {
    let a = qmap(&["verify", "all", "--seed", "7", "--format", "structured"]);
    let b = qmap(&["verify", "all", "--seed", "7", "--format", "structured"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failed"], 0);
}

#[test]
fn classify_two_point() {
    let (code, v) = structured(&["classify", "--algebra", "two_point", "--catalog", "trivial,adjoint"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    let dims: Vec<u64> = rows.iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 16, 16, 256]);
    assert!(rows.iter().all(|r| r["irreducible"] == true));
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn classify_twisted_and_refusals() {
    let dir = tempfile::tempdir().unwrap();
    let flip =
        write(dir.path(), "flip.json", r#"{"generators": [{"order": 2, "on_a": {"scale": "-1"}, "on_g": "sign_conjugation"}]}"#);
    let (code, v) = structured(&["classify", "--algebra", "four_point", "--group", &flip]);
    assert_eq!(code, 0);
    assert_eq!(v["twisted"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["invariance"] == true && r["restriction"] == true));

    let fixed =
        write(dir.path(), "fixed.json", r#"{"generators": [{"order": 2, "on_a": "identity", "on_g": "sign_conjugation"}]}"#);
    let o = qmap(&["classify", "--algebra", "four_point", "--group", &fixed]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("freeness violated at"));

    let bad =
        write(dir.path(), "bad.json", "{\n  \"type\": \"poly_quotient\",\n  \"modulus\": [-1, 0, 1],\n  \"roots\": [2, -1]\n}\n");
    let o = qmap(&["classify", "--algebra", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn dims_tables() {
    let dir = tempfile::tempdir().unwrap();
    let adj = write(dir.path(), "adj.json", r#"{"n": 2, "triples": [["h1", "1", "1"], ["h2", "1", "1"]]}"#);
    let (code, v) = structured(&["dims", "--psi", &adj, "--depth", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 16);
    let zero = write(dir.path(), "zero.json", r#"{"n": 2, "triples": []}"#);
    let (_, v) = structured(&["dims", "--psi", &zero]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["total"], 1);
    let o = qmap(&["dims", "--psi", &zero, "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_and_out() {
    let (code, v) = structured(&["decompose", "Q(1)", "Q(1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["steps"][0]["split"], true);
    assert_eq!(v["steps"][0]["hat_dim"], 2);
    assert_eq!(v["steps"][0]["summands_isomorphic"], true);
    let (_, v) = structured(&["decompose", "H(1,2,4)", "H(2,1,1)", "--n", "3"]);
    assert_eq!((v["steps"][0]["full_dim"].as_u64(), v["steps"][0]["hat_dim"].as_u64()), (Some(16), Some(8)));
    assert_eq!(qmap(&["decompose", "Q(1)", "nothing"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = qmap(&["decompose", "Q(1)", "M(1|1)", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(out).unwrap().contains("Q(1)⊗̂M(1|1)"));
}
