use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, Output) {
    let out = Command::new(env!("CARGO_BIN_EXE_summand-lab")).args(args).output().expect("binary runs");
    let json: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), json, out)
}

fn map_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("summand-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn strs(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn toric_cubic_is_a_summand() {
    let (code, v, out) = run(&["analyze-cubic", "--poly", "x^3 - y*z*w"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["verdict"], "summand_toric3_a2");
    assert_eq!(strs(&v["payload"]["configuration"]), ["A2", "A2", "A2"]);
    assert_eq!(v["payload"]["mu_sum"], 6);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("analyze-cubic: ok"), "{err}");
}

#[test]
fn hyperbolic_invariants() {
    let (code, v, _) = run(&["invariants", "--weights", "[[1,-1]]", "--bound", "2", "--vars", "u,v"]);
    assert_eq!(code, 0);
    assert_eq!(strs(&v["payload"]["monomials"]), ["1", "u*v"]);
    assert_eq!(strs(&v["payload"]["minimal_generators"]), ["u*v"]);
}

#[test]
fn veronese_splits_to_bound() {
    let (code, v, _) = run(&["verify-splitting", "--map", "example:veronese2", "--splitting", "semigroup", "--bound", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["report"]["verdict"], "verified_to_bound");
    assert!(v["payload"]["report"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn map_file_with_action() {
    let path = map_file("uv.map", "# hyperbola\nsource: x\ntarget: u, v\nimages: u*v\naction: [[1,-1]]\n");
    let (code, v, _) = run(&["verify-splitting", "--map", path.to_str().unwrap(), "--splitting", "weight", "--bound", "4"]);
    assert_eq!(code, 0, "{v}");
    let (code, v, _) = run(&["kernel", "--map", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v["payload"]["kernel"].as_array().unwrap().is_empty());
    assert_eq!(v["payload"]["injective"], true);
}

#[test]
fn ill_defined_map_is_refuted_with_witness() {
    let path = map_file("bad.map", "source: x\nsource_ideal: x^2\ntarget: u\nimages: u\n");
    let (code, v, _) = run(&["verify-splitting", "--map", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["payload"]["witness"]["normal_form"], "u^2");
}

#[test]
fn unevaluable_elements_are_not_a_pass() {
    let path = map_file("uv2.map", "source: x\ntarget: u, v\nimages: u^2*v^2\naction: [[1,-1]]\n");
    let (code, v, _) = run(&["verify-splitting", "--map", path.to_str().unwrap(), "--splitting", "weight", "--bound", "4"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "incomplete_verification");
    assert_eq!(v["payload"]["report"]["verdict"], "incomplete");
}

#[test]
fn errors_have_codes() {
    let (code, v, _) = run(&["example", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "unknown_example");
    let (_, v, _) = run(&["groebner", "--ring", "x", "--ideal", "x^"]);
    assert_eq!(v["error"]["code"], "syntax_error");
    let (_, v, _) = run(&["verify-splitting", "--map", "example:segre", "--splitting", "bogus"]);
    assert_eq!(v["error"]["code"], "unknown_strategy");
    let (code, v, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "usage");
}

#[test]
fn groebner_orders() {
    let (_, v, _) = run(&["groebner", "--ring", "x,y", "--ideal", "x^2 - y; x*y", "--order", "lex"]);
    assert_eq!(strs(&v["payload"]["basis"]), ["x^2 - y", "x*y", "y^2"]);
    let (_, v, _) = run(&["groebner", "--ring", "t,x,y", "--ideal", "x - t^2", "--ideal", "y - t^3", "--order", "elim:1"]);
    let basis = strs(&v["payload"]["basis"]);
    assert!(basis.contains(&"x^3 - y^2") || basis.contains(&"-x^3 + y^2"), "{basis:?}");
}

#[test]
fn veronese_subcommand() {
    let (code, v, _) = run(&["veronese", "--vars", "2", "--degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["generators"].as_array().unwrap().len(), 3);
    assert_eq!(strs(&v["payload"]["relations"]), ["x1^2 - x0*x2"]);
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["example", "dp5cox"][..],
        &["analyze-cubic", "--poly", "x*y*z + x*y*w + x*z*w + y*z*w"][..],
        &["kernel", "--map", "example:xnd(3,3)"][..],
    ] {
        let (_, _, a) = run(args);
        let (_, _, b) = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
