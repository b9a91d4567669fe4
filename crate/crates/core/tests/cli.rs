//! End-to-end runs of the `jetgroups` binary.

mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use jetgroups::io::{jet_from_json, jet_to_json, tangent_from_json, tangent_to_json, to_text};
use jetgroups::{jet, Side};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_jetgroups"));
    c.env_remove("JETGROUPS_MAX_K");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, v: &Value) -> String {
    let p = scratch(name);
    std::fs::write(&p, to_text(v)).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn partitions_list_and_count() {
    let out = run(&["partitions", "list", "--n", "3"]);
    assert!(out.status.success());
    let mut got: Vec<String> = serde_json::from_value(stdout_json(&out)).unwrap();
    got.sort();
    let mut want = vec!["1|2|3", "12|3", "2|13", "1|23", "123"];
    want.sort();
    assert_eq!(got, want);

    let out = run(&["partitions", "list", "--n", "4", "--sizes", "2,2"]);
    let got: Vec<String> = serde_json::from_value(stdout_json(&out)).unwrap();
    assert_eq!(got, ["12|34", "13|24", "23|14"].iter().map(|s| {
        s.parse::<jetgroups::Partition>().unwrap().to_string()
    }).collect::<Vec<_>>());

    let out = run(&["partitions", "count", "--sizes", "1,2,1"]);
    // 1|23|4 and 2|13|4
    assert_eq!(stdout_json(&out)["count"], 2);
}

#[test]
fn jet_product_with_identity_echoes() {
    let a = alg("sl2");
    let x = rng(61).jet(&a, 3, Side::Right, true).unwrap();
    let e = jetgroups::Jet::identity(&a, 3, Side::Right).unwrap();
    let (px, pe) = (write("x.json", &jet_to_json(&x)), write("e.json", &jet_to_json(&e)));
    let out = run(&["jet", "mul", "--algebra", "sl2", "--k", "3", "--side", "right", &px, &pe]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(jet_from_json(&a, &stdout_json(&out)).unwrap(), x);
}

#[test]
fn jet_inverse_and_output_round_trip() {
    let a = alg("heis3");
    let x = rng(62).jet(&a, 4, Side::Left, true).unwrap();
    let px = write("heis_left.json", &jet_to_json(&x));
    let out = run(&["jet", "inv", "--algebra", "heis3", &px]);
    assert!(out.status.success());
    let w = jet_from_json(&a, &stdout_json(&out)).unwrap();
    assert_eq!(w, jet::inverse(&a, &x).unwrap());
    assert_eq!(to_text(&jet_to_json(&w)).as_bytes(), &out.stdout[..]);
}

#[test]
fn pure_product_command() {
    let out = run(&["jet", "pure", "--algebra", "sl2", "--i", "1", "--j", "2", "--k", "4", "--x", "1,0,0", "--y", "0,1,-1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["x"][2], serde_json::json!(["4", "0", "2"]));
    assert_eq!(v["x"][3], serde_json::json!(["-6", "0", "0"]));
}

#[test]
fn tangent_commands() {
    let a = alg("sl2");
    let mut g = rng(63);
    let x = g.tangent(&a, 2, Side::Right, false).unwrap();
    let px = write("t.json", &tangent_to_json(&x));
    let out = run(&["tangent", "permute", "--algebra", "sl2", "--perm", "2,1", &px]);
    assert!(out.status.success());
    let y = tangent_from_json(&a, &stdout_json(&out)).unwrap();
    assert_eq!(y.component("1".parse().unwrap()), x.component("2".parse().unwrap()));

    let out = run(&["tangent", "factor", "--algebra", "sl2", &px]);
    let factors = stdout_json(&out);
    assert_eq!(factors.as_array().unwrap().len(), 3);

    let out = run(&["tangent", "inv", "--algebra", "sl2", &px]);
    let w = tangent_from_json(&a, &stdout_json(&out)).unwrap();
    let pw = write("tw.json", &tangent_to_json(&w));
    let out = run(&["tangent", "mul", "--algebra", "sl2", &px, &pw]);
    let e = tangent_from_json(&a, &stdout_json(&out)).unwrap();
    assert_eq!(e, jetgroups::Tangent::identity(&a, 2, Side::Right).unwrap());

    let j = g.jet(&a, 3, Side::Right, true).unwrap();
    let pj = write("tj.json", &jet_to_json(&j));
    let out = run(&["tangent", "embed", "--algebra", "sl2", &pj]);
    let pt = write("te.json", &stdout_json(&out));
    let out = run(&["tangent", "project", "--algebra", "sl2", &pt]);
    assert_eq!(jet_from_json(&a, &stdout_json(&out)).unwrap(), j);

    let out = run(&["tangent", "project", "--algebra", "sl2", &px]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cocycle_commands() {
    let a = alg("sl2");
    let x = fiber(vec![el(&[1, 2, 0])]);
    let y = fiber(vec![el(&[0, 1, 1])]);
    let (px, py) = (write("cx.json", &jet_to_json(&x)), write("cy.json", &jet_to_json(&y)));
    let out = run(&["cocycle", "group", "--algebra", "sl2", "--k", "2", &px, &py]);
    assert!(out.status.success());
    let want = jetgroups::io::element_to_json(&br(&a, &x.x[0], &y.x[0]));
    assert_eq!(stdout_json(&out), want);

    let sa = write("sa.json", &serde_json::json!({"xi": ["0", "0", "0"], "x": [["1", "2", "0"]]}));
    let sb = write("sb.json", &serde_json::json!({"xi": ["1", "0", "0"], "x": [["0", "1", "1"]]}));
    let out = run(&["cocycle", "algebra", "--algebra", "sl2", "--k", "2", &sa, &sb]);
    let want = jetgroups::io::element_to_json(&br(&a, &x.x[0], &y.x[0]).scale(&r(2, 1)));
    assert_eq!(stdout_json(&out), want);

    let out = run(&["cocycle", "group", "--algebra", "sl2", "--k", "3", &px, &py]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_oracle_passes_and_is_deterministic() {
    let args = ["check", "oracle", "--algebra", "sl2", "--k", "4", "--trials", "50", "--seed", "7"];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stdout));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert!(text.lines().any(|l| l.starts_with("PASS product and inverse match the Taylor oracle k=4 right")));
    assert_eq!(run(&args).stdout, first.stdout);
}

#[test]
fn algebra_files_are_accepted() {
    let a = alg("so3");
    let file = write("so3.json", &jetgroups::io::algebra_to_json(&a));
    let out = run(&["check", "cocycles", "--algebra", &file, "--k", "3", "--trials", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let custom = write(
        "custom.json",
        &serde_json::json!({"name": "h", "kind": "structure_constants", "dim": 3, "leibniz": false,
            "brackets": [[0, 1, ["0", "0", "1"]], [1, 0, ["0", "0", "-1"]]]}),
    );
    let out = run(&["check", "group-axioms", "--algebra", &custom, "--k", "2", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn malformed_input_exits_with_two() {
    let bad = write("bad.json", &serde_json::json!({"k": 1, "x": [["1", "x", "0"]]}));
    assert_eq!(run(&["jet", "inv", "--algebra", "sl2", &bad]).status.code(), Some(2));
    assert_eq!(run(&["jet", "inv", "--algebra", "nope", &bad]).status.code(), Some(2));
    assert_eq!(run(&["jet", "inv", "--algebra", "sl2", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["check", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["partitions", "list", "--n", "40"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn order_cap_can_only_be_lowered() {
    let a = alg("sl2");
    let x = rng(64).jet(&a, 3, Side::Right, true).unwrap();
    let px = write("cap.json", &jet_to_json(&x));
    let out = bin().args(["jet", "inv", "--algebra", "sl2", &px]).env("JETGROUPS_MAX_K", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["jet", "inv", "--algebra", "sl2", &px]).env("JETGROUPS_MAX_K", "50").output().unwrap();
    assert!(out.status.success());
    let out = run(&["jet", "pure", "--algebra", "sl2", "--i", "1", "--j", "2", "--k", "21", "--x", "1,0,0", "--y", "0,1,0"]);
    assert_eq!(out.status.code(), Some(2));
}
