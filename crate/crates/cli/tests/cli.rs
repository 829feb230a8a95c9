use std::process::{Command, Output};

use cubic_skein::relations::hopf_relation;
use cubic_skein::ring::phi_mirror;
use cubic_skein::rta::eval_code;
use cubic_skein::tangle_model::Closure;
use cubic_skein::{trivial_component, ConwayCode, LaurentPoly};
use serde_json::Value;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).env_remove("SKEIN_THREADS").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = skein(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn status(args: &[&str]) -> i32 {
    skein(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&ok(&v)).unwrap()
}

fn poly(s: &str) -> LaurentPoly {
    s.trim().parse().unwrap()
}

fn value(code: &str) -> LaurentPoly {
    eval_code(&code.parse::<ConwayCode>().unwrap(), None).unwrap()
}

#[test]
fn eval_matches_the_library() {
    let five = eval_code(&"[5]".parse().unwrap(), Some(Closure::Numerator)).unwrap();
    assert_eq!(poly(&ok(&["eval", "--code", "[5]", "--closure", "num"])), five);
    assert_eq!(poly(&ok(&["eval", "--code", "[0]", "--closure", "den"])), trivial_component());
    assert_eq!(poly(&ok(&["eval", "--pretzel", "P(1,1,1)"])), value("[-3]"));
}

#[test]
fn json_output_has_a_schema() {
    let v = json(&["eval", "--code", "[2,2]"]);
    assert_eq!(v["schema"], "skein.eval/1");
    assert_eq!(v["closure"], "den");
    assert_eq!(poly(v["value"].as_str().unwrap()), value("[2,2]"));
    let t = json(&["torus", "--n", "2", "--ambient", "annulus"]);
    assert_eq!(t["schema"], "skein.torus/1");
    for k in ["d1", "d0", "dm1", "scalar"] {
        assert!(t[k].is_string(), "{k}");
    }
}

#[test]
fn relations() {
    assert_eq!(ok(&["relation", "--a", "[3]", "--b", "[3]"]).trim(), "0");
    let flype = poly(&ok(&["relation", "--a", "[2,-2]", "--b", "[-3]", "--scale-a", "a"]));
    assert_eq!(flype, &(&poly("a") * &value("[2,-2]")) - &value("[-3]"));
    let v = json(&["relation", "--a", "[2,2]", "--b", "[-2,-2]", "--divide-by", "hopf"]);
    let q = poly(v["quotient"].as_str().unwrap());
    assert_eq!(&q * &hopf_relation(), poly(v["difference"].as_str().unwrap()));
    assert_eq!(v["divisor"], "R_Hopf");
}

#[test]
fn divide_reports_and_requires() {
    assert!(ok(&["divide", "--num", "R_tr+", "--den", "hopf"]).starts_with("not divisible"));
    assert_eq!(status(&["divide", "--num", "R_tr+", "--den", "hopf", "--require"]), 2);
    assert_eq!(ok(&["divide", "--num", "a^2 - b0^2", "--den", "a - b0", "--require"]).trim(), "a + b0");
}

#[test]
fn mirror_code_and_poly() {
    let v = json(&["mirror", "--code", "[3,2]"]);
    assert_eq!(v["mirror"], "[-3,-2]");
    assert_eq!(poly(v["value"].as_str().unwrap()), phi_mirror(&value("[3,2]")));
    assert_eq!(poly(&ok(&["mirror", "--poly", "a^2 + b0"])), phi_mirror(&poly("a^2 + b0")));
}

#[test]
fn reduce3_and_color() {
    assert_eq!(ok(&["reduce3", "--word", "S1 S1i"]).trim(), "{e: 1}");
    let v = json(&["reduce3", "--word", "U1 S1", "--signs", "printed"]);
    assert_eq!(v["terms"][0]["basis"], "U1");
    assert_eq!(ok(&["color", "--code", "[3]", "--p", "3"]).trim(), "9");
    assert_eq!(ok(&["color", "--code", "[3]", "--p", "7"]).trim(), "7");
}

#[test]
fn pretzel_trace() {
    let v = json(&["pretzel", "P(2,1,-3)", "--order", "2,0,1"]);
    assert_eq!(v["order"], serde_json::json!([2, 0, 1]));
    assert_eq!(v["value"], json(&["pretzel", "P(2,1,-3)"])["value"]);
}

#[test]
fn catalog_lists_relations() {
    let text = ok(&["catalog"]);
    assert!(text.lines().any(|l| l.starts_with("R_Hopf = ")));
    let v = json(&["catalog", "--check"]);
    assert!(v["corpus"].as_array().unwrap().len() > 10);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(status(&["scan", "--check", "hopf-divisibility", "--max-len", "0"]), 1);
    assert_eq!(status(&["eval", "--code", "[3,x]"]), 1);
    assert_eq!(status(&["eval", "--code", "[3,0,2]"]), 1);
    assert_eq!(status(&["eval", "--pretzel", "P(1,1)", "--closure", "den"]), 1);
    assert_eq!(status(&["color", "--code", "[3]", "--p", "9"]), 1);
    assert_eq!(status(&["pretzel", "P(1,2)", "--order", "0,0"]), 1);
    assert_eq!(status(&["nonsense"]), 1);
    assert_eq!(status(&["--help"]), 0);
    let err = String::from_utf8(skein(&["eval", "--code", "[3,x]"]).stderr).unwrap();
    assert!(err.contains("parse error at byte 3"), "{err}");
}

fn strip_meta(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("meta");
    v
}

#[test]
fn hopf_scan_is_deterministic_and_passes() {
    let args = ["scan", "--check", "hopf-divisibility", "--max-len", "3", "--max-entry", "3"];
    let a = ok(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_skein")).args(args).env("SKEIN_THREADS", "2").output().unwrap();
    assert_eq!(strip_meta(&a), strip_meta(&String::from_utf8(b.stdout).unwrap()));
    let v = strip_meta(&a);
    assert_eq!(v["schema"], "skein.scan/1");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["parameters"]["mode"], "assert");
    let codes: Vec<&str> = v["items"].as_array().unwrap().iter().map(|i| i["code"].as_str().unwrap()).collect();
    let mut sorted: Vec<ConwayCode> = codes.iter().map(|c| c.parse().unwrap()).collect();
    sorted.sort();
    assert_eq!(codes, sorted.iter().map(|c| c.to_string()).collect::<Vec<_>>());
}

#[test]
fn bad_thread_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(["scan", "--check", "col7", "--max-len", "1"])
        .env("SKEIN_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn col7_and_bridge_reports() {
    let v = strip_meta(&ok(&["scan", "--check", "col7", "--max-len", "2", "--max-entry", "8"]));
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(v["parameters"]["mode"], "report");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bridge.json");
    let line = ok(&["scan", "--check", "pretzel-bridge", "--max-len", "4", "--max-entry", "2", "--out", path.to_str().unwrap()]);
    assert!(line.starts_with("pass: "), "{line}");
    let v = strip_meta(&std::fs::read_to_string(&path).unwrap());
    let items = v["items"].as_array().unwrap();
    assert!(items.iter().any(|i| i["code"] == "P(2,1,1) vs [2,2]" && i["verdict"] == "equal"));
    assert_eq!(items.last().unwrap()["verdict"], "not-divisible");
}
