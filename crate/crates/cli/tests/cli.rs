use std::process::{Command, Output};

use serde_json::Value;

fn chern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chern")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = chern(&all);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    });
    (out.status.code().expect("exit code"), doc)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn gb_of_circle_and_line() {
    let (code, doc) = json(&["gb", "--ring", "Q[x,y]", "--ideal", "x^2+y^2-1, x-y"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"]["name"], "gb");
    assert_eq!(strings(&doc["result"]["basis"]), ["x - y", "y^2 - 1/2"]);
    assert_eq!(doc["result"]["dim"], 0);
    assert!(doc["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn gb_respects_order_and_field_overrides() {
    let (code, doc) = json(&["gb", "--ring", "Q[x,y]", "--order", "lex", "--field", "F7", "--ideal", "x^2 - y, y^3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["ring"]["order"], "lex");
    assert_eq!(doc["result"]["ring"]["field"], "F7");
}

#[test]
fn input_errors_exit_2() {
    let (code, doc) = json(&["gb", "--ring", "Q[x,x]", "--ideal", "x"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "duplicate_variable");
    assert_eq!(chern(&["gb", "--ring", "F4[x]", "--ideal", "x"]).status.code(), Some(2));
    assert_eq!(chern(&["gb", "--ring", "Q[x]", "--ideal", "x +"]).status.code(), Some(2));
    assert_eq!(chern(&["gb", "--ideal", "1"]).status.code(), Some(2));
    assert_eq!(chern(&["verify-paper", "--example", "1", "--d", "2"]).status.code(), Some(2));
    assert_eq!(chern(&["verify-paper", "--example", "2", "--a", "1"]).status.code(), Some(2));
    assert_eq!(chern(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn unsupported_inputs_exit_4() {
    let (code, doc) = json(&["decompose", "--ring", "Q[x,y]", "--ideal", "x+y"]);
    assert_eq!(code, 4);
    assert_eq!(doc["error"]["kind"], "unsupported");
    // J + q is not m-primary
    let out = chern(&["invariants", "--ring", "Q[x,y]", "--ideal", "x"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unstabilized_series_exit_3_with_partial_values() {
    let (code, doc) = json(&["invariants", "--example-1", "3", "--degree", "2", "--nmax", "1"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"]["kind"], "not_stabilized");
    assert!(!doc["error"]["partial_series"].as_array().unwrap().is_empty());
}

#[test]
fn ring_inferred_from_the_ideal() {
    let (code, doc) = json(&["decompose", "--ideal", "x*y"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&doc["result"]["irreducible"]), ["(x)", "(y)"]);
    assert_eq!(doc["result"]["ring"]["field"], "Q");
    let (code, doc) = json(&["gb", "--ideal", "x"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&doc["result"]["basis"]), ["x"]);
}

#[test]
fn decompose_space_and_line() {
    let (code, doc) = json(&["decompose", "--example-1", "3"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(strings(&r["irreducible"]), ["(x1, x2, x3)", "(y)"]);
    assert_eq!(r["filtration"]["dims"], serde_json::json!([1, 3]));
    assert_eq!(r["unmixed"], "(y)");
}

#[test]
fn intersection_syntax_matches_the_family() {
    let args = ["--ring", "F32003[x1,x2,x3,y]", "--module", "(x1, x2, x3) & (y)", "--ideal", "x1 - y, x2, x3"];
    let (code, doc) = json(&[&["invariants"], &args[..]].concat());
    assert_eq!(code, 0);
    let (_, family) = json(&["invariants", "--example-1", "3", "--ideal", "x1 - y, x2, x3"]);
    assert_eq!(doc["result"]["e"], family["result"]["e"]);
    assert_eq!(doc["result"]["ir"], family["result"]["ir"]);
    assert_eq!(doc["result"]["parameter_ideal"], true);
}

#[test]
fn invariants_of_a_complete_intersection() {
    let (code, doc) = json(&["invariants", "--ring", "Q[x,y]", "--ideal", "x^2, y^2"]);
    assert_eq!(code, 0);
    let r = &doc["result"];
    assert_eq!(r["length"], 4);
    assert_eq!(r["ir"], 1);
    assert_eq!(r["e"]["coefficients"], serde_json::json!([4, 0, 0]));
    assert_eq!(r["f"]["coefficients"], serde_json::json!([1, 0]));
}

#[test]
fn check_on_a_polynomial_ring() {
    let (code, doc) = json(&["check", "--ring", "F32003[x,y]", "--samples", "2", "--seed", "1"]);
    assert_eq!(code, 0);
    let report = &doc["result"]["report"];
    assert_eq!(report["cm"]["cohen_macaulay"], true);
    assert_eq!(report["violations"], 0);
    assert_eq!(report["records"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_both_families() {
    let (code, doc) = json(&["verify-paper", "--example", "1"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(doc["passed"], true);
    let (code, doc) = json(&["verify-paper", "--example", "2", "--a", "2", "--b", "3"]);
    assert_eq!(code, 0, "{doc}");
    assert!(doc["result"]["assertions"].as_array().unwrap().iter().all(|a| a["holds"] == true));
}

#[test]
fn out_file_and_readable_output() {
    let dir = std::env::temp_dir().join(format!("chern-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gb.json");
    let out = chern(&["gb", "--ring", "Q[x]", "--ideal", "x^2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("basis: [x^2]"), "{text}");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(strings(&doc["result"]["basis"]), ["x^2"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
