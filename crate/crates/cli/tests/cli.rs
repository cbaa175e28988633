use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "(x+2)^2*((x-3)*(x+1))^3";

fn recprs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recprs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Asserts `keys` appear in this order in the raw text.
fn assert_key_order(text: &str, keys: &[&str]) {
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| text.find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("missing key {k}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "key order {keys:?} in {text}");
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn sturm_count_example() {
    let out = recprs(&["sturm-count", "-p", EXAMPLE]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("8 = 3 + 3 + 2"), "{}", stdout(&out));

    let out = recprs(&["--format", "json", "sturm-count", "-p", EXAMPLE]);
    let doc = json(&out);
    assert_eq!(doc["total"], 8);
    assert_eq!(doc["per_level"], serde_json::json!([3, 3, 2]));
    assert_eq!(doc["lambdas"][2]["at_plus_inf"], serde_json::json!(["12800/841", "25600/841", "51200/841"]));
}

#[test]
fn sturm_count_ignores_rule() {
    let a = recprs(&["sturm-count", "-p", EXAMPLE, "--rule", "primitive"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("8 = 3 + 3 + 2"));
}

#[test]
fn lemma1_on_coprime_pair() {
    let out = recprs(&["verify", "lemma1", "-f", "x^3 - 2*x + 5", "-g", "x^2 + 1", "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("lemma1: PASS"));
}

#[test]
fn subres_out_of_range() {
    let out = recprs(&["subres", "-f", "x^3+x+1", "-g", "x^2+2", "-j", "99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("j = 99"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn parse_errors_have_positions() {
    let out = recprs(&["prs", "-p", "2x+1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1:2"), "{}", stderr(&out));
    let out = recprs(&["prs", "-p", "x^-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("negative"));
}

#[test]
fn usage_errors() {
    assert_eq!(recprs(&["prs"]).status.code(), Some(2));
    assert_eq!(recprs(&["prs", "-f", "x^2"]).status.code(), Some(2));
    assert_eq!(recprs(&["subres", "-p", "x^3"]).status.code(), Some(2));
    assert_eq!(recprs(&["verify", "lemma1", "-p", "x^3", "-k", "1"]).status.code(), Some(2));
    assert_eq!(recprs(&["recsubres", "-p", EXAMPLE, "-k", "2", "-j", "4"]).status.code(), Some(2));
    assert_eq!(recprs(&["sturm-count", "-p", "7"]).status.code(), Some(2));
    assert_eq!(recprs(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn json_is_stable_and_feeds_back() {
    let dir = tempfile::tempdir().unwrap();
    let first = recprs(&["--format", "json", "rprs", "-p", EXAMPLE]);
    let second = recprs(&["--format", "json", "rprs", "-p", EXAMPLE]);
    assert_eq!(first.stdout, second.stdout);

    let path = dir.path().join("rprs.json");
    fs::write(&path, &first.stdout).unwrap();
    let arg = format!("@{}", path.display());
    let again = recprs(&["--format", "json", "rprs", "-p", &arg]);
    assert_eq!(again.status.code(), Some(0), "{}", stderr(&again));
    assert_eq!(again.stdout, first.stdout);

    // a pair read back through -f/-g reproduces the same PRS
    let prs = recprs(&["--format", "json", "--rule", "subresultant", "prs", "-f", "x^5-3*x^2+1", "-g", "x^3+x"]);
    let path = dir.path().join("prs.json");
    fs::write(&path, &prs.stdout).unwrap();
    let arg = format!("@{}", path.display());
    let back = recprs(&["--format", "json", "--rule", "subresultant", "prs", "-f", &arg, "-g", &arg]);
    assert_eq!(back.stdout, prs.stdout);

    let doc = json(&first);
    assert_key_order(&stdout(&first), &["command", "input", "rule", "j_values", "complete", "gammas", "levels"]);
    assert_eq!(doc["levels"][1]["elements"][2][3], "14848/625");
}

#[test]
fn file_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let expr = dir.path().join("p.txt");
    fs::write(&expr, format!("{EXAMPLE}\n")).unwrap();
    let out = recprs(&["sturm-count", "-p", &format!("@{}", expr.display())]);
    assert!(stdout(&out).contains("= 3 + 3 + 2"));

    let coeffs = dir.path().join("c.json");
    fs::write(&coeffs, r#"["-1", 0, "1/1"]"#).unwrap();
    let out = recprs(&["sturm-count", "-p", &format!("@{}", coeffs.display())]);
    assert!(stdout(&out).contains(": 2 ="), "{}", stdout(&out));

    let bad = dir.path().join("bad.bin");
    fs::write(&bad, [0xff, 0xfe, 0x00]).unwrap();
    let out = recprs(&["sturm-count", "-p", &format!("@{}", bad.display())]);
    assert_eq!(out.status.code(), Some(2));
    let out = recprs(&["sturm-count", "-p", "@/nonexistent/file"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recsubres_example() {
    let out = recprs(&["--format", "json", "recsubres", "-p", EXAMPLE, "-k", "2", "-j", "3", "--matrix"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!((doc["rows"].as_u64(), doc["cols"].as_u64()), (Some(18), Some(15)));
    assert_eq!(doc["factors"]["blocks"], 3);
    assert_eq!(doc["factors"]["sign"], "1/1");
    assert_eq!(doc["matrix"]["entries"].as_array().unwrap().len(), 18);
}

#[test]
fn wide_matrices_are_summarized_in_text() {
    let out = recprs(&["recsubres", "-p", EXAMPLE, "-k", "3", "-j", "0", "--matrix"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("matrix: 75x75 (wider than 40 columns"), "{text}");
    assert!(text.lines().count() < 10);
}

#[test]
fn dims_both_ways() {
    let out = recprs(&["dims", "-k", "2", "-j", "3", "--m", "8", "--n", "7", "--j-values", "8,5,2,0"]);
    assert_eq!(stdout(&out).trim(), "M^(2,3): 18x15");
    let out = recprs(&["dims", "-k", "3", "-j", "0", "-p", EXAMPLE]);
    assert_eq!(stdout(&out).trim(), "M^(3,0): 75x75");
    let out = recprs(&["dims", "-k", "2", "-j", "4", "--m", "8", "--n", "7", "--j-values", "8,5,2,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeded_verification() {
    for rule in ["sturm", "monic", "primitive", "subresultant"] {
        let out = recprs(&["--rule", rule, "verify", "fundamental", "--seed", "3", "--count", "5"]);
        assert_eq!(out.status.code(), Some(0), "{rule}: {}", stdout(&out));
    }
    let a = recprs(&["--format", "json", "verify", "theorem2", "--seed", "9", "--count", "3"]);
    let b = recprs(&["--format", "json", "verify", "theorem2", "--seed", "9", "--count", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 3);
    let text = stdout(&a);
    let first_check = &text[text.find("\"checks\"").unwrap()..];
    assert_key_order(first_check, &["claim", "k", "j", "lhs", "rhs", "factor", "pass"]);
}

#[test]
fn verify_single_pair() {
    let out = recprs(&["verify", "lemma1", "-p", EXAMPLE, "-k", "2", "-j", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = recprs(&["verify", "theorem2", "-p", EXAMPLE, "-k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = recprs(&["--format", "json", "verify", "fundamental", "-p", EXAMPLE, "-j", "5"]);
    let doc = json(&out);
    // j = 5 is both n_4 and n_3 - 1
    let checks = doc["reports"][0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c["j"] == 5 && c["pass"] == true));
    assert_eq!(doc["input"]["p"][8], "1/1");
}
