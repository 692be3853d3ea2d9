use std::io::Write;
use std::process::Command;

use metabelian::cli::{run, Outcome};

fn metab(args: &[&str]) -> Outcome {
    run(std::iter::once("metab").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = metab(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout.trim_end().to_string()
}

fn corpus_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("metab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn normal_form_and_equality() {
    assert_eq!(ok(&["nf", "--rank", "2", "x2 x1"]), "x1 x2 [x2,x1]^(1)");
    assert_eq!(ok(&["eq", "--rank", "2", "x1 x1^-1", "1"]), "true");
    assert_eq!(ok(&["eq", "--rank", "2", "x1 x2", "x2 x1"]), "false");
    assert_eq!(ok(&["mul", "--rank", "2", "x2", "x1"]), "x1 x2 [x2,x1]^(1)");
    assert_eq!(ok(&["comm", "--rank", "2", "x2", "x1"]), "[x2,x1]^(1)");
    assert_eq!(ok(&["pow", "--rank", "2", "x1", "-3"]), "x1^-3");
    let g = "x1 x2^2 [x2,x1]^(a1 - 3)";
    let h = ok(&["inv", "--rank", "2", g]);
    assert_eq!(ok(&["mul", "--rank", "2", g, &h]), "1");
}

#[test]
fn json_is_versioned_and_deterministic() {
    let a = ok(&["nf", "--rank", "2", "--json", "x2 x1"]);
    assert_eq!(a, ok(&["--json", "nf", "--rank", "2", "x2 x1"]));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["v"], 1);
    assert_eq!(v["element"]["gamma"], serde_json::json!([1, 1]));
    let c = ok(&["encode", "--rank", "3", "--json", "x3 [x2,x1]^(a2)"]);
    let code = serde_json::from_str::<serde_json::Value>(&c).unwrap()["code"].as_str().unwrap().to_string();
    assert_eq!(ok(&["decode", "--rank", "3", &code]), "x3 [x2,x1]^(a2)");
}

#[test]
fn fox_collect_recover_expand() {
    assert_eq!(ok(&["fox", "--rank", "2", "--index", "1", "x1 x1"]), "a1 + 1");
    assert_eq!(ok(&["collect", "--rank", "2", "[x1,x2]^(a1) [x2,x1]"]), "[x2,x1]^(-a1 + 1)");
    assert_eq!(ok(&["recover", "--rank", "2", "x2 x1"]), "x1 x2 [x2,x1]^(1)");
    let w = ok(&["expand", "--rank", "3", "[x3,x1]^(a2 - 2)"]);
    assert_eq!(ok(&["nf", "--rank", "3", &w]), "[x3,x1]^(a2 - 2)");
}

#[test]
fn evaluation_commands() {
    assert_eq!(ok(&["eval", "--rank", "2", "--alpha", "-1,2", "a1^-1 + a2"]), "1");
    assert_eq!(ok(&["eval", "--rank", "2", "--alpha=2,1", "a1^-1"]), "1/2");
    let d = ok(&["discriminate", "--rank", "2", "--poly", "a1 - a2", "--poly", "a1 + 1"]);
    assert!(!d.lines().skip(1).any(|l| l.ends_with("-> 0")), "{d}");
    assert_eq!(ok(&["quotient-eq", "--rank", "2", "--alpha", "2,3", "[x2,x1]^(a1)", "[x2,x1]^(2)"]), "true");
    assert_eq!(ok(&["quotient-eq", "--rank", "2", "--alpha", "2,3", "[x2,x1]", "1"]), "false");
    assert!(ok(&["basis-cert", "--rank", "2", "x1 x2", "x2"]).starts_with("PassNecessary"));
    assert!(ok(&["basis-cert", "--rank", "2", "x1^2", "x2"]).starts_with("FailAbelianization"));
}

#[test]
fn exit_codes() {
    assert_eq!(metab(&["nf", "x1"]).code, 2);
    assert_eq!(metab(&["nf", "--rank", "1", "x1"]).code, 2);
    let bad = metab(&["nf", "--rank", "2", "x1 x3"]);
    assert_eq!(bad.code, 2);
    let e: serde_json::Value = serde_json::from_str(bad.stderr.trim()).unwrap();
    assert_eq!(e["error"]["kind"], "IndexOutOfRange");
    assert_eq!(metab(&["nf", "--rank", "2", "x1 (("]).code, 2);
    assert_eq!(metab(&["eval", "--rank", "2", "a1"]).code, 2);
    assert_eq!(metab(&["eval", "--rank", "2", "--alpha", "0,1", "a1"]).code, 1);
    assert_eq!(metab(&["fox", "--rank", "2", "--index", "3", "x1"]).code, 1);
    assert_eq!(metab(&["decode", "--rank", "2", "x"]).code, 2);
    assert_eq!(metab(&["basis-cert", "--rank", "3", "x1", "x2"]).code, 1);
}

#[test]
fn corpus_files() {
    let p = corpus_file("good.txt", "# pairs\nx2 x1 ; x1 x2 [x2,x1]\n\nx1 ; x2\n");
    assert_eq!(ok(&["corpus", "--rank", "2", p.to_str().unwrap()]), "line 2: equal/equal\nline 4: distinct/distinct");
    let empty = corpus_file("empty.txt", "");
    assert_eq!(ok(&["corpus", "--rank", "2", empty.to_str().unwrap()]), "");
    let bad = corpus_file("bad.txt", "x1 ; x1\nx1 x2\n");
    let out = metab(&["corpus", "--rank", "2", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("line 2:"), "{}", out.stderr);
    assert_eq!(metab(&["corpus", "--rank", "2", "/nonexistent/metab.txt"]).code, 1);
}

#[test]
fn check_axioms_passes() {
    let out = metab(&["check-axioms", "--rank", "3", "--samples", "200", "--seed", "7"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| l.contains("PASS")), "{}", out.stdout);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_metab")).args(["nf", "--rank", "2", "x2 x1"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x1 x2 [x2,x1]^(1)\n");
    let out = Command::new(env!("CARGO_BIN_EXE_metab")).args(["nf", "--rank", "2", "x9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
