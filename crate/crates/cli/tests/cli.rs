//! End-to-end tests of the `gclink` binary: determinism, round trips,
//! exit codes, and output schemas.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn gclink(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gclink"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gclink_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gclink"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn census_deterministic_byte_identical() {
    let a = gclink(&["census", "--n", "4", "--samples", "300", "--seed", "42"]);
    let b = gclink(&["census", "--n", "4", "--samples", "300", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "identical argv+seed must give identical bytes");
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&a)).unwrap();
    assert_eq!(doc["schema"], "gclink/1");
    assert_eq!(doc["seed"], 42);
    assert_eq!(doc["distinct_classes"], 3);
}

#[test]
fn census_five_component_classes() {
    let out = gclink(&["census", "--n", "5", "--samples", "5000", "--seed", "7"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["distinct_classes"], 7);
    assert_eq!(doc["indeterminate"], 0);
}

#[test]
fn dpq_json_roundtrips_through_classify_and_project() {
    // Classifiable sizes: the classification stops at five components.
    for (p, q, want) in [("1", "3", "-3"), ("1", "5", "-5"), ("2", "5", "HYP5")] {
        let link_json = stdout_str(&gclink(&["dpq", "--p", p, "--q", q, "--out", "json"]));
        let out = gclink_stdin(&["classify", "--input", "-"], &link_json);
        assert!(out.status.success(), "classify failed for D_{{{p}/{q}}}");
        let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(doc["class"], want, "class of D_{{{p}/{q}}}");
    }
    // The link JSON format itself round-trips at every q ≤ 15: `project`
    // consumes it whole.
    let mut q = 3;
    while q <= 15 {
        let link_json = stdout_str(&gclink(&["dpq", "--p", "1", "--q", &q.to_string(), "--out", "json"]));
        // A generic axis: symmetry axes of D_{1/q} make image circles
        // coincide, which `configuration` rightly rejects as indeterminate.
        let out = gclink_stdin(&["project", "--input", "-", "--axis", "0.31,0.59,0.75"], &link_json);
        assert!(out.status.success(), "project failed for q = {q}");
        let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
        assert_eq!(doc["schema"], "gclink/1");
        q += 2;
    }
    // Beyond five components classification is out of scope and reports a
    // machine-readable domain error on stderr with exit code 1.
    let link_json = stdout_str(&gclink(&["dpq", "--p", "1", "--q", "7", "--out", "json"]));
    let out = gclink_stdin(&["classify", "--input", "-"], &link_json);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stderr).unwrap()).unwrap();
    assert_eq!(err["kind"], "unsupported_size");
}

#[test]
fn dpq_svg_and_gauss_outputs() {
    let svg1 = stdout_str(&gclink(&["dpq", "--p", "2", "--q", "5", "--out", "svg"]));
    let svg2 = stdout_str(&gclink(&["dpq", "--p", "2", "--q", "5", "--out", "svg"]));
    assert_eq!(svg1, svg2, "SVG must be byte-identical across runs");
    assert!(svg1.starts_with("<svg"));
    assert_eq!(svg1.matches("<g ").count(), 5);
    let gauss = stdout_str(&gclink(&["dpq", "--p", "2", "--q", "5", "--out", "gauss"]));
    assert_eq!(gauss.lines().count(), 5);
    for line in gauss.lines() {
        // 2(q−1) = 8 tokens per component.
        assert_eq!(line.split(',').count(), 8, "bad gauss line: {line}");
    }
}

#[test]
fn surface_command() {
    let out = gclink(&["surface", "--p", "2", "--q", "9"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["surface"]["genus"], 3);
    assert_eq!(doc["coannular"]["count"], 4);
    assert_eq!(
        doc["wedge_census"]["phi_maps_into_complement"],
        serde_json::Value::Bool(true)
    );
}

#[test]
fn twobridge_commands() {
    let out = gclink(&["twobridge", "equiv", "5/23", "18/23"]);
    assert_eq!(stdout_str(&out).trim(), "true");
    let out = gclink(&["twobridge", "fibered", "5/23"]);
    assert_eq!(stdout_str(&out).trim(), "true");
    let out = gclink(&["twobridge", "fibered", "2/7"]);
    assert_eq!(stdout_str(&out).trim(), "false");
    let out = gclink(&["twobridge", "certify", "2/9", "8/1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["certificate"]["status"], "certified_modulo_lambda");
    assert_eq!(doc["certificate"]["evidence"]["delta_plus"], 3);
    assert_eq!(doc["certificate"]["evidence"]["delta_minus"], 5);
    assert_eq!(doc["certificate"]["lambda_caveat"], true);
    // Human-readable verdicts.
    let out = gclink(&["twobridge", "certify", "2/9", "4/1"]);
    assert!(stdout_str(&out).contains("not_certified: distance"));
    let out = gclink(&["twobridge", "certify", "1/3", "8/1"]);
    assert!(stdout_str(&out).contains("not_certified: range"));
}

#[test]
fn usage_errors_exit_2() {
    let out = gclink(&["census", "--n"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gclink(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1_with_json() {
    let out = gclink(&["dpq", "--p", "2", "--q", "4", "--out", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stderr).unwrap()).unwrap();
    assert_eq!(err["schema"], "gclink/1");
    assert_eq!(err["kind"], "invalid_params");
    let out = gclink(&["twobridge", "certify", "2/9", "3/1", "--json"]);
    // An odd-numerator slope is a verdict, not an error.
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(doc["certificate"]["status"], "not_certified");
    assert_eq!(doc["certificate"]["reason"], "odd_numerator");
}

#[test]
fn thread_count_env_does_not_change_output() {
    let mk = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_gclink"))
            .env("GCLINK_THREADS", threads)
            .args(["census", "--n", "5", "--samples", "500", "--seed", "3"])
            .output()
            .expect("binary runs")
    };
    let a = mk("1");
    let b = mk("4");
    assert_eq!(a.stdout, b.stdout, "thread count must not affect output");
}
