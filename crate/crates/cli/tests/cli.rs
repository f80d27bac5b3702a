use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiassoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--out", "json"]);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).expect("JSON report");
    (out.status.code().expect("exit code"), value)
}

#[test]
fn nucleus_of_quaternion_algebra() {
    let (code, r) = json(&["nucleus", "--recipe", "cyclic:F4/F2:d=w"]);
    assert_eq!(code, 0);
    assert_eq!(r["report_version"], 1);
    assert_eq!(r["findings"]["right_nucleus_dim"], 2);
    assert_eq!(r["findings"]["nucleus_dim"], 2);
    assert!(r.get("timings").is_none());
}

#[test]
fn associative_quaternions_over_f2_have_zero_divisors() {
    let (code, r) = json(&["division", "--recipe", "cyclic:F4/F2:d=1"]);
    assert_eq!(code, 1);
    assert_eq!(r["findings"]["division"], false);
    assert_eq!(r["findings"]["zero_divisors"].as_array().unwrap().len(), 2);
    let (code, r) = json(&["division", "--recipe", "cyclic:F4/F2:d=w"]);
    assert_eq!((code, &r["verdicts"]["division"]), (0, &Value::Bool(true)));
}

#[test]
fn named_suites() {
    for args in [
        &["verify", "split-quaternion", "--field", "2"][..],
        &["verify", "differential", "--p", "2", "--samples", "50"],
        &["verify", "division-criteria"],
        &["verify", "tensor-csa"],
    ] {
        let (code, r) = json(args);
        assert_eq!(code, 0, "{args:?}: {r}");
    }
}

/// `verify all` reports the two split-algebra counterexamples to the span
/// formula for the right nucleus, and nothing else.
#[test]
fn verify_all_fails_only_on_counterexamples() {
    let (code, r) = json(&["verify", "all"]);
    assert_eq!(code, 1);
    let failed: Vec<&String> = r["verdicts"]
        .as_object()
        .unwrap()
        .iter()
        .filter(|(_, v)| **v == Value::Bool(false))
        .map(|(k, _)| k)
        .collect();
    assert_eq!(
        failed,
        ["nucleus-theorem: F3^3/F3 span formula", "nucleus-theorem: F3^4/F3 span formula"]
    );
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "nucleus-theorem", "--seed", "5", "--out", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let (_, r) = json(&["split", "--recipe", "cyclic:F4/F2:d=w", "--timings"]);
    assert!(r["timings"]["total_ms"].is_number());
}

#[test]
fn recipe_file_round_trips() {
    let (_, text) = json(&["construct", "--recipe", "menichetti:F4/F2:k=1;w"]);
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), text["inputs"]["recipe"].to_string()).unwrap();
    let (code, from_file) = json(&["construct", "--recipe-file", file.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(from_file["findings"], text["findings"]);
    assert_eq!(from_file["findings"]["dim"], 4);
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(run(&["nucleus"]).status.code(), Some(2));
    assert_eq!(run(&["nucleus", "--recipe", "cyclic:F6/F2:d=1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["division", "--recipe", "differential:p=2:d=v"]).status.code(), Some(2));
    assert_eq!(
        run(&["division", "--recipe", "cyclic:F16/F2:d=w", "--cap", "10"]).status.code(),
        Some(3)
    );
}

#[test]
fn split_and_tensor_certificates() {
    let (code, r) = json(&["split", "--recipe", "skew_matrix:F4:n=2:lambda=w"]);
    assert_eq!((code, &r["findings"]["verdict"]), (0, &Value::from("split-certified")));
    let (code, r) = json(&["tensor", "--recipe", "cyclic:F4/F2:d=w", "--power", "2"]);
    assert_eq!(code, 1);
    assert_eq!(r["findings"]["verdict"], "not-split-certified");
    assert_eq!(r["findings"]["idempotent_count"], 2);
    assert_eq!(r["findings"]["dim"], 16);
}

#[test]
fn opposite_and_irreducible() {
    let (code, r) = json(&["opposite", "--recipe", "cyclic:F8/F2:d=w"]);
    assert_eq!((code, &r["findings"]["isomorphic_via_psi"]), (0, &Value::Bool(true)));
    let (code, r) = json(&["irreducible", "--recipe", "cyclic:F4/F2:d=1"]);
    assert_eq!(code, 1);
    assert!(r["findings"]["right_divisor"].is_string());
    let (code, r) = json(&["idempotents", "--recipe", "cyclic:F3^2/F3:d=[1,2]"]);
    assert_eq!((code, &r["findings"]["count"]), (0, &Value::from(2)));
}
