use std::collections::HashMap;
use std::process::Command;

use gorenstein_harness::{exit_code, Outcome, Report};
use proptest::prelude::*;
use serde_json::Value as Json;

fn gfd(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gfd")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/report.schema.json");
    let schema: Json = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&schema).expect("schema compiles")
}

fn validated(args: &[&str]) -> (i32, Report) {
    let (code, out, err) = gfd(args);
    assert!(code != 2, "{args:?}: {err}");
    let json: Json = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"));
    let compiled = schema();
    if let Err(errors) = compiled.validate(&json) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{args:?} does not match the schema: {msgs:#?}");
    }
    let report: Report = serde_json::from_value(json).unwrap();
    assert_eq!(report.exit_code, code);
    (code, report)
}

#[test]
fn verify_main_on_the_polynomial_example() {
    let (code, report) =
        validated(&["verify", "main", "--fixture", "f4.gfd", "--bound", "8", "--tmax", "4", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(report.fixtures.len(), 1);
    assert_eq!(report.summary.fail, 0);
    assert_eq!(report.summary.unknown, 0);
}

#[test]
fn gdim_on_the_non_gorenstein_example_is_unknown() {
    let (code, report) =
        validated(&["gdim", "--fixture", "f3.gfd", "--module", "k", "--bound", "8", "--format", "json"]);
    assert_eq!(code, 3);
    let check = &report.fixtures[0].checks[0];
    assert_eq!(check.outcome, Outcome::Unknown);
    assert_eq!(check.reports[0].status, gorenstein::Status::Unknown { bound: 8 });
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(gfd(&["resolve", "--module", "nonexistent"]).0, 2);
    assert_eq!(gfd(&["resolve", "--fixture", "f1_qq", "--module", "nonexistent"]).0, 2);
    assert_eq!(gfd(&["gdim", "--fixture", "no_such_fixture", "--module", "N"]).0, 2);
    assert_eq!(gfd(&["frobnicate"]).0, 2);
    assert_eq!(gfd(&["verify", "main", "--bogus-flag"]).0, 2);
    assert_eq!(gfd(&["betti", "--fixture", "f1_qq", "--module", "N", "--field", "GF(100)"]).0, 2);
}

#[test]
fn parse_errors_exit_with_two_and_report_the_position() {
    let dir = std::env::temp_dir().join(format!("gfd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.gfd");
    std::fs::write(&path, "ring R = QQ[x];\nmodule N over R = coker [[x]\n").unwrap();
    let (code, _, err) = gfd(&["resolve", "--fixture", path.to_str().unwrap(), "--module", "N"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse error: 3:1"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn every_subcommand_emits_schema_valid_json() {
    let runs: &[&[&str]] = &[
        &["resolve", "--fixture", "f1_qq", "--module", "N"],
        &["betti", "--fixture", "f3", "--module", "N", "--bound", "4"],
        &["depth", "--fixture", "f4", "--module", "N"],
        &["ext", "--fixture", "f2", "--module", "N"],
        &["tor", "--fixture", "f2", "--module", "N", "--with", "N"],
        &["gdim", "--fixture", "f1_gf101", "--module", "N"],
        &["gfd", "--fixture", "f4", "--module", "N"],
        &["approximate", "--fixture", "f1_qq", "--module", "N", "--n", "1"],
        &["verify", "loc"],
        &["verify", "supp"],
        &["verify", "expectations", "--fixture", "f2", "--fixture", "zero"],
        &["fixtures", "list"],
    ];
    for args in runs {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let (code, _) = validated(&a);
        assert_eq!(code, 0, "{args:?}");
    }
}

#[test]
fn verify_commands_pass_on_shipped_fixtures() {
    for mode in ["main", "loc", "supp", "expectations"] {
        let (code, report) = validated(&["verify", mode, "--format", "json"]);
        assert_eq!(code, 0, "verify {mode}: {:?}", report.summary);
        assert!(!report.fixtures.is_empty());
        let names: Vec<&str> = report.fixtures.iter().map(|f| f.fixture.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }
}

#[test]
fn field_override_keeps_the_results() {
    let (code, out, _) = gfd(&["verify", "main", "--fixture", "f1_qq", "--field", "GF(101)", "--format", "text"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn text_and_json_agree_on_the_exit_code() {
    let (a, text, _) = gfd(&["gdim", "--fixture", "f3", "--module", "N", "--format", "text"]);
    let (b, _, _) = gfd(&["gdim", "--fixture", "f3", "--module", "N", "--format", "json"]);
    assert_eq!(a, b);
    assert!(text.contains("unknown"));
}

#[test]
fn reports_are_deterministic() {
    let a = gfd(&["verify", "supp", "--format", "json"]).1;
    let b = gfd(&["verify", "supp", "--format", "json"]).1;
    assert_eq!(a, b);
}

fn outcome() -> impl Strategy<Value = Outcome> {
    prop_oneof![Just(Outcome::Pass), Just(Outcome::Fail), Just(Outcome::Unknown)]
}

proptest! {
    #[test]
    fn exit_status_depends_only_on_the_outcome_multiset(mut outcomes in prop::collection::vec(outcome(), 0..12), seed in any::<u64>()) {
        let code = exit_code(outcomes.clone());
        let mut counts: HashMap<Outcome, usize> = HashMap::new();
        for o in &outcomes {
            *counts.entry(*o).or_default() += 1;
        }
        let expected = if counts.contains_key(&Outcome::Fail) {
            1
        } else if counts.contains_key(&Outcome::Unknown) {
            3
        } else {
            0
        };
        prop_assert_eq!(code, expected);
        let n = outcomes.len().max(1);
        outcomes.rotate_left((seed as usize) % n);
        outcomes.reverse();
        prop_assert_eq!(exit_code(outcomes), code);
    }
}
