use std::path::{Path, PathBuf};
use std::process::Command as Process;

use clap::Parser;
use ggal::cli::{run, Cli, Report};
use ggal::format::load;
use ggal::Status;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn report(args: &[&str]) -> Report {
    let cli = Cli::try_parse_from(std::iter::once("ggal").chain(args.iter().copied())).unwrap();
    run(&cli.command).unwrap()
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_ggal")).args(args).output().unwrap();
    let text = |b: Vec<u8>| String::from_utf8(b).unwrap();
    (out.status.code().unwrap(), text(out.stdout), text(out.stderr))
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn mutated_fixtures_report_their_witness() {
    let dir = fixture("mutated");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let file = entry.unwrap().path();
        let text = std::fs::read_to_string(&file).unwrap();
        let expect = text.lines().find_map(|l| l.strip_prefix("# expect ")).expect("expect line");
        let words: Vec<&str> = expect.split_whitespace().collect();
        let (kind, axiom, names) = (words[0], words[1], &words[2..]);
        let inst = load(&file, None).unwrap();
        let g = inst.action.groupoid();
        let ids: Vec<Value> = names.iter().map(|n| Value::from(g.morphism_by_name(n).expect("name"))).collect();
        let v = inst.validate();
        let violations = match kind {
            "groupoid" => serde_json::to_value(&v.groupoid.violations).unwrap(),
            "action" => serde_json::to_value(&v.action.violations).unwrap(),
            _ => panic!("{kind}"),
        };
        let key = if kind == "groupoid" { "witness" } else { "morphisms" };
        let hit = violations
            .as_array()
            .unwrap()
            .iter()
            .any(|x| x["axiom"] == axiom && x[key].as_array().unwrap() == &ids);
        assert!(hit, "{}: no {axiom} {names:?} in {violations}", file.display());
        assert!(inst.into_instance(16).is_err());
        seen += 1;
    }
    assert_eq!(seen, 10);
}

#[test]
fn check_all_matches_expected_reports() {
    for name in ["ex1", "ex2", "ex3", "non-galois"] {
        let r = report(&["check", "all", &path(&format!("{name}.ggal"))]);
        let got: Value = serde_json::from_str(&r.to_json(false)).unwrap();
        let want: Value = serde_json::from_str(&std::fs::read_to_string(fixture(&format!("{name}.expected.json"))).unwrap()).unwrap();
        assert_eq!(got, want, "{name}");
        assert!(!r.failed());
    }
}

#[test]
fn check_all_is_deterministic() {
    for name in ["ex1.ggal", "ex3.ggal"] {
        let a = report(&["check", "all", &path(name)]).to_json(false);
        let b = report(&["check", "all", &path(name)]).to_json(false);
        assert_eq!(a, b);
    }
}

#[test]
fn theta_statuses_on_ex1() {
    let r = report(&["check", "theta", &path("ex1.ggal")]);
    assert_eq!(r.status("theta"), Some(Status::Pass));
    let details = &r.checks[0].details;
    assert_eq!(details["theta_injective"], true);
    for key in ["via_singleton_classes", "via_generated_supports", "via_nonzero_j"] {
        assert_eq!(details[key]["status"], "not-applicable", "{key}");
    }
}

#[test]
fn coordinate_search_on_non_galois_is_absent() {
    let r = report(&["coords", "--search", &path("non-galois.ggal")]);
    assert_eq!(r.status("coordinates-search"), Some(Status::NotApplicable));
    let r = report(&["coords", "--search", &path("ex2.ggal")]);
    assert_eq!(r.status("coordinates-supplied"), Some(Status::Pass));
    assert_eq!(r.status("coordinates-search"), Some(Status::Pass));
}

#[test]
fn exit_codes() {
    let (code, out, _) = binary(&["check", "all", &path("ex2.ggal")]);
    assert_eq!(code, 0);
    assert!(out.contains("=> ok"));

    let (code, out, _) = binary(&["validate", &path("mutated/inverse-law.ggal")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAILED"));

    let (code, _, err) = binary(&["validate", &path("ex1.ggal"), "--p", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("modulus not prime: 4"), "{err}");

    let (code, _, err) = binary(&["validate", &path("missing.ggal")]);
    assert_eq!(code, 2);
    assert!(err.starts_with("ggal: "));
}

#[test]
fn json_to_stdout_parses() {
    let (code, out, _) = binary(&["check", "phi", &path("ex3.ggal"), "--json", "-"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "ggal-report v1");
    assert_eq!(v["checks"][0]["details"]["subsets"], 16);
    assert!(v["timing"].is_object());
}

#[test]
fn subset_cap_is_an_error() {
    let (code, _, err) = binary(&["check", "phi", &path("ex3.ggal"), "--max-sg-subsets", "8"]);
    assert_eq!(code, 2);
    assert!(err.contains("cap is 8"), "{err}");
}
