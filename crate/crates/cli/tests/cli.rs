use std::process::Command;

use etalecup_cli::report::{Payload, Report};
use etalecup_cli::{run, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    run(std::iter::once("etalecup").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Report {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    Report::parse_json(&out).expect("valid json")
}

#[test]
fn groups_for_5_and_29() {
    let r = json(&["groups", "--S", "5,29", "--n", "2"]);
    let Payload::Groups { punctured, groups, .. } = r.payload else { panic!("wrong payload") };
    assert!(punctured);
    assert_eq!(groups[1].invariants, ["2", "2"]);
    assert_eq!(groups[2].invariants, ["2", "2"]);
}

#[test]
fn unpunctured_rationals() {
    let r = json(&["groups", "--field", "Q"]);
    let Payload::Groups { punctured, groups, stable_tail } = r.payload else { panic!("wrong payload") };
    assert!(!punctured);
    let orders: Vec<&str> = groups.iter().map(|g| g.order.as_str()).collect();
    assert_eq!(orders, ["2", "1", "1", "2"]);
    assert_eq!(stable_tail.invariants, ["2"]);
}

#[test]
fn json_round_trip() {
    for args in [
        vec!["groups", "--S", "2,3", "--n", "4"],
        vec!["pairing", "--S", "5,13"],
        vec!["legendre", "--max", "40"],
        vec!["torsors", "--S", "2,3"],
    ] {
        let (_, out, _) = call(&args);
        let r = Report::parse_json(&out).unwrap();
        let again = r.emit(etalecup_cli::report::Format::Json);
        assert_eq!(out, again);
        assert_eq!(r.schema_version, etalecup_cli::report::SCHEMA_VERSION);
    }
}

#[test]
fn output_is_deterministic() {
    let a = call(&["verify", "--max", "40", "--seed", "7"]);
    let b = call(&["verify", "--max", "40", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0, EXIT_OK);
}

#[test]
fn tsv_pairing_has_one_row_per_pair() {
    let (code, out, _) = call(&["pairing", "--S", "5,13", "--format", "tsv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("# schema_version=1"));
    assert_eq!(lines[1], "y\tz\tvalues");
    assert_eq!(lines.len(), 2 + 4);
}

#[test]
fn pairing_matches_legendre() {
    // (13/5) = -1 and (29/5) = 1.
    let r = json(&["pairing", "--S", "5,13"]);
    let Payload::Pairing { entries, .. } = r.payload else { panic!("wrong payload") };
    let e = entries.iter().find(|e| e.y == "5" && e.z == "13").unwrap();
    assert!(e.values.iter().any(|v| v != "0"));
    let r = json(&["pairing", "--S", "5,29"]);
    let Payload::Pairing { entries, .. } = r.payload else { panic!("wrong payload") };
    let e = entries.iter().find(|e| e.y == "5" && e.z == "29").unwrap();
    assert!(e.values.iter().all(|v| v == "0"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["groups", "--field", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(call(&["groups", "--S", "4"]).0, EXIT_USAGE);
    assert_eq!(call(&["groups", "--format", "xml"]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_etalecup");
    let ok = Command::new(bin).args(["torsors", "--S", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["groups", "--n", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let env = Command::new(bin).args(["torsors", "--S", "3"]).env("ETALECUP_FORMAT", "tsv").output().unwrap();
    assert!(String::from_utf8(env.stdout).unwrap().starts_with("# schema_version"));
}
