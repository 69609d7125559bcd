use std::path::PathBuf;
use std::process::{Command, Output};

use glvar_core::equimap::{phi_family, psi_map, quadric_discriminant, MapFile, WeightedMap};
use glvar_core::glvariety::LevelFamily;
use glvar_core::{PartitionTuple, Rational};
use serde_json::Value;

const SCENARIOS: [&str; 5] = [
    "shift-saturation",
    "rank-one-mapspace",
    "quartic-no-solutions",
    "typicality",
    "delta-rank1",
];

fn data(file: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../data");
    p.push(file);
    p.to_string_lossy().into_owned()
}

fn glvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glvar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn shift_prints_the_shifted_tuple() {
    let o = glvar(&["shift", "-n", "1", "[[2]]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "[[2],[1],[]]");
    let o = glvar(&["shift", "--shift", "2", "[2,1]"]);
    let printed = stdout(&o);
    let t: PartitionTuple = printed.trim().parse().unwrap();
    assert_eq!(t.to_string(), printed.trim());
}

#[test]
fn small_numeric_commands() {
    assert_eq!(stdout(&glvar(&["dim", "[2,1]", "--level", "3"])).trim(), "8");
    assert_eq!(stdout(&glvar(&["dim", "[[2],[1]]", "--level", "3"])).trim(), "9");
    assert_eq!(stdout(&glvar(&["lr", "[3,2,1]", "[2,1]", "[2,1]"])).trim(), "2");
}

#[test]
fn quartic_scenario_prints_the_certificate() {
    let o = glvar(&["scenario", "quartic-no-solutions"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("18 coefficient symbols"), "{out}");
    assert!(out.contains("GB = {1}: no solutions"), "{out}");
}

#[test]
fn phi0_file_is_typical() {
    let o = glvar(&["typical", "--map", &data("phi0.json")]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("typical"));
}

#[test]
fn factor_and_membership() {
    let o = glvar(&["factor", "--map", &data("phi1.json"), "[[2],[2],[2]]"]);
    assert!(stdout(&o).starts_with("yes"));
    let o = glvar(&["factor", "--map", "phi0", "[[1],[1],[2],[2]]"]);
    assert_eq!(stdout(&o).trim(), "no");
    let o = glvar(&["membership", "--map", "discriminant", "--level", "2", "--point", "0,0,0,0,0"]);
    assert!(stdout(&o).starts_with("member"));
    assert!(stdout(&o).contains("level n = 2"));
}

#[test]
fn every_scenario_verifies() {
    for s in SCENARIOS {
        let o = glvar(&["scenario", s, "--verify"]);
        assert!(o.status.success(), "{s}: {}", stdout(&o));
        assert!(stdout(&o).contains("verified: certificate matches"), "{s}");
    }
}

#[test]
fn json_reports_are_stable() {
    for s in SCENARIOS {
        let a = glvar(&["scenario", s, "--json"]);
        let b = glvar(&["scenario", s, "--json"]);
        assert_eq!(a.stdout, b.stdout, "{s}");
        let v: Value = serde_json::from_slice(&a.stdout).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["certificates", "command", "inputs", "result"]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(glvar(&["frobnicate"]).status.code(), Some(2));
    let bad = glvar(&["shift", "[[2],x]"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 5"));
    assert_eq!(glvar(&["saturate", "--vars", "x", "--by", "y", "x"]).status.code(), Some(2));
    assert_eq!(
        glvar(&["--budget", "5", "closure", "--map", "discriminant", "--level", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(glvar(&["--help"]).status.code(), Some(0));
}

#[test]
fn saturate_and_closure() {
    let o = glvar(&["saturate", "--vars", "x,y", "--by", "y", "x*y", "y^2"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = glvar(&["closure", "--map", &data("discriminant.json"), "--level", "1", "--order", "lex"]);
    assert!(stdout(&o).contains("zero ideal"));
    assert!(stdout(&o).contains("dimension 1 at level n = 1"));
}

#[test]
fn delta_fit_reports_agreement() {
    let o = glvar(&["delta", "--family", &data("rank-one.json"), "--fit", "2..3", "--test", "4..5"]);
    let out = stdout(&o);
    assert!(out.contains("fitted delta(d) = d + 1"), "{out}");
    assert!(out.contains("held-out levels agree"));
    let o = glvar(&["delta", "--family", &data("quadrics.json"), "--range", "1..3"]);
    assert_eq!(stdout(&o), "delta(1) = 1\ndelta(2) = 3\ndelta(3) = 6\n");
}

#[test]
fn shipped_files_match_builtins() {
    let load = |f: &str| -> WeightedMap {
        let file: MapFile = serde_json::from_str(&std::fs::read_to_string(data(f)).unwrap()).unwrap();
        WeightedMap::from_file(&file).unwrap()
    };
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    assert_eq!(load("phi0.json"), phi_family(zero));
    assert_eq!(load("phi1.json"), phi_family(one));
    assert_eq!(load("psi.json"), psi_map());
    assert_eq!(load("discriminant.json"), quadric_discriminant());
    let fam: LevelFamily = serde_json::from_str(&std::fs::read_to_string(data("rank-one.json")).unwrap()).unwrap();
    assert_eq!(fam, LevelFamily::rank_one_pairs());
    let _: LevelFamily = serde_json::from_str(&std::fs::read_to_string(data("quadrics-rank-one.json")).unwrap()).unwrap();
}
