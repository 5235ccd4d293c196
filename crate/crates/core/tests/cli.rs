//! End-to-end runs of the `fuscond` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fuscond"));
    c.env_remove("FUSCOND_SEED");
    c
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fuscond-cli-{}-{tag}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn example_then_analyze_and_galois() {
    let dir = scratch("a2n");
    let b = dir.join("b.json");
    let st = bin().args(["example", "a2n", "--n", "1", "--emit"]).arg(&b).status().unwrap();
    assert_eq!(st.code(), Some(0));

    let out = bin().arg("analyze").arg(&b).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("kernel_dim: 0"));
    assert!(text.contains("blocks: 1,1,1,1,2"));

    let dot = dir.join("lattice.dot");
    let out = bin().arg("galois").arg(&b).arg("--dot").arg(&dot).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let graph = std::fs::read_to_string(&dot).unwrap();
    assert!(graph.starts_with("digraph lattice"));
    assert_eq!(graph.matches("[label=").count(), 9);

    let out = bin().arg("indicators").arg(&b).args(["--x", "L1⊠M1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("| 1 | 2 |"));

    let out = bin().arg("analyze").arg(&b).env("FUSCOND_SEED", "12345").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("seed: 0x3039"));
}

#[test]
fn emitted_bundle_validates_and_round_trips() {
    let dir = scratch("rt");
    let first = bin().args(["example", "toric"]).output().unwrap();
    assert_eq!(first.status.code(), Some(0));
    let path = dir.join("toric.json");
    std::fs::write(&path, &first.stdout).unwrap();
    let out = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("bundle.v1: valid"));
    let parsed = fuscond::schema::bundle_from_json(&stdout(&first)).unwrap();
    assert_eq!(fuscond::schema::bundle_to_json(&parsed).unwrap(), stdout(&first));
}

#[test]
fn corrupted_ring_fails_with_listing() {
    let dir = scratch("bad");
    let path = dir.join("corrupted.json");
    let ring = fuscond::FiniteGroup::cyclic(3).group_ring();
    let text = fuscond::schema::ring_to_json(&ring).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["fusion"][5] = serde_json::json!(1);
    std::fs::write(&path, v.to_string()).unwrap();
    let out = bin().arg("validate").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = scratch("parse");
    let path = dir.join("junk.json");
    std::fs::write(&path, "{\"schema\": \"ring.v1\", \"rank\": 2}").unwrap();
    assert_eq!(bin().arg("validate").arg(&path).status().unwrap().code(), Some(2));
    assert_eq!(bin().args(["validate", "/nonexistent.json"]).status().unwrap().code(), Some(2));
    assert_eq!(bin().args(["frobnicate"]).status().unwrap().code(), Some(2));
    let seeded = bin().args(["validate"]).arg(&path).env("FUSCOND_SEED", "x").status().unwrap();
    assert_eq!(seeded.code(), Some(2));
}

#[test]
fn degeneracy_maps_to_3() {
    use fuscond::cli::exit_status;
    use fuscond::Error;
    assert_eq!(exit_status(&Error::Degenerate("x".into())), 3);
    assert_eq!(exit_status(&Error::Numerical("x".into())), 3);
    assert_eq!(exit_status(&Error::TheoremViolation("x".into())), 1);
    assert_eq!(exit_status(&Error::Parse("x".into())), 2);
}

#[test]
fn digits_flag_warns_when_clamped() {
    let out = bin().args(["--digits", "64", "example", "toric"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}
