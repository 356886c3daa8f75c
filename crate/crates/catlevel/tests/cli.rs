use std::io::{self, Write};
use std::process::Command;

use catlevel::formats::{read_census_csv, CensusJson, RegionsJson};
use catlevel::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("catlevel").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn census_json_example() {
    let (code, out, _) = invoke(&["census", "--kind", "catalan", "--n", "3", "--offsets", "1"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["counts"], serde_json::json!({"1": 12, "2": 12, "3": 6}));
    assert_eq!(doc["total"], 30);
    let parsed: CensusJson = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.to_census().unwrap().total, 30);
}

#[test]
fn per_chamber_census() {
    let (code, out, _) = invoke(&["census", "--n", "3", "--per-chamber", "--use-oracle"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["counts"], serde_json::json!({"1": 2, "2": 2, "3": 1}));
}

#[test]
fn increasing_offsets_are_a_usage_error() {
    let (code, out, err) = invoke(&[
        "census",
        "--kind",
        "catalan",
        "--n",
        "2",
        "--offsets",
        "1,2",
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("decreasing"), "{err}");
}

#[test]
fn malformed_arguments_exit_two() {
    for args in [
        &["census", "--n", "2", "--offsets", "0.5"][..],
        &["census", "--n", "two"],
        &["frobnicate"],
        &["tableau", "--m", "1", "--heights", "0,2"],
        &["level", "--point", "0,1"],
        &["regions", "--n", "2", "--format", "csv"],
    ] {
        assert_eq!(invoke(args).0, 2, "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("census"));
}

#[test]
fn verify_stirling_passes() {
    let (code, out, _) = invoke(&["verify", "stirling", "--offsets", "1", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS"), "{out}");
}

#[test]
fn verify_all_json() {
    let (code, out, _) = invoke(&["verify", "all", "--n-max", "3", "--format", "json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let doc: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["pass"], true, "{line}");
    }
}

struct Broken;

impl Write for Broken {
    fn write(&mut self, _: &[u8]) -> io::Result<usize> {
        Err(io::Error::new(io::ErrorKind::BrokenPipe, "closed"))
    }
    fn flush(&mut self) -> io::Result<()> {
        Ok(())
    }
}

#[test]
fn runtime_errors_exit_one() {
    let mut err = Vec::new();
    let code = run(["catlevel", "census", "--n", "2"], &mut Broken, &mut err);
    assert_eq!(code, 1);
    assert!(String::from_utf8(err).unwrap().starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "regions",
            "--n",
            "3",
            "--offsets",
            "2,1",
            "--kind",
            "semiorder",
        ][..],
        &["census", "--n", "4", "--format", "csv"],
        &["verify", "all", "--n-max", "3"],
    ] {
        assert_eq!(invoke(args), invoke(args), "{args:?}");
    }
}

#[test]
fn csv_round_trip_through_a_file() {
    let (code, out, _) = invoke(&[
        "census",
        "--n",
        "3",
        "--offsets",
        "3/2,1/2",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(out.as_bytes()).unwrap();
    let back = read_census_csv(std::fs::File::open(file.path()).unwrap()).unwrap();
    assert_eq!(back.len(), 1);
    assert_eq!(back[0].spec.n(), 3);
    let (_, json, _) = invoke(&["census", "--n", "3", "--offsets", "3/2,1/2"]);
    let parsed: CensusJson = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.to_census().unwrap(), back[0]);
}

#[test]
fn regions_json_round_trip() {
    let (code, out, _) = invoke(&["regions", "--n", "3", "--kind", "semiorder"]);
    assert_eq!(code, 0);
    let doc: RegionsJson = serde_json::from_str(&out).unwrap();
    let spec = doc.spec.to_spec().unwrap();
    assert_eq!(doc.regions.len(), 19);
    for r in &doc.regions {
        let region = r.to_region(&spec).unwrap();
        assert!(region.contains(region.witness()));
    }
}

#[test]
fn charpoly_spot_values() {
    assert_eq!(
        invoke(&["charpoly", "--n", "2", "--format", "text"]).1,
        "t^2 - 3t\n"
    );
    assert_eq!(
        invoke(&[
            "charpoly",
            "--n",
            "2",
            "--kind",
            "semiorder",
            "--format",
            "text"
        ])
        .1,
        "t^2 - 2t\n"
    );
}

#[test]
fn level_of_a_point() {
    let (code, out, _) = invoke(&["level", "--point", "0,1/2,3", "--offsets", "1"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["level"], 2);
    let (code, _, err) = invoke(&["level", "--point", "0,1,3"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn tableau_and_phi_demo() {
    let (code, out, _) = invoke(&["tableau", "--m", "2", "--heights", "0,1,3"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["multiset"], serde_json::json!([2, 3, 3]));

    let (code, out, _) = invoke(&["phi-demo", "--omega", "(43)(652)(71)", "--point", "0,1/2,5"]);
    assert_eq!(code, 0, "{out}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["round_trip"], true);
}

#[test]
fn binary_matches_library() {
    let args = ["census", "--n", "3", "--format", "text"];
    let output = Command::new(env!("CARGO_BIN_EXE_catlevel"))
        .args(args)
        .env("CATLEVEL_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), invoke(&args).1);

    let bad = Command::new(env!("CARGO_BIN_EXE_catlevel"))
        .args(["census", "--n", "2", "--offsets", "1,2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
