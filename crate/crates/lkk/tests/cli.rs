//! End-to-end tests of the `lkk` binary: exit codes, canonical output, and
//! file-format round trips.

use std::path::Path;
use std::process::{Command, Output};

fn lkk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lkk"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) {
    std::fs::write(dir.join(name), content).unwrap();
}

const R2: &str = r#"{"group": {"free_rank": 1, "torsion": []}, "vertices": ["v"], "edges": [{"id":"e0","src":"v","dst":"v"},{"id":"e1","src":"v","dst":"v"}]}"#;
const K2: &str = r#"{"group": {"free_rank": 1, "torsion": []}, "vertices": ["a","b"], "edges": [{"id":"e0","src":"a","dst":"a"},{"id":"e1","src":"a","dst":"b"},{"id":"e2","src":"b","dst":"a"},{"id":"e3","src":"b","dst":"b"}]}"#;
const SWAPPED: &str = r#"{"group": {"free_rank": 1, "torsion": []}, "vertices": ["a","b"], "edges": [{"id":"e0","src":"a","dst":"b"},{"id":"e1","src":"a","dst":"b"},{"id":"e2","src":"b","dst":"a"}]}"#;

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    let ok = lkk(&["validate", "r2.json"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["violations"].as_array().unwrap().len(), 0);

    write(
        dir.path(),
        "broken.json",
        r#"{"group": {"free_rank": 1}, "vertices": ["v"], "edges": [{"id":"e","src":"v","dst":"w"}]}"#,
    );
    let bad = lkk(&["validate", "broken.json"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(json(&bad)["violations"][0], "edge e: unknown dst w");

    write(dir.path(), "garbage.json", "{not json");
    let garbage = lkk(&["validate", "garbage.json"], dir.path());
    assert_eq!(garbage.status.code(), Some(2));
    assert!(!garbage.stderr.is_empty());
}

#[test]
fn bfgr_report_and_modulus() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    let out = lkk(&["bfgr", "r2.json", "--mod", "3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["base"], "Z[s^±1]");
    assert_eq!(v["relations"][0][0], "1*s^0 + -2*s^1");
    assert_eq!(v["battery"]["eval_sigma_minus_1"]["display"], "Z/3");
    assert_eq!(v["coefficients_mod"]["coker_parts"][0]["diagonal_factors"][0], "1*s^0 + 1*s^1");
    assert_eq!(v["coefficients_mod"]["kernel_is_zero"], true);

    // dual of a sink-only graph is the zero module
    write(
        dir.path(),
        "sink.json",
        r#"{"group": {"free_rank": 1}, "vertices": ["v"], "edges": []}"#,
    );
    let out = lkk(&["bfgr", "sink.json", "--dual"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["generators"].as_array().unwrap().len(), 0);
}

#[test]
fn cover_round_trips_through_validate() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "r1.json",
        r#"{"group": {"free_rank": 1}, "vertices": ["v"], "edges": [{"id":"e","src":"v","dst":"v"}]}"#,
    );
    let out = lkk(&["cover", "r1.json", "--radius", "1"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["vertices"], serde_json::json!(["v@-1", "v@0", "v@1"]));
    write(dir.path(), "cover.json", std::str::from_utf8(&out.stdout).unwrap());
    let check = lkk(&["validate", "cover.json"], dir.path());
    assert_eq!(check.status.code(), Some(0));

    // window radius is mandatory over Z
    let missing = lkk(&["cover", "r1.json"], dir.path());
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn colimit_and_vdb_exit_zero_on_consistency() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    let out = lkk(&["colimit-check", "r2.json", "--stages", "5"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "consistent up to radius 5");

    let out = lkk(&["vdb", "r2.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn classify_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    write(dir.path(), "k2.json", K2);
    write(dir.path(), "swapped.json", SWAPPED);

    let out = lkk(
        &["classify", "r2.json", "k2.json", "--degree-bound", "2", "--coeff-bound", "2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "isomorphic");
    assert_eq!(v["certificate"]["verified"], true);

    let out = lkk(&["classify", "r2.json", "swapped.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "distinguished");
    assert_eq!(v["distinguished_by"], "eval sigma=-1");
    assert_eq!(v["left_value"], "Z/3");
    assert_eq!(v["right_value"], "0");
}

#[test]
fn snf_text_format() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "m.txt", "2 2\n2 4\n6 8\n");
    let out = lkk(&["snf", "m.txt"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["d"][0][0], "2");
    assert_eq!(v["d"][1][1], "4");
    assert_eq!(v["identity_checked"], true);
    assert_eq!(v["invariant_factors"], serde_json::json!(["2", "4"]));

    write(dir.path(), "bad.txt", "2 2\n1 2 3\n");
    assert_eq!(lkk(&["snf", "bad.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn enumerate_reports_are_worker_count_independent() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str, path: &str| {
        let out = lkk(
            &[
                "enumerate",
                "--max-vertices",
                "1",
                "--max-multiplicity",
                "2",
                "--jobs",
                jobs,
                "--checks",
                "battery,purity",
                "--report",
                path,
            ],
            dir.path(),
        );
        assert_eq!(out.status.code(), Some(0));
    };
    run("1", "a.json");
    run("8", "b.json");
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["graph_count"], 3);
    assert_eq!(v["collision_classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    let unknown = lkk(
        &["enumerate", "--max-vertices", "1", "--max-multiplicity", "1", "--checks", "nope"],
        dir.path(),
    );
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn config_file_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    write(dir.path(), "k2.json", K2);
    write(
        dir.path(),
        "config.json",
        r#"{"degree_bound_default": 2, "coeff_bound_default": 2, "truncation_radius_default": 5, "prime_bound_default": 7, "jobs": 1}"#,
    );
    let out = lkk(
        &["classify", "r2.json", "k2.json", "--config", "config.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["degree_bound"], 2);
    assert_eq!(v["coeff_bound"], 2);

    write(dir.path(), "bad_config.json", r#"{"degree_bound_default": 0}"#);
    let out = lkk(
        &["classify", "r2.json", "k2.json", "--config", "bad_config.json"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_report() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "r2.json", R2);
    let out = lkk(&["invariants", "r2.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ungraded_bowen_franks"]["display"], "0");
    assert_eq!(v["battery"]["eval_sigma_minus_1"]["display"], "Z/3");
    assert!(v["nonvanishing_witness"].as_str().unwrap().contains("sigma=-1"));
    assert_eq!(v["pointed"]["class_at_sigma_minus_1"][0], "1");
}
