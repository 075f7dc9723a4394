use assert_cmd::Command;

fn acm() -> Command {
    Command::cargo_bin("acm").unwrap()
}

fn stdout_of(args: &[&str]) -> (String, i32) {
    let out = acm().args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

fn json_of(args: &[&str]) -> (serde_json::Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (out, code) = stdout_of(&full);
    (serde_json::from_str(&out).unwrap(), code)
}

#[test]
fn info_reports_dimensions() {
    for (ty, k, dim) in [
        ("E7", "1", 33),
        ("E8", "4", 106),
        ("A1", "1", 1),
        ("G2", "2", 5),
    ] {
        let (doc, code) = json_of(&["info", ty, "--k", k]);
        assert_eq!(code, 0);
        assert_eq!(doc["payload"]["dim"], dim, "{ty} {k}");
    }
    // positional k works too
    let (doc, _) = json_of(&["info", "F4", "3"]);
    assert_eq!(doc["payload"]["dim"], 20);
}

#[test]
fn is_acm_exit_codes() {
    acm()
        .args(["is-acm", "E6", "2", "2,0,1,0,0,0"])
        .assert()
        .code(0);
    acm()
        .args(["is-acm", "E6", "2", "0,0,0,1,1,0", "--oracle"])
        .assert()
        .code(1);
    acm().args(["is-acm", "G2", "1", "0,0"]).assert().code(0);
    // a twist does not change the verdict
    acm()
        .args(["is-acm", "E6", "2", "0,3,0,1,1,0"])
        .assert()
        .code(1);
    acm()
        .args(["is-acm", "E6", "2", "2,-4,1,0,0,0", "--oracle"])
        .assert()
        .code(0);
}

#[test]
fn usage_errors_exit_2() {
    let bad: &[&[&str]] = &[
        &["is-acm", "E6", "2", "1,0,0"],
        &["is-acm", "E6", "2", "-1,0,0,0,0,0"],
        &["is-acm", "E6", "7", "0,0,0,0,0,0"],
        &["is-acm", "E9", "1", "0"],
        &["is-acm", "E6", "2", "a,0,0,0,0,0"],
        &["cohomology", "G2", "1", "0,0", "--twists", "3..1"],
        &["cohomology", "G2", "1", "0,0", "--twists", "1-3"],
        &["cohomology", "G2", "1", "1,0", "--twists", "0..1"],
        &["info", "E6"],
        &["frobnicate"],
    ];
    for args in bad {
        let out = acm().args(*args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn guard_refuses_large_classifications() {
    let out = acm().args(["classify", "E8", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--max-candidates"), "{err}");
    acm()
        .args(["--max-candidates", "10", "classify", "E6", "1"])
        .assert()
        .code(4);
    acm()
        .args(["--max-candidates", "10", "--force", "classify", "G2", "1"])
        .assert()
        .code(0);
}

#[test]
fn tprofile_g2_values() {
    let (doc, code) = json_of(&["tprofile", "G2", "2", "1,0"]);
    assert_eq!(code, 0);
    let values: Vec<&str> = doc["payload"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1", "5/3", "7/3", "3", "2"]);
    assert_eq!(doc["payload"]["m_max"], "3");

    // a non-initialized input is normalized, and says so
    let (doc, _) = json_of(&["tprofile", "G2", "2", "1,-3"]);
    assert_eq!(doc["payload"]["twist"], -3);
    assert!(doc["payload"]["notice"].is_string());
}

#[test]
fn cohomology_of_the_structure_sheaf() {
    let (doc, _) = json_of(&["cohomology", "E6", "2", "0,0,0,0,0,0", "--twists", "0..2"]);
    let rows = doc["payload"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["degree"], 0);
    assert_eq!(rows[0]["dimension"], "1");
    assert!(rows[1]["degree"].is_null());
    assert!(rows[2]["degree"].is_null());
    assert_eq!(rows[2]["vanishes"], true);
}

#[test]
fn formats_render() {
    let (table, code) = stdout_of(&["tprofile", "E6", "2", "2,0,1,0,0,0"]);
    assert_eq!(code, 0);
    assert!(table.contains("15/2"), "{table}");
    let (csv, _) = stdout_of(&["--format", "csv", "classify", "E6", "1"]);
    assert_eq!(csv.lines().count(), 9, "{csv}");
}

#[test]
fn classify_output_is_independent_of_workers() {
    for (ty, k) in [("E6", "1"), ("E7", "7"), ("F4", "1"), ("G2", "2")] {
        for format in ["json", "csv", "table"] {
            let one = stdout_of(&["--format", format, "--workers", "1", "classify", ty, k]);
            let many = stdout_of(&["--format", format, "--workers", "4", "classify", ty, k]);
            assert_eq!(one, many, "{ty} {k} {format}");
        }
    }
}

#[test]
fn verify_fixtures_passes() {
    acm().arg("verify-fixtures").assert().code(0);
}
