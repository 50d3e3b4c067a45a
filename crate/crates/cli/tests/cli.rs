use std::process::{Command, Output};

fn slicegroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slicegroup"))
        .env_remove("SLICEGROUP_CACHE_DIR")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = slicegroup(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tau0_of_c4_and_its_order_two_subgroup() {
    let text = stdout(&["tau0", "C4", "--slice", "#2"]);
    assert!(text.contains("slice            (C2, 1)"), "{text}");
    assert!(text.contains("M                C2\n"), "{text}");
}

#[test]
fn burnside_m_table_csv_row() {
    let csv = stdout(&["burnside", "C2", "--m-table", "--format", "csv"]);
    assert!(csv.lines().any(|l| l.starts_with("C2,1/2")), "{csv}");
}

#[test]
fn json_rationals_and_schema() {
    let json = stdout(&["burnside", "C2", "--m-table", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["group"], "C2");
    assert_eq!(v["command"], "burnside");
    let row = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["table"] == "m-table" && r["N"] == "C2")
        .unwrap();
    assert_eq!(row["m"], serde_json::json!({"num": 1, "den": 2}));
}

#[test]
fn counterexample_command_passes() {
    let text = stdout(&["remark22"]);
    assert!(text.contains("verdict   PASS"), "{text}");
    assert!(text.contains("(G, S) is not a T-slice"));
}

#[test]
fn generator_expressions_and_addressing() {
    let text = stdout(&["info", "gens: (0 1 2 3), (0 2)"]);
    assert!(text.contains("order              8"), "{text}");
    assert!(text.contains("structure          D8"), "{text}");
    let by_index = stdout(&["slices", "S3", "--m-table", "#2"]);
    let by_gens = stdout(&["slices", "S3", "--m-table", "{1}"]);
    let subgroups = stdout(&["subgroups", "S3"]);
    assert!(subgroups.contains("#2        2      C2         #2     no      #2          {1}"), "{subgroups}");
    assert_eq!(by_index, by_gens);
    let pair = stdout(&["mobius", "S3", "--pair", "{},#6"]);
    assert!(pair.contains("#1  #6  3"), "{pair}");
}

#[test]
fn errors_exit_with_status_two() {
    for (args, needle) in [
        (vec!["subgroups", "S3", "--format", "text"], ""),
        (vec!["tau0", "S3", "--slice", "#7"], "not found"),
        (vec!["tau0", "S3", "--slice", "{9}"], "not found"),
        (vec!["info", "C2 y C3"], "position 3"),
        (vec!["info", "Z5"], "unknown group family"),
        (vec!["info", "S5"], "cap"),
        (vec!["mobius", "S3", "--pair", "#6,#1"], "not contained"),
        (vec!["verify", "--check", "nope"], "unknown check"),
    ] {
        let out = slicegroup(&args);
        if needle.is_empty() {
            assert!(out.status.success());
            continue;
        }
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr).to_lowercase();
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn verify_catalog_file_with_skipped_group() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("catalog.txt");
    std::fs::write(&path, "// small groups\nC3\n\nS5\n").unwrap();
    let out = slicegroup(&["verify", "--catalog", path.to_str().unwrap(), "--check", "crapo"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("crapo    C3     4          0         PASS"), "{text}");
    assert!(text.contains("SKIP"), "{text}");
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let out = slicegroup(&["verify", "--catalog", empty.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn cache_directory_from_environment_and_unwritable_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_slicegroup"))
        .env("SLICEGROUP_CACHE_DIR", dir.path())
        .args(["subgroups", "S4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), stdout(&["subgroups", "S4"]));

    let file = dir.path().join("plain-file");
    std::fs::write(&file, "").unwrap();
    let out = slicegroup(&["--cache-dir", file.to_str().unwrap(), "info", "C6"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), stdout(&["info", "C6"]));
}
