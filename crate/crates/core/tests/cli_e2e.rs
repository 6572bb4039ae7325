use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_sumset-growth");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const INTS_012: &str = r#"{"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0, 1, 2]]}"#;
const INTS_013: &str = r#"{"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0, 1, 3]]}"#;
const MOD6: &str = r#"{"semigroup": {"type": "modular", "n": 6}, "sets": [[0, 1]]}"#;
const TWO_SETS: &str = r#"{"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0, 1], [0, 1]]}"#;

#[test]
fn grow_prints_table_and_csv() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "a.json", INTS_013);
    let out = run(&["grow", s(&inst), "--h-max", "4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "h,cardinality\n1,3\n2,6\n3,9\n4,12\n");

    let out = run(&["grow", s(&inst), "--h-max", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn grow_of_zero_is_constant() {
    let dir = TempDir::new().unwrap();
    let inst = write(
        &dir,
        "z.json",
        r#"{"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0]]}"#,
    );
    let out = run(&["grow", s(&inst), "--h-max", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().skip(1).all(|l| l.ends_with(",1")));
}

#[test]
fn parse_errors_exit_2_with_location() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.json",
        "{\n  \"semigroup\": {\"type\": \"lattice\", \"dim\": 1},\n  \"sets\": [[0, 1,]]\n}",
    );
    let out = run(&["grow", s(&bad)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let invalid = write(
        &dir,
        "inv.json",
        r#"{"semigroup": {"type": "modular", "n": 6}, "sets": [[0, 6]]}"#,
    );
    let out = run(&["khovanskii", s(&invalid)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("sets[0][1]"), "{}", stderr(&out));

    let missing = dir.path().join("nope.json");
    assert_eq!(code(&run(&["grow", s(&missing)])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn grow_needs_exactly_one_set() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "two.json", TWO_SETS);
    assert_eq!(code(&run(&["grow", s(&inst)])), 2);
}

#[test]
fn grow_resource_cap_exits_3() {
    let dir = TempDir::new().unwrap();
    let inst = write(
        &dir,
        "z2.json",
        r#"{"semigroup": {"type": "lattice", "dim": 2}, "sets": [[[0, 0], [1, 0], [0, 1]]]}"#,
    );
    let out = run(&["grow", s(&inst), "--h-max", "20", "--element-cap", "50"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn khovanskii_certifies_golden_instances() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "a.json", INTS_012);
    let out = run(&["khovanskii", s(&inst), "--no-timing"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["verdict"], "certified");
    assert_eq!(report["polynomial"]["display"], "2/1·h + 1/1");
    assert_eq!(report["polynomial"]["thresholds"][0], 2);
    assert!(report["timing"].is_null());

    let inst = write(&dir, "m.json", MOD6);
    let out = run(&["khovanskii", s(&inst), "--format", "table"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("polynomial: 6/1"));
}

#[test]
fn khovanskii_over_cap_exits_5_and_still_writes_report() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "a.json", INTS_012);
    let rep = dir.path().join("r.json");
    let out = run(&["khovanskii", s(&inst), "--subset-cap", "0", "-o", s(&rep)]);
    assert_eq!(code(&out), 5);
    let report: Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    assert_eq!(report["verdict"], "inconclusive");
    assert_eq!(report["config"]["subset_cap"], 0);
}

#[test]
fn linear_form_examples() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "two.json", TWO_SETS);
    let out = run(&["linear-form", s(&inst), "--no-timing"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["polynomial"]["display"], "1/1·h1 + 1/1·h2 + 1/1");

    let out = run(&["linear-form", s(&inst), "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("h1,h2,cardinality\n"));

    // r = 1 agrees with the univariate command
    let one = write(&dir, "one.json", INTS_012);
    let uni: Value = serde_json::from_slice(&run(&["khovanskii", s(&one)]).stdout).unwrap();
    let multi: Value = serde_json::from_slice(&run(&["linear-form", s(&one)]).stdout).unwrap();
    assert_eq!(uni["polynomial"]["terms"], multi["polynomial"]["terms"]);

    let mixed = write(
        &dir,
        "mixed.json",
        r#"{"semigroup": {"type": "lattice", "dim": 1}, "sets": [[0, 1], [[0, 1]]]}"#,
    );
    assert_eq!(code(&run(&["linear-form", s(&mixed)])), 2);
}

#[test]
fn verify_accepts_fresh_reports() {
    let dir = TempDir::new().unwrap();
    for (name, text, cmd) in [
        ("a", INTS_012, "khovanskii"),
        ("m", MOD6, "khovanskii"),
        ("l", TWO_SETS, "linear-form"),
    ] {
        let inst = write(&dir, &format!("{name}.json"), text);
        let rep = dir.path().join(format!("{name}.report.json"));
        assert_eq!(code(&run(&[cmd, s(&inst), "-o", s(&rep)])), 0);
        let out = run(&["verify", s(&rep), s(&inst)]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }
}

#[test]
fn verify_catches_a_perturbed_coefficient() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "a.json", INTS_012);
    let rep = dir.path().join("r.json");
    assert_eq!(code(&run(&["khovanskii", s(&inst), "-o", s(&rep)])), 0);

    let mut report: Value = serde_json::from_str(&fs::read_to_string(&rep).unwrap()).unwrap();
    report["polynomial"]["terms"][0]["coefficient"] = Value::from("3/2");
    let bad = write(&dir, "bad.json", &serde_json::to_string_pretty(&report).unwrap());
    let out = run(&["verify", s(&bad), s(&inst)]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("h = [2]"), "{}", stderr(&out));
}

#[test]
fn verify_rejects_a_foreign_instance() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", INTS_012);
    let b = write(&dir, "b.json", INTS_013);
    let rep = dir.path().join("r.json");
    assert_eq!(code(&run(&["khovanskii", s(&a), "-o", s(&rep)])), 0);
    let out = run(&["verify", s(&rep), s(&b)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("different instance"));
}

#[test]
fn reports_are_byte_identical_without_timing() {
    let dir = TempDir::new().unwrap();
    for (text, cmd) in [(INTS_013, "khovanskii"), (TWO_SETS, "linear-form")] {
        let inst = write(&dir, "i.json", text);
        let first = run(&[cmd, s(&inst), "--no-timing"]).stdout;
        let second = run(&["--threads", "1", cmd, s(&inst), "--no-timing"]).stdout;
        assert_eq!(first, second);
        let parsed = sumset_growth::report::ReportFile::from_json(std::str::from_utf8(&first).unwrap()).unwrap();
        assert_eq!(parsed.to_json().as_bytes(), first.as_slice());
    }
}

#[test]
fn help_lists_engine_flags() {
    let out = run(&["khovanskii", "--help"]);
    assert_eq!(code(&out), 0);
    let help = stdout(&out);
    for flag in [
        "--height-bound",
        "--max-height-bound",
        "--stable-margin",
        "--window",
        "--subset-cap",
        "--enum-cap",
        "--format",
        "--no-timing",
    ] {
        assert!(help.contains(flag), "{flag} missing");
    }
}
