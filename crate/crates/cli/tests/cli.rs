//! End-to-end tests of the binary: flag parsing, output formats, exit
//! codes and run-to-run determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dyck-hankel"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_empty_set_is_catalan() {
    let out = run(&["count", "--n", "4", "--set", "finite:"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "14\n");
}

#[test]
fn count_periodic_set_is_riordan_value() {
    let out = run(&["count", "--n", "4", "--set", "periodic:m=2,V=1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn count_dump_paths_lists_admissible_paths() {
    let out = run(&["count", "--n", "2", "--set", "finite:1", "--dump-paths"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\nUUDD\n");
}

#[test]
fn malformed_set_exits_2() {
    let out = run(&["count", "--n", "4", "--set", "nope:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration_guard_exits_3() {
    let out = run(&["count", "--n", "15", "--set", "finite:"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hankel_residue_family_with_period_line() {
    let out = run(&["hankel", "--series", "fmr:m=5,r=5", "--n", "12"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1 0 0 0 1 1 1 0 0 0 1 1\nperiod=6 word=(1,0,0,0,1,1)*\n"
    );
}

#[test]
fn hankel_csv_rows() {
    let out = run(&[
        "hankel",
        "--series",
        "fmr:m=2,r=1",
        "--n",
        "6",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,value\n1,1\n2,0\n3,-1\n4,-1\n5,0\n6,1\n");
}

#[test]
fn hankel_insufficient_order_exits_3() {
    let out = run(&[
        "hankel",
        "--series",
        "fmr:m=2,r=1",
        "--n",
        "6",
        "--order",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn hankel_arbitrary_set_series() {
    let out = run(&[
        "hankel",
        "--series",
        "set:periodic:m=5,V=1,2,4",
        "--n",
        "10",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("1 0 -1 -1 -1 -1 0 1 1 1\n"));
}

#[test]
fn tau_trace_shows_cycle() {
    let out = run(&["tau", "--m", "3", "--r", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("cycle: start=1 delta=4 sigma=-1"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("step")).count(), 3);
}

#[test]
fn tau_modulus_one_exits_2() {
    let out = run(&["tau", "--m", "1", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tau_modulus_guard_exits_3() {
    let out = run(&["tau", "--m", "17", "--r", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn tau_json_is_machine_readable() {
    let out = run(&["tau", "--m", "5", "--r", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["m"], 5);
    assert_eq!(v["delta"], 6);
    assert_eq!(v["sigma"], "1");
    assert_eq!(v["cycle_start"], 1);
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);
    // Coefficient lists are decimal strings.
    assert!(v["steps"][0]["u_num"][0].is_string());
}

#[test]
fn verify_theorem_small_range_json() {
    let out = run(&[
        "verify", "--scope", "theorem", "--m-max", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["status"], "pass");
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 5); // (2,1) (2,2) (3,1) (3,2) (3,3)
    for case in cases {
        assert_eq!(case["status"], "pass");
        assert!(!case["predicted"].as_array().unwrap().is_empty());
        assert_eq!(
            case["predicted"].as_array().unwrap().len(),
            case["computed"].as_array().unwrap().len()
        );
        assert!(case["tau_chain"]["delta"].is_number());
        assert!(case["tau_chain"]["sigma"].is_string());
    }
}

#[test]
fn verify_same_config_byte_identical() {
    let dir = std::env::temp_dir().join("dyck_hankel_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let f1 = dir.join("a.json");
    let f2 = dir.join("b.json");
    for (path, jobs) in [(&f1, "1"), (&f2, "2")] {
        let out = bin()
            .args([
                "verify", "--scope", "all", "--m-max", "3", "--format", "json", "--seed", "99",
                "--jobs", jobs, "--output",
            ])
            .arg(path)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
    }
    let a = std::fs::read(&f1).unwrap();
    let b = std::fs::read(&f2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "outputs differ across parallelism settings");
    cleanup(&dir);
}

fn cleanup(dir: &Path) {
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn verify_m_min_validation() {
    let out = run(&["verify", "--scope", "theorem", "--m-min", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--scope", "theorem", "--m-max", "17"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["count", "--n", "4", "--set", "finite:", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
