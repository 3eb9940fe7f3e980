use malmsten::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE, FIXTURES_ENV};
use malmsten::identities::catalog;
use std::path::PathBuf;
use std::process::Command;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("malmsten").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_malmsten"))
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("malmsten-cli-{}-{name}", std::process::id()))
}

#[test]
fn show_prints_the_anchor() {
    let (code, out, _) = call(&["show", "THM"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0< Re(m) < 1"), "{out}");
    assert!(out.contains("class:      regular"));
    assert!(out.contains("m, k, n, a, b, gamma"), "{out}");
}

#[test]
fn verify_e4_passes() {
    let (code, out, _) = call(&["verify", "E4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("E4") && l.contains("pass")), "{out}");
    assert!(out.contains("1 pass, 0 fail, 0 skipped"));
}

#[test]
fn unreachable_tolerance_exits_one() {
    let (code, out, _) = call(&["verify", "all", "--tol", "1e-20"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains(" fail"));
}

#[test]
fn domain_errors_echo_side_conditions() {
    let (code, _, err) = call(&["verify", "GR2", "--param", "v=3.5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("0< Re(v) < n"), "{err}");
}

#[test]
fn usage_errors() {
    for args in [
        vec!["frobnicate"],
        vec!["verify"],
        vec!["verify", "E99"],
        vec!["verify", "E4", "--tol", "-1"],
        vec!["verify", "E4", "--tol", "0"],
        vec!["verify", "E4", "--param", "m=0.5"],
        vec!["verify", "all", "--param", "k=1"],
        vec!["verify", "THM", "--param", "m=abc"],
        vec!["show", "nope"],
        vec!["sweep", "E4"],
        vec!["sweep", "THM", "--grid", "m.re=0.1..0.9"],
        vec!["list", "--unknown-flag"],
        vec!["--class-tol", "pv=0", "list"],
        vec!["--class-tol", "nonsense=1e-3", "list"],
        vec!["--max-level", "0", "list"],
        vec!["fixtures"],
        vec!["fixtures", "--check", "/nonexistent/golden.json"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn every_id_round_trips() {
    let (code, listing, _) = call(&["list"]);
    assert_eq!(code, EXIT_OK);
    for e in &catalog().entries {
        assert!(listing.lines().any(|l| l.split_whitespace().next() == Some(e.id.as_str())), "{}", e.id);
        let (code, shown, _) = call(&["show", &e.id]);
        assert_eq!(code, EXIT_OK, "{}", e.id);
        assert!(shown.contains(&e.anchor), "{}", e.id);
        let (code, out, err) = call(&["verify", &e.id, "--format", "records"]);
        assert_ne!(code, EXIT_USAGE, "{}: {err}", e.id);
        let rec: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(rec["id"], e.id.as_str());
    }
}

#[test]
fn list_records() {
    let (code, out, _) = call(&["list", "--format", "records"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 49);
    assert_eq!(rows[0]["id"], "THM");
    assert_eq!(rows.iter().filter(|r| r["experimental"] == true).count(), 3);
}

#[test]
fn complex_parameters_are_accepted() {
    let (code, out, _) = call(&["verify", "THM", "-p", "m=0.3+0.6I", "-p", "k=2", "--format", "records"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let rec: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert!(rec["params"].as_str().unwrap().starts_with("m=0.3+0.6I,k=2"));
}

#[test]
fn identical_sweeps_identical_reports() {
    let strip = |s: String| -> Vec<serde_json::Value> {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("runtime_ms");
                v
            })
            .collect()
    };
    let args = ["sweep", "GR2", "--seed", "5", "--format", "records"];
    let (c1, a, _) = call(&args);
    let (c2, b, _) = call(&args);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(strip(a), strip(b));
}

#[test]
fn sweep_with_custom_grid() {
    let (code, out, _) = call(&["sweep", "E1", "--grid", "k=1|2;beta=2;gamma=3|5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("4 pass, 0 fail, 0 skipped"), "{out}");
}

#[test]
fn class_tolerance_override() {
    let (_, out, _) = call(&["--class-tol", "complex-branch=1e-30", "verify", "E4", "--format", "records"]);
    let rec: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec["tol"], 1e-30);
    assert_eq!(rec["status"], "fail");
}

#[test]
fn selftest_exits_zero() {
    let (code, out, _) = call(&["selftest"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("lerch recurrence"));
    assert!(!out.contains("fail"));
}

#[test]
fn output_file() {
    let path = scratch("report.txt");
    let (code, out, _) = call(&["verify", "E4", "--output", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.contains("E4"));
}

#[test]
fn fixtures_check_default_and_env() {
    let status = bin().args(["fixtures", "--check"]).env_remove(FIXTURES_ENV).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK), "{}", String::from_utf8_lossy(&status.stderr));
    assert!(String::from_utf8_lossy(&status.stdout).contains("0 mismatches"));

    let empty = scratch("empty.json");
    std::fs::write(&empty, "").unwrap();
    let status = bin().args(["fixtures", "--check"]).env(FIXTURES_ENV, &empty).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&status.stdout).contains("0 checked, 0 mismatches"));

    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"fixtures": [{"key": "gamma(z=3.7)", "re": "4.2", "im": "0"}]}"#).unwrap();
    let status = bin().args(["fixtures", "--check", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_FAIL));
    assert!(String::from_utf8_lossy(&status.stdout).contains("mismatch gamma(z=3.7)"));
    std::fs::remove_file(&empty).ok();
    std::fs::remove_file(&bad).ok();
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify", "E4"]), Some(EXIT_OK));
    assert_eq!(code(&["verify", "all", "--tol", "1e-20"]), Some(EXIT_FAIL));
    assert_eq!(code(&["verify", "GR2", "--param", "v=3.5"]), Some(EXIT_USAGE));
    assert_eq!(code(&["bogus"]), Some(EXIT_USAGE));
    assert_eq!(code(&["--help"]), Some(EXIT_OK));
}
