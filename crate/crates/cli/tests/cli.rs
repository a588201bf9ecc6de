use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

fn check(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duplicial"))
        .arg("check")
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), text).unwrap();
    f
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn suite<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["suites"].as_array().unwrap().iter().find(|s| s["name"] == name).unwrap()
}

#[test]
fn c2_smoke_passes() {
    let out = check(&[scenario("c2_smoke.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["summary"]["satisfied"], true);
    assert_eq!(r["scenario"]["group"], "C2");
}

#[test]
fn c3_loday_all_suites_satisfied() {
    let out = check(&[scenario("c3_loday.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["suites"].as_array().unwrap().len(), 10);
    let dup = suite(&r, "duplicial");
    let closed = dup["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"].as_str().unwrap().starts_with("t closed = t composite"))
        .unwrap();
    assert_eq!(closed["expected"], "fail");
    assert_eq!(closed["observed"], "fail");
    assert!(closed["witness"].is_object());
}

#[test]
fn suite_flag_overrides_and_cap_is_echoed() {
    let out = check(&[scenario("c3_loday.toml").to_str().unwrap(), "--suite", "homology", "--cap", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["level_cap"], 2);
    let names: Vec<&str> = r["suites"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["homology"]);
    assert!(suite(&r, "homology").get("elapsed_ms").is_none());
}

#[test]
fn lax_colax_off_identity_is_a_satisfied_failure() {
    let f = write_temp(
        r#"
[group]
kind = "cyclic"
n = 3
[gsets.L]
kind = "conj"
[gsets.pt]
kind = "point"
[[coefficients]]
name = "c"
L = "L"
N = "pt"
action = "conjugation"
h = [0, 0, 0]
f = [0]
a_bar = 2
"#,
    );
    let out = check(&[f.path().to_str().unwrap(), "--suite", "lax-colax"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    for c in suite(&r, "lax-colax")["checks"].as_array().unwrap() {
        assert_eq!(c["expected"], "fail");
        assert_eq!(c["observed"], "fail");
        assert_eq!(c["satisfied"], true);
        assert!(c["witness"].is_object());
    }
}

#[test]
fn non_stabilizing_alpha_fails_both_ways_and_agrees() {
    let f = write_temp(
        r#"
[group]
kind = "cyclic"
n = 2
[gsets.R]
kind = "regular"
[[coefficients]]
name = "c"
L = "R"
N = "R"
action = "conjugation"
h = [1, 1]
f = [0, 1]
"#,
    );
    let out = check(&[f.path().to_str().unwrap(), "--suite", "cyclicity"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let row = &suite(&r, "cyclicity")["tables"]["configurations"][0];
    assert_eq!(row["brute"], false);
    assert_eq!(row["criterion"], false);
    assert!(row["brute_witness"].is_array());
}

#[test]
fn report_file_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = check(&[
        scenario("c2_smoke.toml").to_str().unwrap(),
        "--report",
        path.to_str().unwrap(),
        "--timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(r["suites"][0]["elapsed_ms"].is_u64());
}

#[test]
fn input_errors_exit_two() {
    let out = check(&["/nonexistent/scenario.toml"]);
    assert_eq!(out.status.code(), Some(2));

    let f = write_temp("[group]\nkind = \"cyclic\"\nn = 2\n[gsets.L]\nkind = \"regular\"\n[[coefficients]]\nname = \"c\"\nL = \"L\"\nN = \"M\"\naction = \"translation\"\nh = [0, 1]\nf = []\n");
    let out = check(&[f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("\"M\"") && err.contains("line 9"), "{err}");

    let out = check(&[scenario("c2_smoke.toml").to_str().unwrap(), "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lax_colax_sweeps_every_a_bar_without_coefficients() {
    let f = write_temp("[group]\nkind = \"cyclic\"\nn = 2\n[gsets.pt]\nkind = \"point\"\n");
    let out = check(&[f.path().to_str().unwrap(), "--suite", "lax-colax"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(suite(&r, "lax-colax")["checks"].as_array().unwrap().len(), 4);
}
