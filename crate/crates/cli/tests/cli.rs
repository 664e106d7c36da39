//! End-to-end tests that drive the compiled binary the way a shell user
//! would: exit codes, JSON wire formats, cache behavior, determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use dsl_core::{dmr0_basis, ihara_bracket, lie_theta, Series};

fn dsl() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dsl"));
    cmd.env_remove("DSL_CACHE");
    cmd.env_remove("DSL_SEED");
    cmd
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn write_input(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).expect("write input");
    path
}

#[test]
fn compute_dmr0_reports_the_known_dimension_and_caches() {
    let cache = tempfile::tempdir().unwrap();
    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path()).args(["compute", "dmr0", "--degree", "3"]);
    let first = run(&mut cmd);
    assert!(first.status.success(), "stderr: {}", stderr_str(&first));

    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&first)).unwrap();
    assert_eq!(parsed["object"], "dmr0");
    assert_eq!(parsed["degree"], 3);
    assert_eq!(parsed["dim"], 1);
    assert_eq!(parsed["ambient_dim"], 2);
    assert!(stdout_str(&first).ends_with('\n'), "output is newline-terminated");

    let record = cache.path().join("dmr0-3.json");
    assert!(record.exists(), "cache record written");

    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path()).args(["compute", "dmr0", "--degree", "3"]);
    let second = run(&mut cmd);
    assert_eq!(first.stdout, second.stdout, "repeat runs are byte-identical");
}

#[test]
fn compute_recovers_from_a_corrupted_cache_record() {
    let cache = tempfile::tempdir().unwrap();
    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path()).args(["compute", "ginert", "--degree", "3"]);
    let first = run(&mut cmd);
    assert!(first.status.success());

    let record = cache.path().join("ginert-3.json");
    fs::write(&record, "garbage").unwrap();

    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path()).args(["compute", "ginert", "--degree", "3"]);
    let second = run(&mut cmd);
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "recomputation matches the original");

    let rewritten = fs::read_to_string(&record).unwrap();
    assert!(rewritten.contains("\"schema\""), "record was rewritten after corruption");
}

#[test]
fn compute_honors_the_cache_env_fallback() {
    let cache = tempfile::tempdir().unwrap();
    let mut cmd = dsl();
    cmd.env("DSL_CACHE", cache.path());
    cmd.args(["compute", "ginert", "--degree", "2"]);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["dim"], 0, "the inertial slice is zero in degree 2");
    assert!(cache.path().join("ginert-2.json").exists());
}

#[test]
fn compute_rejects_degree_below_two() {
    let cache = tempfile::tempdir().unwrap();
    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path()).args(["compute", "dmr0", "--degree", "1"]);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_str(&out).contains("at least 2"));
}

#[test]
fn verify_coassoc_passes_and_reports_every_check() {
    let mut cmd = dsl();
    cmd.args(["verify", "coassoc", "--max-degree", "4"]);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["suite"], "coassoc");
    assert_eq!(report["pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_push_passes_at_the_default_degree() {
    let mut cmd = dsl();
    cmd.args(["verify", "push"]);
    let out = run(&mut cmd);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
}

#[test]
fn verify_runs_are_deterministic_for_a_fixed_seed() {
    let mut cmd = dsl();
    cmd.args(["verify", "torsor", "--max-degree", "4", "--seed", "7"]);
    let first = run(&mut cmd);
    assert!(first.status.success());

    let mut cmd = dsl();
    cmd.args(["verify", "torsor", "--max-degree", "4", "--seed", "7"]);
    let second = run(&mut cmd);
    assert_eq!(first.stdout, second.stdout);

    let mut cmd = dsl();
    cmd.env("DSL_SEED", "7");
    cmd.args(["verify", "torsor", "--max-degree", "4"]);
    let via_env = run(&mut cmd);
    assert_eq!(first.stdout, via_env.stdout, "DSL_SEED matches --seed");
}

#[test]
fn verify_rejects_a_max_degree_below_two() {
    let mut cmd = dsl();
    cmd.args(["verify", "ihara", "--max-degree", "1"]);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_push_rotates_a_monomial() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        dir.path(),
        "in.json",
        r#"{"alphabet":["e0","e1"],"max_degree":2,"terms":{"01":"1/1"}}"#,
    );
    let mut cmd = dsl();
    cmd.arg("apply").arg("push").arg(&input);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["terms"]["10"], "1/1");
    assert_eq!(parsed["terms"].as_object().unwrap().len(), 1);
}

#[test]
fn apply_theta_matches_the_library_on_an_inert_element() {
    let dir = tempfile::tempdir().unwrap();
    let sigma = dmr0_basis(3).into_iter().next().expect("degree 3 is one-dimensional");
    let input =
        write_input(dir.path(), "sigma.json", &serde_json::to_string(&sigma).unwrap());
    let mut cmd = dsl();
    cmd.arg("apply").arg("theta").arg(&input);
    let out = run(&mut cmd);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let image: Series = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(image, lie_theta(&sigma).unwrap());
}

#[test]
fn apply_theta_rejects_a_non_inert_element() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        dir.path(),
        "bracket.json",
        r#"{"alphabet":["e0","e1"],"max_degree":2,"terms":{"01":"1/1","10":"-1/1"}}"#,
    );
    let mut cmd = dsl();
    cmd.arg("apply").arg("theta").arg(&input);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(1), "domain violation is a failed verification");
    assert!(stderr_str(&out).contains("push-invariant"));
}

#[test]
fn apply_ihara_matches_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let a = dmr0_basis(3).into_iter().next().unwrap().with_truncation(5);
    let b: Series = serde_json::from_str(
        r#"{"alphabet":["e0","e1"],"max_degree":5,"terms":{"01":"1/1","10":"-1/1"}}"#,
    )
    .unwrap();
    let input = write_input(
        dir.path(),
        "pair.json",
        &serde_json::to_string(&vec![a.clone(), b.clone()]).unwrap(),
    );
    let mut cmd = dsl();
    cmd.arg("apply").arg("ihara").arg(&input);
    let out = run(&mut cmd);
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let bracket: Series = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(bracket, ihara_bracket(&a, &b));
    assert!(!bracket.is_zero(), "the example is chosen to be nonzero");
}

#[test]
fn apply_delta_w_splits_a_single_letter() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        dir.path(),
        "e1.json",
        r#"{"alphabet":["e0","e1"],"max_degree":1,"terms":{"1":"1/1"}}"#,
    );
    let mut cmd = dsl();
    cmd.arg("apply").arg("delta_w").arg(&input);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed["terms"]["1|"], "1/1");
    assert_eq!(parsed["terms"]["|1"], "1/1");
    assert_eq!(parsed["terms"].as_object().unwrap().len(), 2);
}

#[test]
fn apply_rejects_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(dir.path(), "bad.json", "not json");
    let mut cmd = dsl();
    cmd.arg("apply").arg("push").arg(&input);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_rejects_a_missing_file() {
    let mut cmd = dsl();
    cmd.args(["apply", "push", "/nonexistent/input.json"]);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn apply_rejects_the_wrong_alphabet() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_input(
        dir.path(),
        "xy.json",
        r#"{"alphabet":["x","y"],"max_degree":2,"terms":{"01":"1/1"}}"#,
    );
    let mut cmd = dsl();
    cmd.arg("apply").arg("push").arg(&input);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommands_are_usage_errors() {
    let mut cmd = dsl();
    cmd.args(["verify", "nosuch"]);
    let out = run(&mut cmd);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_output_renders_human_readable_rows() {
    let cache = tempfile::tempdir().unwrap();
    let mut cmd = dsl();
    cmd.args(["--cache-dir"]).arg(cache.path());
    cmd.args(["--out", "table", "compute", "dmr0", "--degree", "3"]);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("dim"));
    assert!(text.contains("basis[0]"));

    let mut cmd = dsl();
    cmd.args(["--out", "table", "verify", "push", "--max-degree", "4"]);
    let out = run(&mut cmd);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("PASS"));
    assert!(text.contains("result"));
}
