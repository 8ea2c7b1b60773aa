//! The command-line surface: subcommands, hand-off files, exit codes.

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{build_pipeline_fixture, mask_timing, GitFixture, PipelineFixture};

fn clonewatch(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clonewatch"))
        .args(args)
        .current_dir(cwd)
        .env("GIT_CONFIG_GLOBAL", "/dev/null")
        .env("GIT_CONFIG_SYSTEM", "/dev/null")
        .output()
        .expect("spawn clonewatch")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn run_szz(fx: &PipelineFixture) {
    let out = clonewatch(
        &[
            "szz",
            "--cve",
            fx.cve.to_str().unwrap(),
            "--issues",
            fx.issues.to_str().unwrap(),
            "--repo",
            fx.parent.repo.path().to_str().unwrap(),
            "--out",
            fx.out_dir.to_str().unwrap(),
        ],
        fx.dir.path(),
    );
    assert!(out.status.success(), "szz failed: {}", stderr(&out));
}

fn run_filter(fx: &PipelineFixture) {
    let out = clonewatch(
        &[
            "filter",
            "--cve",
            fx.cve.to_str().unwrap(),
            "--manifest",
            fx.manifest.to_str().unwrap(),
            "--out",
            fx.out_dir.to_str().unwrap(),
        ],
        fx.dir.path(),
    );
    assert!(out.status.success(), "filter failed: {}", stderr(&out));
}

fn run_build_test(fx: &PipelineFixture) {
    let out = clonewatch(
        &[
            "build-test",
            "--cve",
            fx.cve.to_str().unwrap(),
            "--annotations",
            fx.annotations.to_str().unwrap(),
            "--out",
            fx.out_dir.to_str().unwrap(),
        ],
        fx.dir.path(),
    );
    assert!(out.status.success(), "build-test failed: {}", stderr(&out));
}

fn run_scan(fx: &PipelineFixture, jobs: &str) -> Output {
    clonewatch(
        &[
            "scan",
            "--out",
            fx.out_dir.to_str().unwrap(),
            "--jobs",
            jobs,
        ],
        fx.dir.path(),
    )
}

#[test]
fn szz_writes_window_file_with_known_commits() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);

    let window: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fx.out_dir.join("window.json")).unwrap())
            .unwrap();
    assert_eq!(window["cve_id"], "CVE-2018-17144");
    let fix_hashes: Vec<&str> = window["window"]["fix_commits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["hash"].as_str().unwrap())
        .collect();
    assert_eq!(fix_hashes, vec![fx.parent.fix_hash.as_str()]);
    let intro_hashes: Vec<&str> = window["window"]["intro_commits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["hash"].as_str().unwrap())
        .collect();
    assert_eq!(intro_hashes, vec![fx.parent.intro_hash.as_str()]);
}

#[test]
fn szz_missing_issue_export_is_stage_tagged_failure() {
    let fx = build_pipeline_fixture();
    let out = clonewatch(
        &[
            "szz",
            "--cve",
            fx.cve.to_str().unwrap(),
            "--issues",
            "/nonexistent/issues.json",
            "--repo",
            fx.parent.repo.path().to_str().unwrap(),
            "--out",
            fx.out_dir.to_str().unwrap(),
        ],
        fx.dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("szz/issues"), "missing stage tag: {err}");
}

#[test]
fn szz_inverted_dates_fail_with_nonzero_exit() {
    // Committer dates scripted out of topological order: the line being
    // fixed was written by a commit dated AFTER the fix.
    let repo = GitFixture::new();
    repo.write("f.cpp", "int x = 1;\n");
    repo.commit("base", "2019-05-01T00:00:00+00:00");
    repo.write("f.cpp", "int x = 2;\n");
    let fix = repo.commit("Fix CVE-2020-9999 bounds", "2018-01-01T00:00:00+00:00");

    let dir = tempfile::tempdir().unwrap();
    let cve = dir.path().join("cve.json");
    std::fs::write(
        &cve,
        serde_json::json!({
            "id": "CVE-2020-9999",
            "published": "2020-01-01T00:00:00Z",
            "description": "bounds issue",
            "references": [],
            "affected_language": "C++",
            "affected_projects": []
        })
        .to_string(),
    )
    .unwrap();
    let issues = dir.path().join("issues.json");
    std::fs::write(
        &issues,
        serde_json::json!([
            {"issue_id": "1", "labels": ["closed"], "commits": [fix], "text": "CVE-2020-9999"}
        ])
        .to_string(),
    )
    .unwrap();

    let out = clonewatch(
        &[
            "szz",
            "--cve",
            cve.to_str().unwrap(),
            "--issues",
            issues.to_str().unwrap(),
            "--repo",
            repo.path().to_str().unwrap(),
            "--out",
            dir.path().join("out").to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("inverted"), "{}", stderr(&out));
}

#[test]
fn filter_writes_candidates_with_reasons() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    run_filter(&fx);

    let list: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fx.out_dir.join("candidates.json")).unwrap())
            .unwrap();
    let decisions = list["decisions"].as_array().unwrap();
    assert_eq!(decisions.len(), 5);
    let included: Vec<&str> = decisions
        .iter()
        .filter(|d| d["status"] == "INCLUDED")
        .map(|d| d["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        included,
        vec![
            "fork-dupcoin",
            "fork-hotcoin",
            "fork-othercoin",
            "fork-patchcoin"
        ]
    );
    let old = decisions
        .iter()
        .find(|d| d["name"] == "fork-oldcoin")
        .unwrap();
    assert_eq!(old["status"], "FILTERED_OUT");
    assert!(old["reason"]
        .as_str()
        .unwrap()
        .contains("before window start"));
}

#[test]
fn filter_with_zero_candidates_still_exits_zero() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    let out = clonewatch(
        &[
            "filter",
            "--cve",
            fx.cve.to_str().unwrap(),
            "--manifest",
            fx.manifest.to_str().unwrap(),
            "--out",
            fx.out_dir.to_str().unwrap(),
            "--language",
            "Go",
        ],
        fx.dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 of 5 projects remain"));
}

#[test]
fn build_test_reports_thresholds() {
    let fx = build_pipeline_fixture();
    run_build_test(&fx);
    let out_text = std::fs::read_to_string(fx.out_dir.join("detection-test.json")).unwrap();
    let test: serde_json::Value = serde_json::from_str(&out_text).unwrap();
    assert_eq!(test["cve_id"], "CVE-2018-17144");
    assert_eq!(test["vulnerable_snippets"][0]["threshold"], 6);
    assert_eq!(test["fix_snippets"][0]["threshold"], 3);
}

#[test]
fn scan_classifies_all_five_forks_and_exits_two() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    run_filter(&fx);
    run_build_test(&fx);
    let out = run_scan(&fx, "2");
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fx.out_dir.join("report.json")).unwrap())
            .unwrap();
    let statuses: Vec<(String, String)> = report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| {
            (
                v["project"].as_str().unwrap().to_string(),
                v["status"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        statuses,
        vec![
            ("fork-dupcoin".to_string(), "VULNERABLE".to_string()),
            ("fork-hotcoin".to_string(), "VULNERABLE".to_string()),
            ("fork-oldcoin".to_string(), "FILTERED_OUT".to_string()),
            ("fork-othercoin".to_string(), "NOT_AFFECTED".to_string()),
            ("fork-patchcoin".to_string(), "FIXED".to_string()),
        ]
    );

    let summary = stdout(&out);
    assert!(summary.contains("VULNERABLE 2, FIXED 1, NOT_AFFECTED 1, FILTERED_OUT 1, ERROR 0"));

    clonewatch::report::validate_xml(
        &std::fs::read_to_string(fx.out_dir.join("report.xml")).unwrap(),
    )
    .unwrap();
}

#[test]
fn scan_with_no_vulnerable_projects_exits_zero() {
    let fx = build_pipeline_fixture();
    // Patch both vulnerable forks in place.
    for rel in [
        "forks/fork-hotcoin/src/validation.cpp",
        "forks/fork-dupcoin/core/checks.cpp",
    ] {
        let path = fx.dir.path().join(rel);
        let patched = std::fs::read_to_string(&path)
            .unwrap()
            .replace(common::VULN_BLOCK, common::FIXED_BLOCK);
        std::fs::write(&path, patched).unwrap();
    }
    run_szz(&fx);
    run_filter(&fx);
    run_build_test(&fx);
    let out = run_scan(&fx, "1");
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("VULNERABLE 0, FIXED 3"));
}

#[test]
fn scan_reports_are_deterministic_across_job_counts() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    run_filter(&fx);
    run_build_test(&fx);

    let first = run_scan(&fx, "1");
    assert_eq!(first.status.code(), Some(2));
    let xml_one = std::fs::read_to_string(fx.out_dir.join("report.xml")).unwrap();
    let json_one = std::fs::read_to_string(fx.out_dir.join("report.json")).unwrap();

    let second = run_scan(&fx, "8");
    assert_eq!(second.status.code(), Some(2));
    let xml_eight = std::fs::read_to_string(fx.out_dir.join("report.xml")).unwrap();
    let json_eight = std::fs::read_to_string(fx.out_dir.join("report.json")).unwrap();

    assert_eq!(mask_timing(&xml_one), mask_timing(&xml_eight));
    assert_eq!(mask_timing(&json_one), mask_timing(&json_eight));
}

#[test]
fn scan_continues_past_per_project_errors() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    run_filter(&fx);
    run_build_test(&fx);
    // A candidate vanishing between filter and scan must become an
    // ERROR verdict, not a batch failure.
    std::fs::remove_dir_all(fx.dir.path().join("forks/fork-othercoin")).unwrap();
    let out = run_scan(&fx, "2");
    assert_eq!(out.status.code(), Some(2), "stderr: {}", stderr(&out));
    let summary = stdout(&out);
    assert!(
        summary.contains("VULNERABLE 2, FIXED 1, NOT_AFFECTED 0, FILTERED_OUT 1, ERROR 1"),
        "{summary}"
    );
}

#[test]
fn scan_without_detection_test_is_operational_failure() {
    let fx = build_pipeline_fixture();
    run_szz(&fx);
    run_filter(&fx);
    let out = run_scan(&fx, "1");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("scan/test"), "{}", stderr(&out));
}

#[test]
fn ratio_self_and_disjoint() {
    let fx = build_pipeline_fixture();
    let target = fx.dir.path().join("forks/fork-hotcoin");
    let out = clonewatch(
        &[
            "ratio",
            "--target",
            target.to_str().unwrap(),
            "--reference",
            target.to_str().unwrap(),
            "--min-block",
            "4",
        ],
        fx.dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("ratio 1.0000"), "{}", stdout(&out));

    let other = fx.dir.path().join("forks/fork-othercoin");
    let out = clonewatch(
        &[
            "ratio",
            "--target",
            target.to_str().unwrap(),
            "--reference",
            other.to_str().unwrap(),
            "--min-block",
            "4",
        ],
        fx.dir.path(),
    );
    assert!(out.status.success());
    assert!(stdout(&out).contains("ratio 0.0000"), "{}", stdout(&out));
}

#[test]
fn config_file_drives_the_pipeline() {
    let fx = build_pipeline_fixture();
    let config_path = fx.dir.path().join("clonewatch.toml");
    std::fs::write(
        &config_path,
        format!(
            "cve_descriptor_path = {:?}\n\
             manifest_path = {:?}\n\
             issue_export_path = {:?}\n\
             parent_repo_path = {:?}\n\
             output_dir = {:?}\n\
             parallelism = 2\n",
            fx.cve,
            fx.manifest,
            fx.issues,
            fx.parent.repo.path(),
            fx.out_dir
        ),
    )
    .unwrap();

    for args in [
        vec!["--config", config_path.to_str().unwrap(), "szz"],
        vec!["--config", config_path.to_str().unwrap(), "filter"],
        vec![
            "--config",
            config_path.to_str().unwrap(),
            "build-test",
            "--annotations",
            fx.annotations.to_str().unwrap(),
        ],
    ] {
        let out = clonewatch(&args, fx.dir.path());
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
    }
    let out = clonewatch(
        &["--config", config_path.to_str().unwrap(), "scan"],
        fx.dir.path(),
    );
    assert_eq!(out.status.code(), Some(2), "{}", stderr(&out));
}
