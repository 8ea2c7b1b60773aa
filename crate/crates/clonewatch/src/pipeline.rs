//! End-to-end orchestration: configuration, the per-stage entry points
//! behind the CLI subcommands, and the persisted hand-off files between
//! stages (window, candidate list, reports).
//!
//! Stage outputs are plain files on purpose: the manual annotation step
//! sits between `szz` and `scan`, so each stage must be re-runnable in
//! isolation.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use chrono::Utc;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clonedetect::{
    clone_ratio, scan_project, CloneRatioResult, FileSelector, NormalizationProfile,
    ProjectVerdict, VerdictStatus,
};
use crate::cve::{parse_cve_file, CveDescriptor, StopwordSet};
use crate::history::{
    blame_previous_commits, compute_window, match_fix_commits, read_issues, CommitRef,
    FixCommitMatch, RepositoryHandle, VulnWindow,
};
use crate::registry::{load_manifest, resolve_fork_date, ForkDate, ProjectRecord, ProjectSet};
use crate::report::{emit_json, emit_summary_file, emit_xml, ScanReport};
use crate::testgen::{build_detection_test, load_test, save_test, AnnotationFile, DetectionTest};

/// An error carrying the pipeline stage it came from.
#[derive(Debug, Error)]
#[error("[{stage}] {source}")]
pub struct PipelineError {
    pub stage: &'static str,
    #[source]
    pub source: Box<dyn std::error::Error + Send + Sync>,
}

fn at<E>(stage: &'static str) -> impl FnOnce(E) -> PipelineError
where
    E: std::error::Error + Send + Sync + 'static,
{
    move |source| PipelineError {
        stage,
        source: Box::new(source),
    }
}

fn stage_msg(stage: &'static str, msg: impl Into<String>) -> PipelineError {
    PipelineError {
        stage,
        source: msg.into().into(),
    }
}

/// Effective configuration for a scan. Loadable from a TOML file; every
/// field is overridable from the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ScanConfig {
    pub cve_descriptor_path: PathBuf,
    pub manifest_path: PathBuf,
    pub issue_export_path: PathBuf,
    pub parent_repo_path: PathBuf,
    /// When absent, `scan` expects `build-test` to have produced
    /// `<output_dir>/detection-test.json`.
    pub detection_test_path: Option<PathBuf>,
    pub output_dir: PathBuf,
    /// Stopword file; the built-in list is used when unset.
    pub stopwords_path: Option<PathBuf>,
    pub profile: NormalizationProfile,
    /// Overrides the language-derived extension set when non-empty.
    pub file_extensions: Vec<String>,
    /// Directory names to skip while scanning (opt-in).
    pub exclude_dirs: Vec<String>,
    pub parallelism: usize,
    /// Language filter for the corpus; defaults to the descriptor's
    /// affected language.
    pub language_filter: Option<String>,
    pub min_block: usize,
    pub top_k_keywords: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            cve_descriptor_path: PathBuf::new(),
            manifest_path: PathBuf::new(),
            issue_export_path: PathBuf::new(),
            parent_repo_path: PathBuf::new(),
            detection_test_path: None,
            output_dir: PathBuf::from("out"),
            stopwords_path: None,
            profile: NormalizationProfile::default(),
            file_extensions: Vec::new(),
            exclude_dirs: Vec::new(),
            parallelism: 1,
            language_filter: None,
            min_block: 6,
            top_k_keywords: 5,
        }
    }
}

impl ScanConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, PipelineError> {
        let content = std::fs::read_to_string(path).map_err(at("config"))?;
        let config: ScanConfig = toml::from_str(&content).map_err(at("config"))?;
        if config.parallelism == 0 {
            return Err(stage_msg("config", "parallelism must be at least 1"));
        }
        Ok(config)
    }

    fn stopwords(&self) -> Result<StopwordSet, PipelineError> {
        match &self.stopwords_path {
            Some(path) => StopwordSet::load(path).map_err(at("config")),
            None => Ok(StopwordSet::builtin()),
        }
    }

    fn cve(&self) -> Result<CveDescriptor, PipelineError> {
        let stopwords = self.stopwords()?;
        require_path("cve", &self.cve_descriptor_path)?;
        parse_cve_file(&self.cve_descriptor_path, &stopwords).map_err(at("cve"))
    }

    fn selector_for(&self, language: &str) -> Result<FileSelector, PipelineError> {
        let mut selector = if self.file_extensions.is_empty() {
            FileSelector::for_language(language).map_err(at("config"))?
        } else {
            FileSelector::from_extensions(self.file_extensions.iter().cloned())
        };
        selector.exclude_dirs = self.exclude_dirs.clone();
        Ok(selector)
    }

    pub fn window_path(&self) -> PathBuf {
        self.output_dir.join("window.json")
    }

    pub fn candidates_path(&self) -> PathBuf {
        self.output_dir.join("candidates.json")
    }

    pub fn default_test_path(&self) -> PathBuf {
        self.detection_test_path
            .clone()
            .unwrap_or_else(|| self.output_dir.join("detection-test.json"))
    }
}

fn require_path(stage: &'static str, path: &Path) -> Result<(), PipelineError> {
    if path.as_os_str().is_empty() {
        return Err(stage_msg(stage, "required input path not configured"));
    }
    if !path.exists() {
        return Err(stage_msg(
            stage,
            format!("{}: file not found", path.display()),
        ));
    }
    Ok(())
}

/// The persisted output of the `szz` stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowFile {
    pub cve_id: String,
    /// The issue-search pattern that located the fix commits.
    pub pattern: String,
    pub window: VulnWindow,
    pub match_details: Vec<FixCommitMatch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl WindowFile {
    pub fn save(&self, path: &Path) -> Result<(), PipelineError> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(at("szz"))?;
        }
        let json = serde_json::to_string_pretty(self).map_err(at("szz"))?;
        std::fs::write(path, json + "\n").map_err(at("szz"))
    }

    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        let content = std::fs::read_to_string(path).map_err(at("filter"))?;
        let file: WindowFile = serde_json::from_str(&content).map_err(at("filter"))?;
        file.window.validate().map_err(at("filter"))?;
        Ok(file)
    }
}

/// Runs the history stage: issues -> fix commits -> blamed introducing
/// commits -> vulnerability window. Persists the window file.
pub fn run_szz(config: &ScanConfig) -> Result<WindowFile, PipelineError> {
    let cve = config.cve()?;
    require_path("szz/issues", &config.issue_export_path)?;
    require_path("szz/repo", &config.parent_repo_path)?;

    let issues = read_issues(&config.issue_export_path).map_err(at("szz/issues"))?;
    let qualifying: Vec<_> = issues
        .into_iter()
        .filter(|i| i.qualifies_for_fix_search())
        .collect();

    let repo = RepositoryHandle::open(&config.parent_repo_path).map_err(at("szz/repo"))?;
    let pattern = crate::cve::build_issue_query(&cve, config.top_k_keywords);
    let fixes = match_fix_commits(&qualifying, &pattern, &repo).map_err(at("szz/match"))?;

    let mut intro: BTreeSet<CommitRef> = BTreeSet::new();
    for fix in &fixes.commits {
        intro.extend(blame_previous_commits(fix, &repo).map_err(at("szz/blame"))?);
    }

    let window = compute_window(&intro, &fixes.commits).map_err(at("szz/window"))?;
    let file = WindowFile {
        cve_id: cve.id.clone(),
        pattern,
        window,
        match_details: fixes.details,
        warnings: fixes.warnings,
    };
    file.save(&config.window_path())?;
    Ok(file)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CandidateStatus {
    Included,
    FilteredOut,
    Error,
}

/// One per manifest project: whether it proceeds to scanning, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDecision {
    pub name: String,
    pub repo_location: String,
    pub declared_language: String,
    pub fork_date: Option<ForkDate>,
    pub status: CandidateStatus,
    pub reason: String,
}

/// The persisted output of the `filter` stage. Covers every manifest
/// project, so the scan can report filtered-out and erroring projects
/// alongside scanned ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateList {
    pub cve_id: String,
    pub window: VulnWindow,
    pub decisions: Vec<CandidateDecision>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub manifest_warnings: Vec<String>,
}

impl CandidateList {
    pub fn included(&self) -> impl Iterator<Item = &CandidateDecision> {
        self.decisions
            .iter()
            .filter(|d| d.status == CandidateStatus::Included)
    }

    pub fn save(&self, path: &Path) -> Result<(), PipelineError> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(at("filter"))?;
        }
        let json = serde_json::to_string_pretty(self).map_err(at("filter"))?;
        std::fs::write(path, json + "\n").map_err(at("filter"))
    }

    pub fn load(path: &Path) -> Result<Self, PipelineError> {
        let content = std::fs::read_to_string(path).map_err(at("scan"))?;
        let list: CandidateList = serde_json::from_str(&content).map_err(at("scan"))?;
        list.window.validate().map_err(at("scan"))?;
        Ok(list)
    }
}

/// Runs the filtering stage: manifest -> language filter -> fork-date
/// resolution -> window filter. Unresolvable fork dates mark the
/// project `ERROR` instead of aborting. Persists the candidate list.
pub fn run_filter(
    config: &ScanConfig,
    window_path: Option<&Path>,
) -> Result<CandidateList, PipelineError> {
    let cve = config.cve()?;
    require_path("filter/manifest", &config.manifest_path)?;
    let window_path = window_path
        .map(Path::to_path_buf)
        .unwrap_or_else(|| config.window_path());
    require_path("filter/window", &window_path)?;
    let window_file = WindowFile::load(&window_path)?;
    let window = &window_file.window;

    let manifest = load_manifest(&config.manifest_path).map_err(at("filter/manifest"))?;
    let manifest_dir = config
        .manifest_path
        .parent()
        .unwrap_or_else(|| Path::new("."))
        .to_path_buf();

    let language = config
        .language_filter
        .clone()
        .unwrap_or_else(|| cve.affected_language.clone());

    let mut decisions = Vec::with_capacity(manifest.projects.len());
    let mut resolved_in_language: Vec<ProjectRecord> = Vec::new();

    for project in &manifest.projects {
        // Relative repository paths are taken relative to the manifest.
        let repo_location = if Path::new(&project.repo_location).is_relative()
            && !project.repo_location.contains("://")
        {
            manifest_dir
                .join(&project.repo_location)
                .to_string_lossy()
                .into_owned()
        } else {
            project.repo_location.clone()
        };

        if project.declared_language.to_lowercase() != language.to_lowercase() {
            decisions.push(CandidateDecision {
                name: project.name.clone(),
                repo_location,
                declared_language: project.declared_language.clone(),
                fork_date: project.fork_date,
                status: CandidateStatus::FilteredOut,
                reason: format!(
                    "declared language {:?} does not match filter {:?}",
                    project.declared_language, language
                ),
            });
            continue;
        }

        let mut record = ProjectRecord {
            repo_location: repo_location.clone(),
            ..project.clone()
        };
        if record.fork_date.is_none() {
            match RepositoryHandle::open(&repo_location)
                .map_err(|e| e.to_string())
                .and_then(|h| resolve_fork_date(&record, &h).map_err(|e| e.to_string()))
            {
                Ok(resolved) => record = resolved,
                Err(detail) => {
                    decisions.push(CandidateDecision {
                        name: project.name.clone(),
                        repo_location,
                        declared_language: project.declared_language.clone(),
                        fork_date: None,
                        status: CandidateStatus::Error,
                        reason: format!("fork date unresolved: {detail}"),
                    });
                    continue;
                }
            }
        }
        resolved_in_language.push(record);
    }

    let resolved_set = ProjectSet::new(resolved_in_language).map_err(at("filter"))?;
    let included_set = resolved_set
        .filter_candidates(window)
        .map_err(at("filter"))?;

    for record in &resolved_set {
        let fork = record.fork_date.expect("resolved above");
        let (status, reason) = if included_set.get(&record.name).is_some() {
            (
                CandidateStatus::Included,
                format!(
                    "fork date {} within window [{}, {}]",
                    fork.at.to_rfc3339(),
                    window.intro_min.to_rfc3339(),
                    window.fix_max.to_rfc3339()
                ),
            )
        } else if fork.at < window.intro_min {
            (
                CandidateStatus::FilteredOut,
                format!(
                    "fork date {} before window start {}",
                    fork.at.to_rfc3339(),
                    window.intro_min.to_rfc3339()
                ),
            )
        } else {
            (
                CandidateStatus::FilteredOut,
                format!(
                    "fork date {} after window end {}",
                    fork.at.to_rfc3339(),
                    window.fix_max.to_rfc3339()
                ),
            )
        };
        decisions.push(CandidateDecision {
            name: record.name.clone(),
            repo_location: record.repo_location.clone(),
            declared_language: record.declared_language.clone(),
            fork_date: record.fork_date,
            status,
            reason,
        });
    }

    decisions.sort_by(|a, b| a.name.cmp(&b.name));
    let list = CandidateList {
        cve_id: window_file.cve_id.clone(),
        window: window.clone(),
        decisions,
        manifest_warnings: manifest.skipped,
    };
    list.save(&config.candidates_path())?;
    Ok(list)
}

/// Everything `scan` produced, with the paths it wrote.
#[derive(Debug)]
pub struct ScanOutcome {
    pub report: ScanReport,
    pub xml_path: PathBuf,
    pub json_path: PathBuf,
    pub summary_path: PathBuf,
}

/// Exit code contract: 2 when any project is VULNERABLE, otherwise 0.
/// Operational failures exit 1 before a report exists.
pub fn exit_code(report: &ScanReport) -> i32 {
    if report.count_by_status(VerdictStatus::Vulnerable) > 0 {
        2
    } else {
        0
    }
}

fn settings_echo(
    config: &ScanConfig,
    test: &DetectionTest,
    selector: &FileSelector,
    language: &str,
) -> BTreeMap<String, String> {
    let profile = &test.profile;
    let mut echo = BTreeMap::new();
    echo.insert(
        "cve".into(),
        config.cve_descriptor_path.display().to_string(),
    );
    echo.insert(
        "manifest".into(),
        config.manifest_path.display().to_string(),
    );
    echo.insert(
        "test".into(),
        config.default_test_path().display().to_string(),
    );
    echo.insert("out".into(), config.output_dir.display().to_string());
    echo.insert("language".into(), language.to_string());
    echo.insert("minBlock".into(), config.min_block.to_string());
    echo.insert("topKeywords".into(), config.top_k_keywords.to_string());
    echo.insert("extensions".into(), selector.extensions.join(","));
    echo.insert("excludeDirs".into(), selector.exclude_dirs.join(","));
    echo.insert(
        "profile.lineCommentMarkers".into(),
        profile.line_comment_markers.join(","),
    );
    echo.insert(
        "profile.blockCommentDelims".into(),
        profile
            .block_comment_delims
            .iter()
            .map(|(o, c)| format!("{o}{c}"))
            .collect::<Vec<_>>()
            .join(","),
    );
    echo.insert(
        "profile.collapseInternalWhitespace".into(),
        profile.collapse_internal_whitespace.to_string(),
    );
    echo.insert(
        "profile.dropBlankLines".into(),
        profile.drop_blank_lines.to_string(),
    );
    // Parallelism is deliberately not echoed: it cannot change the
    // result, and reports must be byte-identical across job counts.
    echo
}

/// Runs the detection stage over the candidate list and writes the XML,
/// JSON, and summary reports. Per-project failures become `ERROR`
/// verdicts, never batch aborts.
pub fn run_scan(
    config: &ScanConfig,
    candidates_path: Option<&Path>,
) -> Result<ScanOutcome, PipelineError> {
    let test_path = config.default_test_path();
    require_path("scan/test", &test_path)?;
    let test = load_test(&test_path).map_err(at("scan/test"))?;
    test.validate().map_err(at("scan/test"))?;

    let candidates_path = candidates_path
        .map(Path::to_path_buf)
        .unwrap_or_else(|| config.candidates_path());
    require_path("scan/candidates", &candidates_path)?;
    let candidates = CandidateList::load(&candidates_path)?;

    let language = config
        .language_filter
        .clone()
        .unwrap_or_else(|| test.affected_language.clone());
    let selector = config.selector_for(&language)?;
    let profile = test.profile.clone();

    let included: Vec<&CandidateDecision> = candidates.included().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism.max(1))
        .build()
        .map_err(|e| stage_msg("scan", format!("worker pool: {e}")))?;
    let mut verdicts: Vec<ProjectVerdict> = pool.install(|| {
        included
            .par_iter()
            .map(|decision| {
                scan_project(
                    &test,
                    &decision.name,
                    Path::new(&decision.repo_location),
                    &profile,
                    &selector,
                )
            })
            .collect()
    });

    for decision in &candidates.decisions {
        match decision.status {
            CandidateStatus::Included => {}
            CandidateStatus::FilteredOut => verdicts.push(ProjectVerdict::filtered_out(
                &decision.name,
                &decision.reason,
            )),
            CandidateStatus::Error => {
                verdicts.push(ProjectVerdict::error(&decision.name, &decision.reason))
            }
        }
    }

    let report = ScanReport::new(
        candidates.cve_id.clone(),
        Utc::now(),
        candidates.decisions.len(),
        included.len(),
        verdicts,
        settings_echo(config, &test, &selector, &language),
    );

    std::fs::create_dir_all(&config.output_dir).map_err(at("scan"))?;
    let xml_path = config.output_dir.join("report.xml");
    let json_path = config.output_dir.join("report.json");
    let summary_path = config.output_dir.join("report.txt");
    emit_xml(&report, &xml_path).map_err(at("scan/report"))?;
    emit_json(&report, &json_path).map_err(at("scan/report"))?;
    emit_summary_file(&report, &summary_path).map_err(at("scan/report"))?;

    Ok(ScanOutcome {
        report,
        xml_path,
        json_path,
        summary_path,
    })
}

/// Runs clone-ratio measurement between two trees.
pub fn run_ratio(
    config: &ScanConfig,
    target: &Path,
    reference: &Path,
    min_block: usize,
) -> Result<CloneRatioResult, PipelineError> {
    if min_block < 2 {
        return Err(stage_msg("ratio", "min-block must be at least 2"));
    }
    let language = config
        .language_filter
        .clone()
        .unwrap_or_else(|| "C++".to_string());
    let selector = config.selector_for(&language)?;
    clone_ratio(target, reference, &config.profile, &selector, min_block).map_err(at("ratio"))
}

/// Packages an annotation file into a detection test and saves it.
pub fn run_build_test(
    config: &ScanConfig,
    annotations_path: &Path,
) -> Result<(DetectionTest, PathBuf), PipelineError> {
    let cve = config.cve()?;
    require_path("build-test/annotations", annotations_path)?;
    let annotations = AnnotationFile::load(annotations_path).map_err(at("build-test"))?;
    let test = build_detection_test(
        &cve,
        annotations.vulnerable,
        annotations.fix,
        &config.profile,
    )
    .map_err(at("build-test"))?;
    let out_path = config.default_test_path();
    if let Some(dir) = out_path.parent() {
        std::fs::create_dir_all(dir).map_err(at("build-test"))?;
    }
    save_test(&test, &out_path).map_err(at("build-test"))?;
    Ok((test, out_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults() {
        let config = ScanConfig::default();
        assert_eq!(config.parallelism, 1);
        assert_eq!(config.min_block, 6);
        assert_eq!(config.top_k_keywords, 5);
        assert!(config.language_filter.is_none());
    }

    #[test]
    fn config_from_toml() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("clonewatch.toml");
        std::fs::write(
            &path,
            r#"
cve_descriptor_path = "cve.json"
manifest_path = "manifest.csv"
parallelism = 4
min_block = 8
language_filter = "C++"
"#,
        )
        .unwrap();
        let config = ScanConfig::from_toml_file(&path).unwrap();
        assert_eq!(config.parallelism, 4);
        assert_eq!(config.min_block, 8);
        assert_eq!(config.language_filter.as_deref(), Some("C++"));
        assert_eq!(config.output_dir, PathBuf::from("out"));
    }

    #[test]
    fn config_rejects_zero_parallelism() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("clonewatch.toml");
        std::fs::write(&path, "parallelism = 0\n").unwrap();
        assert!(ScanConfig::from_toml_file(&path).is_err());
    }

    #[test]
    fn missing_input_is_stage_tagged() {
        let config = ScanConfig {
            cve_descriptor_path: PathBuf::from("/nonexistent/cve.json"),
            ..ScanConfig::default()
        };
        let err = run_szz(&config).unwrap_err();
        assert_eq!(err.stage, "cve");
    }

    #[test]
    fn exit_code_contract() {
        use std::collections::BTreeMap;
        let vulnerable = ProjectVerdict {
            project: "v".into(),
            status: VerdictStatus::Vulnerable,
            vuln_matches: vec![crate::clonedetect::CloneMatch {
                source_file: "f".into(),
                start_line: 1,
                end_line: 1,
                line_count: 1,
                snippet_index: 0,
            }],
            fix_matches: vec![],
            elapsed_ms: 0,
            diagnostics: vec![],
        };
        let clean = ProjectVerdict::classify("c", vec![], vec![], 0, vec![]);
        let now = Utc::now();
        let with_vuln = ScanReport::new(
            "CVE-1",
            now,
            2,
            2,
            vec![vulnerable, clean.clone()],
            BTreeMap::new(),
        );
        assert_eq!(exit_code(&with_vuln), 2);
        let without = ScanReport::new("CVE-1", now, 1, 1, vec![clean], BTreeMap::new());
        assert_eq!(exit_code(&without), 0);
    }
}
