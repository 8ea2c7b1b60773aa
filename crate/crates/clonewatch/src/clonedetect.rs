//! Type I clone detection: source normalization, exact block matching,
//! repository-vs-repository clone ratio, and per-project verdicts.
//!
//! Two code fragments are Type I clones when they are identical after
//! comments and indentation differences are removed. Everything in this
//! module works on whole normalized lines; there is no token-level
//! diffing.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use walkdir::WalkDir;

use crate::testgen::DetectionTest;

/// Errors from clone-detection operations.
#[derive(Debug, Error)]
pub enum CloneDetectError {
    /// The target tree normalizes to zero lines, so a ratio is undefined.
    #[error("target tree contains no normalized source lines")]
    EmptyTarget,
    /// No default extension set is known for a language tag.
    #[error("no default file extensions known for language {0:?}")]
    UnknownLanguage(String),
    #[error("unreadable tree {path}: {source}")]
    UnreadableTree {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// How raw source turns into normalized lines.
///
/// The defaults match C-family sources: `//` line comments, `/* */`
/// block comments, whitespace runs collapsed, blank lines dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct NormalizationProfile {
    pub line_comment_markers: Vec<String>,
    /// (open, close) pairs; block comments may span lines. Symmetric
    /// delimiters (open == close) are supported.
    pub block_comment_delims: Vec<(String, String)>,
    pub collapse_internal_whitespace: bool,
    pub drop_blank_lines: bool,
}

impl Default for NormalizationProfile {
    fn default() -> Self {
        Self {
            line_comment_markers: vec!["//".to_string()],
            block_comment_delims: vec![("/*".to_string(), "*/".to_string())],
            collapse_internal_whitespace: true,
            drop_blank_lines: true,
        }
    }
}

/// A file after normalization. `line_map[i]` is the original 1-based
/// line number of `lines[i]`, kept so matches can be reported against
/// the file as the author sees it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedFile {
    /// Repo-relative path (or a synthetic label for snippets).
    pub path: String,
    pub lines: Vec<String>,
    pub line_map: Vec<usize>,
    /// Non-fatal notes: unterminated block comments, lossy decoding.
    pub warnings: Vec<String>,
}

/// Strips comments and whitespace noise from `content` according to
/// `profile`.
///
/// Double- and single-quoted spans shield comment markers on the same
/// line, so `"http://x"` survives. An unterminated block comment is
/// treated as a comment to end of file and recorded as a warning rather
/// than an error.
pub fn normalize_source(
    path: impl Into<String>,
    content: &str,
    profile: &NormalizationProfile,
) -> NormalizedFile {
    let path = path.into();
    let mut lines = Vec::new();
    let mut line_map = Vec::new();
    let mut warnings = Vec::new();

    // Index of the open block-comment pair we are inside, if any.
    let mut in_block: Option<usize> = None;
    let mut block_opened_at = 0usize;

    for (idx, raw_line) in content.lines().enumerate() {
        let lineno = idx + 1;
        let stripped = strip_line(
            raw_line,
            profile,
            &mut in_block,
            &mut block_opened_at,
            lineno,
        );

        let cleaned = if profile.collapse_internal_whitespace {
            stripped.split_whitespace().collect::<Vec<_>>().join(" ")
        } else {
            stripped.trim().to_string()
        };

        if cleaned.is_empty() && profile.drop_blank_lines {
            continue;
        }
        lines.push(cleaned);
        line_map.push(lineno);
    }

    if in_block.is_some() {
        warnings.push(format!(
            "unterminated block comment opened at line {block_opened_at}; treated as comment to end of file"
        ));
    }

    NormalizedFile {
        path,
        lines,
        line_map,
        warnings,
    }
}

/// Normalizes a fragment given as separate lines. Convenience for
/// snippet handling; equivalent to joining with `\n`.
pub fn normalize_lines(
    path: impl Into<String>,
    raw_lines: &[String],
    profile: &NormalizationProfile,
) -> NormalizedFile {
    normalize_source(path, &raw_lines.join("\n"), profile)
}

enum Special {
    LineComment,
    BlockOpen(usize),
    Quote(char),
}

fn strip_line(
    raw: &str,
    profile: &NormalizationProfile,
    in_block: &mut Option<usize>,
    block_opened_at: &mut usize,
    lineno: usize,
) -> String {
    let mut out = String::new();
    let mut rest = raw;

    loop {
        if let Some(pair_idx) = *in_block {
            let close = &profile.block_comment_delims[pair_idx].1;
            match rest.find(close.as_str()) {
                Some(i) => {
                    rest = &rest[i + close.len()..];
                    *in_block = None;
                    out.push(' ');
                }
                None => return out,
            }
            continue;
        }

        // Earliest special token; at equal positions the longest wins,
        // line markers before block openers.
        let mut best: Option<(usize, usize, Special)> = None;
        let mut consider = |pos: Option<usize>, len: usize, kind: Special| {
            if let Some(p) = pos {
                let better = match &best {
                    None => true,
                    Some((bp, bl, _)) => p < *bp || (p == *bp && len > *bl),
                };
                if better {
                    best = Some((p, len, kind));
                }
            }
        };
        for marker in &profile.line_comment_markers {
            consider(
                rest.find(marker.as_str()),
                marker.len(),
                Special::LineComment,
            );
        }
        for (i, (open, _)) in profile.block_comment_delims.iter().enumerate() {
            consider(rest.find(open.as_str()), open.len(), Special::BlockOpen(i));
        }
        for q in ['"', '\''] {
            consider(rest.find(q), 1, Special::Quote(q));
        }

        let Some((pos, len, kind)) = best else {
            out.push_str(rest);
            return out;
        };

        out.push_str(&rest[..pos]);
        match kind {
            Special::LineComment => return out,
            Special::BlockOpen(pair_idx) => {
                let close = &profile.block_comment_delims[pair_idx].1;
                let after_open = &rest[pos + len..];
                match after_open.find(close.as_str()) {
                    Some(i) => {
                        out.push(' ');
                        rest = &after_open[i + close.len()..];
                    }
                    None => {
                        *in_block = Some(pair_idx);
                        *block_opened_at = lineno;
                        return out;
                    }
                }
            }
            Special::Quote(q) => {
                // Copy the quoted span verbatim; unterminated quotes end
                // at the line.
                out.push(q);
                let bytes = rest.as_bytes();
                let mut i = pos + 1;
                let mut closed = false;
                while i < bytes.len() {
                    let c = rest[i..].chars().next().unwrap();
                    out.push(c);
                    i += c.len_utf8();
                    if c == '\\' {
                        if let Some(esc) = rest[i..].chars().next() {
                            out.push(esc);
                            i += esc.len_utf8();
                        }
                        continue;
                    }
                    if c == q {
                        closed = true;
                        break;
                    }
                }
                if !closed {
                    return out;
                }
                rest = &rest[i..];
            }
        }
    }
}

/// One located occurrence of a test snippet inside a scanned file.
/// Line numbers refer to the original (pre-normalization) file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneMatch {
    pub source_file: String,
    pub start_line: usize,
    pub end_line: usize,
    /// Matched normalized-line count (the snippet's exact length).
    pub line_count: usize,
    /// Which test snippet matched, by position in its list.
    pub snippet_index: usize,
}

/// Finds every position where `needle` occurs as a contiguous run of
/// equal normalized lines in `haystack`. Overlapping occurrences are all
/// reported.
///
/// `threshold` must equal `needle.len()`: matching is all-or-nothing at
/// the snippet's exact length.
///
/// Runs Knuth-Morris-Pratt over interned line ids, O(|haystack| +
/// |needle|).
pub fn find_clones(
    needle: &[String],
    haystack: &NormalizedFile,
    threshold: usize,
    snippet_index: usize,
) -> Vec<CloneMatch> {
    assert!(!needle.is_empty(), "needle must have at least one line");
    assert_eq!(
        threshold,
        needle.len(),
        "threshold must equal the needle's exact line count"
    );

    let mut ids: HashMap<&str, u32> = HashMap::new();
    let pattern: Vec<u32> = needle
        .iter()
        .map(|l| {
            let next = ids.len() as u32;
            *ids.entry(l.as_str()).or_insert(next)
        })
        .collect();
    // Lines outside the needle vocabulary can never match.
    let text: Vec<Option<u32>> = haystack
        .lines
        .iter()
        .map(|l| ids.get(l.as_str()).copied())
        .collect();

    let fail = kmp_failure(&pattern);
    let m = pattern.len();
    let mut matches = Vec::new();
    let mut j = 0usize;
    for (i, sym) in text.iter().enumerate() {
        while j > 0 && *sym != Some(pattern[j]) {
            j = fail[j - 1];
        }
        if *sym == Some(pattern[j]) {
            j += 1;
        }
        if j == m {
            let start = i + 1 - m;
            matches.push(CloneMatch {
                source_file: haystack.path.clone(),
                start_line: haystack.line_map[start],
                end_line: haystack.line_map[i],
                line_count: m,
                snippet_index,
            });
            j = fail[j - 1];
        }
    }
    matches
}

fn kmp_failure(pattern: &[u32]) -> Vec<usize> {
    let mut fail = vec![0usize; pattern.len()];
    let mut k = 0usize;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Selects which files under a project root get scanned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileSelector {
    /// Lowercase extensions without the dot.
    pub extensions: Vec<String>,
    /// Directory names skipped anywhere in the tree. Empty by default:
    /// exclusion of `test/`, `doc/` and similar trees is opt-in.
    pub exclude_dirs: Vec<String>,
}

impl FileSelector {
    pub fn from_extensions<I, S>(extensions: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            extensions: extensions
                .into_iter()
                .map(|e| e.into().to_lowercase())
                .collect(),
            exclude_dirs: Vec::new(),
        }
    }

    /// Default extension set for a language tag (case-insensitive).
    pub fn for_language(tag: &str) -> Result<Self, CloneDetectError> {
        let exts: &[&str] = match tag.to_lowercase().as_str() {
            "c++" | "cpp" | "cxx" => &["cpp", "h", "hpp", "cc", "cxx"],
            "c" => &["c", "h"],
            "rust" => &["rs"],
            "go" => &["go"],
            "python" => &["py"],
            "java" => &["java"],
            "javascript" => &["js"],
            _ => return Err(CloneDetectError::UnknownLanguage(tag.to_string())),
        };
        Ok(Self::from_extensions(exts.iter().copied()))
    }

    fn selects(&self, rel: &Path) -> bool {
        if rel.components().any(|c| {
            self.exclude_dirs
                .iter()
                .any(|d| c.as_os_str().to_string_lossy() == *d)
        }) {
            return false;
        }
        match rel.extension() {
            Some(ext) => {
                let ext = ext.to_string_lossy().to_lowercase();
                self.extensions.contains(&ext)
            }
            None => false,
        }
    }
}

/// Per-project classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    /// Vulnerable code present, fix absent.
    Vulnerable,
    /// Fix code present.
    Fixed,
    /// Neither vulnerable nor fix code present.
    NotAffected,
    /// Excluded before scanning (fork date outside the window, language
    /// mismatch).
    FilteredOut,
    /// The project could not be scanned.
    Error,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::Vulnerable => "VULNERABLE",
            VerdictStatus::Fixed => "FIXED",
            VerdictStatus::NotAffected => "NOT_AFFECTED",
            VerdictStatus::FilteredOut => "FILTERED_OUT",
            VerdictStatus::Error => "ERROR",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "VULNERABLE" => VerdictStatus::Vulnerable,
            "FIXED" => VerdictStatus::Fixed,
            "NOT_AFFECTED" => VerdictStatus::NotAffected,
            "FILTERED_OUT" => VerdictStatus::FilteredOut,
            "ERROR" => VerdictStatus::Error,
            _ => return None,
        })
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The outcome of scanning one project.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectVerdict {
    pub project: String,
    pub status: VerdictStatus,
    pub vuln_matches: Vec<CloneMatch>,
    pub fix_matches: Vec<CloneMatch>,
    /// Wall time spent scanning, in milliseconds.
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

impl ProjectVerdict {
    /// Applies the verdict rule: vulnerable iff ANY vulnerable snippet
    /// matched and NO fix snippet matched; fixed iff any fix snippet
    /// matched; otherwise not affected.
    pub fn classify(
        project: impl Into<String>,
        vuln_matches: Vec<CloneMatch>,
        fix_matches: Vec<CloneMatch>,
        elapsed_ms: u64,
        diagnostics: Vec<String>,
    ) -> Self {
        let status = if !fix_matches.is_empty() {
            VerdictStatus::Fixed
        } else if !vuln_matches.is_empty() {
            VerdictStatus::Vulnerable
        } else {
            VerdictStatus::NotAffected
        };
        Self {
            project: project.into(),
            status,
            vuln_matches,
            fix_matches,
            elapsed_ms,
            diagnostics,
        }
    }

    /// A verdict for a project excluded before scanning.
    pub fn filtered_out(project: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            project: project.into(),
            status: VerdictStatus::FilteredOut,
            vuln_matches: Vec::new(),
            fix_matches: Vec::new(),
            elapsed_ms: 0,
            diagnostics: vec![reason.into()],
        }
    }

    /// A verdict for a project that could not be scanned.
    pub fn error(project: impl Into<String>, diagnostic: impl Into<String>) -> Self {
        Self {
            project: project.into(),
            status: VerdictStatus::Error,
            vuln_matches: Vec::new(),
            fix_matches: Vec::new(),
            elapsed_ms: 0,
            diagnostics: vec![diagnostic.into()],
        }
    }

    /// Checks the status/match invariants; used when loading reports
    /// produced elsewhere.
    pub fn check_invariants(&self) -> Result<(), String> {
        match self.status {
            VerdictStatus::Vulnerable => {
                if self.vuln_matches.is_empty() || !self.fix_matches.is_empty() {
                    return Err(format!(
                        "{}: VULNERABLE requires vulnerable matches and no fix matches",
                        self.project
                    ));
                }
            }
            VerdictStatus::Fixed => {
                if self.fix_matches.is_empty() {
                    return Err(format!("{}: FIXED requires fix matches", self.project));
                }
            }
            VerdictStatus::NotAffected => {
                if !self.vuln_matches.is_empty() {
                    return Err(format!(
                        "{}: NOT_AFFECTED requires no vulnerable matches",
                        self.project
                    ));
                }
            }
            VerdictStatus::FilteredOut | VerdictStatus::Error => {}
        }
        Ok(())
    }
}

/// Normalizes every selected file under `root`, in path order.
/// Unreadable and binary files are skipped with a warning; an unreadable
/// root is an error.
pub fn normalize_tree(
    root: &Path,
    profile: &NormalizationProfile,
    selector: &FileSelector,
) -> Result<(Vec<NormalizedFile>, Vec<String>), CloneDetectError> {
    if !root.is_dir() {
        return Err(CloneDetectError::UnreadableTree {
            path: root.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "not a directory"),
        });
    }

    let mut rel_paths = Vec::new();
    for entry in WalkDir::new(root).follow_links(false) {
        let entry = entry.map_err(|e| CloneDetectError::UnreadableTree {
            path: root.to_path_buf(),
            source: e.into(),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walkdir yields paths under root")
            .to_path_buf();
        if selector.selects(&rel) {
            rel_paths.push(rel);
        }
    }
    rel_paths.sort();

    let mut files = Vec::new();
    let mut warnings = Vec::new();
    for rel in rel_paths {
        let rel_str = rel.to_string_lossy().replace('\\', "/");
        let bytes = match std::fs::read(root.join(&rel)) {
            Ok(b) => b,
            Err(e) => {
                warnings.push(format!("skipped unreadable file {rel_str}: {e}"));
                continue;
            }
        };
        if bytes.contains(&0) {
            warnings.push(format!("skipped binary file {rel_str}"));
            continue;
        }
        let text = match String::from_utf8(bytes) {
            Ok(t) => t,
            Err(e) => {
                warnings.push(format!(
                    "file {rel_str} contains invalid UTF-8; bytes replaced"
                ));
                String::from_utf8_lossy(e.as_bytes()).into_owned()
            }
        };
        let normalized = normalize_source(rel_str.clone(), &text, profile);
        for w in &normalized.warnings {
            warnings.push(format!("{rel_str}: {w}"));
        }
        files.push(normalized);
    }
    Ok((files, warnings))
}

/// Scans one project tree against a detection test and classifies it.
///
/// Never fails: an unreadable tree yields a verdict with status `ERROR`
/// and a diagnostic.
pub fn scan_project(
    test: &DetectionTest,
    project_name: &str,
    project_root: &Path,
    profile: &NormalizationProfile,
    selector: &FileSelector,
) -> ProjectVerdict {
    let started = Instant::now();
    let (files, mut diagnostics) = match normalize_tree(project_root, profile, selector) {
        Ok(v) => v,
        Err(e) => return ProjectVerdict::error(project_name, e.to_string()),
    };

    let mut vuln_matches = Vec::new();
    let mut fix_matches = Vec::new();
    for file in &files {
        for (idx, snippet) in test.vulnerable_snippets.iter().enumerate() {
            vuln_matches.extend(find_clones(
                &snippet.normalized,
                file,
                snippet.threshold,
                idx,
            ));
        }
        for (idx, snippet) in test.fix_snippets.iter().enumerate() {
            fix_matches.extend(find_clones(
                &snippet.normalized,
                file,
                snippet.threshold,
                idx,
            ));
        }
    }
    let sort_key = |m: &CloneMatch| (m.source_file.clone(), m.start_line, m.snippet_index);
    vuln_matches.sort_by_key(sort_key);
    fix_matches.sort_by_key(sort_key);
    diagnostics.sort();

    let elapsed_ms = started.elapsed().as_millis() as u64;
    ProjectVerdict::classify(
        project_name,
        vuln_matches,
        fix_matches,
        elapsed_ms,
        diagnostics,
    )
}

/// How much of `target` is cloned from `reference`: `cloned_lines` (K)
/// over `total_lines` (T).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneRatioResult {
    pub target: String,
    pub reference: String,
    pub cloned_lines: usize,
    pub total_lines: usize,
    pub min_block: usize,
}

impl CloneRatioResult {
    /// K / T, in [0, 1]. Computed, never stored.
    pub fn ratio(&self) -> f64 {
        self.cloned_lines as f64 / self.total_lines as f64
    }
}

/// Measures the fraction of `target`'s normalized lines covered by at
/// least one common block of at least `min_block` contiguous lines
/// shared with any `reference` file. A line covered by several blocks
/// counts once.
pub fn clone_ratio(
    target_root: &Path,
    reference_root: &Path,
    profile: &NormalizationProfile,
    selector: &FileSelector,
    min_block: usize,
) -> Result<CloneRatioResult, CloneDetectError> {
    assert!(
        min_block >= 2,
        "min_block below 2 matches single-line noise"
    );

    let (target_files, _) = normalize_tree(target_root, profile, selector)?;
    let (reference_files, _) = normalize_tree(reference_root, profile, selector)?;

    let total_lines: usize = target_files.iter().map(|f| f.lines.len()).sum();
    if total_lines == 0 {
        return Err(CloneDetectError::EmptyTarget);
    }

    // Shared interner so equal lines in target and reference get equal ids.
    let mut ids: HashMap<&str, u32> = HashMap::new();

    fn intern_lines<'a>(file: &'a NormalizedFile, ids: &mut HashMap<&'a str, u32>) -> Vec<u32> {
        file.lines
            .iter()
            .map(|l| {
                let next = ids.len() as u32;
                *ids.entry(l.as_str()).or_insert(next)
            })
            .collect()
    }

    let reference_ids: Vec<Vec<u32>> = reference_files
        .iter()
        .map(|f| intern_lines(f, &mut ids))
        .collect();
    let target_ids: Vec<Vec<u32>> = target_files
        .iter()
        .map(|f| intern_lines(f, &mut ids))
        .collect();

    // Every min_block-gram of the reference. A target line is part of a
    // common block of length >= min_block exactly when some
    // min_block-gram through it appears here.
    let mut reference_grams: HashSet<&[u32]> = HashSet::new();
    for file_ids in &reference_ids {
        if file_ids.len() >= min_block {
            for gram in file_ids.windows(min_block) {
                reference_grams.insert(gram);
            }
        }
    }

    let mut cloned_lines = 0usize;
    for file_ids in &target_ids {
        if file_ids.len() < min_block {
            continue;
        }
        let mut covered = vec![false; file_ids.len()];
        for (start, gram) in file_ids.windows(min_block).enumerate() {
            if reference_grams.contains(gram) {
                for c in covered.iter_mut().skip(start).take(min_block) {
                    *c = true;
                }
            }
        }
        cloned_lines += covered.iter().filter(|c| **c).count();
    }

    Ok(CloneRatioResult {
        target: target_root.to_string_lossy().into_owned(),
        reference: reference_root.to_string_lossy().into_owned(),
        cloned_lines,
        total_lines,
        min_block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn profile() -> NormalizationProfile {
        NormalizationProfile::default()
    }

    fn normalized(lines: &[&str]) -> NormalizedFile {
        NormalizedFile {
            path: "mem".to_string(),
            lines: lines.iter().map(|s| s.to_string()).collect(),
            line_map: (1..=lines.len()).collect(),
            warnings: Vec::new(),
        }
    }

    fn owned(lines: &[&str]) -> Vec<String> {
        lines.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn normalize_strips_comments_and_maps_lines() {
        let src = "  int x = 1; // init\n\n/* c */ int y;";
        let out = normalize_source("f.cpp", src, &profile());
        assert_eq!(out.lines, vec!["int x = 1;", "int y;"]);
        assert_eq!(out.line_map, vec![1, 3]);
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn normalize_all_comment_file_is_empty() {
        let src = "// a\n/* b\n c */\n   \n";
        let out = normalize_source("f.cpp", src, &profile());
        assert!(out.lines.is_empty());
        assert!(out.line_map.is_empty());
    }

    #[test]
    fn normalize_is_fixpoint_on_normalized_input() {
        let src = "int x = 1;\nint y = 2;";
        let once = normalize_source("f.cpp", src, &profile());
        let twice = normalize_source("f.cpp", &once.lines.join("\n"), &profile());
        assert_eq!(once.lines, twice.lines);
        assert_eq!(twice.line_map, vec![1, 2]);
    }

    #[test]
    fn normalize_block_comment_spans_lines() {
        let src = "a();\n/* start\nstill comment\nend */ b();\nc();";
        let out = normalize_source("f.cpp", src, &profile());
        assert_eq!(out.lines, vec!["a();", "b();", "c();"]);
        assert_eq!(out.line_map, vec![1, 4, 5]);
    }

    #[test]
    fn normalize_unterminated_block_warns_not_fails() {
        let src = "a();\n/* open\nnever closed";
        let out = normalize_source("f.cpp", src, &profile());
        assert_eq!(out.lines, vec!["a();"]);
        assert_eq!(out.warnings.len(), 1);
        assert!(out.warnings[0].contains("line 2"));
    }

    #[test]
    fn normalize_shields_markers_inside_strings() {
        let src = "url = \"http://example.com\"; // real comment";
        let out = normalize_source("f.cpp", src, &profile());
        assert_eq!(out.lines, vec!["url = \"http://example.com\";"]);
    }

    #[test]
    fn normalize_keeps_blank_lines_when_configured() {
        let mut p = profile();
        p.drop_blank_lines = false;
        let out = normalize_source("f.cpp", "a;\n\nb;", &p);
        assert_eq!(out.lines, vec!["a;", "", "b;"]);
        assert_eq!(out.line_map, vec![1, 2, 3]);
    }

    #[test]
    fn find_clones_self_match() {
        let hay = normalized(&["a", "b", "c"]);
        let needle = owned(&["a", "b", "c"]);
        let matches = find_clones(&needle, &hay, 3, 0);
        assert_eq!(matches.len(), 1);
        assert_eq!(matches[0].start_line, 1);
        assert_eq!(matches[0].end_line, 3);
        assert_eq!(matches[0].line_count, 3);
    }

    #[test]
    fn find_clones_overlapping_occurrences() {
        let hay = normalized(&["a", "b", "a", "b", "a"]);
        let needle = owned(&["a", "b", "a"]);
        let matches = find_clones(&needle, &hay, 3, 0);
        let starts: Vec<usize> = matches.iter().map(|m| m.start_line).collect();
        assert_eq!(starts, vec![1, 3]);
    }

    #[test]
    fn find_clones_absent_needle() {
        let hay = normalized(&["a", "b"]);
        let needle = owned(&["z"]);
        assert!(find_clones(&needle, &hay, 1, 0).is_empty());
    }

    #[test]
    fn find_clones_reports_original_line_numbers() {
        let hay = NormalizedFile {
            path: "src/main.cpp".to_string(),
            lines: owned(&["x", "y"]),
            line_map: vec![100, 119],
            warnings: Vec::new(),
        };
        let matches = find_clones(&owned(&["x", "y"]), &hay, 2, 4);
        assert_eq!(matches[0].start_line, 100);
        assert_eq!(matches[0].end_line, 119);
        assert_eq!(matches[0].snippet_index, 4);
    }

    #[test]
    #[should_panic(expected = "threshold must equal")]
    fn find_clones_rejects_wrong_threshold() {
        let hay = normalized(&["a"]);
        find_clones(&owned(&["a"]), &hay, 2, 0);
    }

    /// Brute-force sliding-window oracle used by the equivalence tests.
    fn brute_force(needle: &[String], hay: &NormalizedFile) -> Vec<(usize, usize)> {
        let n = hay.lines.len();
        let m = needle.len();
        let mut out = Vec::new();
        if m == 0 || m > n {
            return out;
        }
        for s in 0..=(n - m) {
            if hay.lines[s..s + m] == needle[..] {
                out.push((hay.line_map[s], hay.line_map[s + m - 1]));
            }
        }
        out
    }

    proptest! {
        #[test]
        fn find_clones_matches_brute_force(
            hay_syms in proptest::collection::vec(0u8..4, 1..200),
            needle_syms in proptest::collection::vec(0u8..4, 1..6),
        ) {
            let hay_lines: Vec<&str> = hay_syms.iter().map(|s| ["a","b","c","d"][*s as usize]).collect();
            let needle: Vec<String> = needle_syms.iter().map(|s| ["a","b","c","d"][*s as usize].to_string()).collect();
            let hay = normalized(&hay_lines);
            let got: Vec<(usize, usize)> = find_clones(&needle, &hay, needle.len(), 0)
                .into_iter()
                .map(|m| (m.start_line, m.end_line))
                .collect();
            prop_assert_eq!(got, brute_force(&needle, &hay));
        }

        #[test]
        fn normalization_is_idempotent(src in "[ -~\\n]{0,400}") {
            let p = profile();
            let once = normalize_source("f", &src, &p);
            let twice = normalize_source("f", &once.lines.join("\n"), &p);
            prop_assert_eq!(once.lines, twice.lines);
        }

        #[test]
        fn line_map_strictly_increasing(src in "[ -~\\n]{0,400}") {
            let out = normalize_source("f", &src, &profile());
            prop_assert!(out.line_map.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(out.lines.len(), out.line_map.len());
        }
    }

    fn write_tree(root: &Path, files: &[(&str, &str)]) {
        for (rel, content) in files {
            let path = root.join(rel);
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(path, content).unwrap();
        }
    }

    #[test]
    fn clone_ratio_self_is_one() {
        let dir = tempfile::tempdir().unwrap();
        write_tree(
            dir.path(),
            &[(
                "src/a.cpp",
                "int a1;\nint a2;\nint a3;\nint a4;\nint a5;\nint a6;\nint a7;\n",
            )],
        );
        let selector = FileSelector::for_language("C++").unwrap();
        let r = clone_ratio(dir.path(), dir.path(), &profile(), &selector, 6).unwrap();
        assert_eq!(r.cloned_lines, r.total_lines);
        assert_eq!(r.ratio(), 1.0);
    }

    #[test]
    fn clone_ratio_disjoint_is_zero() {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        write_tree(
            a.path(),
            &[("x.cpp", "a1;\na2;\na3;\na4;\na5;\na6;\na7;\n")],
        );
        write_tree(
            b.path(),
            &[("y.cpp", "b1;\nb2;\nb3;\nb4;\nb5;\nb6;\nb7;\n")],
        );
        let selector = FileSelector::for_language("C++").unwrap();
        let r = clone_ratio(a.path(), b.path(), &profile(), &selector, 6).unwrap();
        assert_eq!(r.cloned_lines, 0);
        assert_eq!(r.ratio(), 0.0);
    }

    #[test]
    fn clone_ratio_partial_block() {
        // 10 normalized target lines, 6 of which form a shared block.
        let target = tempfile::tempdir().unwrap();
        let reference = tempfile::tempdir().unwrap();
        let shared = "s1;\ns2;\ns3;\ns4;\ns5;\ns6;\n";
        write_tree(
            target.path(),
            &[("t.cpp", &format!("{shared}u1;\nu2;\nu3;\nu4;\n"))],
        );
        write_tree(
            reference.path(),
            &[("r.cpp", &format!("r1;\nr2;\n{shared}r3;\n"))],
        );
        let selector = FileSelector::for_language("C++").unwrap();
        let r = clone_ratio(target.path(), reference.path(), &profile(), &selector, 4).unwrap();
        assert_eq!(r.total_lines, 10);
        assert_eq!(r.cloned_lines, 6);
        assert!((r.ratio() - 0.6).abs() < 1e-12);
    }

    #[test]
    fn clone_ratio_empty_target_errors() {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        write_tree(a.path(), &[("x.cpp", "// only comments\n")]);
        write_tree(b.path(), &[("y.cpp", "b1;\n")]);
        let selector = FileSelector::for_language("C++").unwrap();
        let err = clone_ratio(a.path(), b.path(), &profile(), &selector, 6).unwrap_err();
        assert!(matches!(err, CloneDetectError::EmptyTarget));
    }

    #[test]
    fn clone_ratio_monotone_in_min_block() {
        let target = tempfile::tempdir().unwrap();
        let reference = tempfile::tempdir().unwrap();
        write_tree(
            target.path(),
            &[("t.cpp", "a;\nb;\nc;\nd;\ne;\nf;\ng;\nh;\nz1;\nz2;\n")],
        );
        write_tree(
            reference.path(),
            &[("r.cpp", "a;\nb;\nc;\nd;\nq;\ne;\nf;\ng;\nh;\n")],
        );
        let selector = FileSelector::for_language("C++").unwrap();
        let mut prev = None;
        for min_block in (2..=6).rev() {
            let r = clone_ratio(
                target.path(),
                reference.path(),
                &profile(),
                &selector,
                min_block,
            )
            .unwrap();
            if let Some(p) = prev {
                assert!(
                    r.cloned_lines >= p,
                    "K must not decrease as min_block decreases"
                );
            }
            prev = Some(r.cloned_lines);
        }
    }

    #[test]
    fn selector_picks_language_extensions() {
        let sel = FileSelector::for_language("c++").unwrap();
        assert!(sel.selects(Path::new("src/validation.cpp")));
        assert!(sel.selects(Path::new("include/chain.H")));
        assert!(!sel.selects(Path::new("README.md")));
        assert!(!sel.selects(Path::new("Makefile")));
        assert!(FileSelector::for_language("cobol").is_err());
    }

    #[test]
    fn selector_excludes_opt_in_dirs() {
        let mut sel = FileSelector::for_language("C++").unwrap();
        sel.exclude_dirs = vec!["test".to_string()];
        assert!(!sel.selects(Path::new("test/unit.cpp")));
        assert!(sel.selects(Path::new("src/unit.cpp")));
    }

    fn test_fixture() -> crate::testgen::DetectionTest {
        use crate::testgen::{Fragment, SnippetOrigin};
        let cve = crate::cve::parse_cve(
            &serde_json::json!({
                "id": "CVE-2020-0001",
                "published": "2020-01-01T00:00:00Z",
                "description": "double free in frame parser",
                "references": [],
                "affected_language": "C++",
                "affected_projects": []
            })
            .to_string(),
            &crate::cve::StopwordSet::default(),
        )
        .unwrap();
        let fragment = |lines: &[&str]| Fragment {
            source_lines: lines.iter().map(|s| s.to_string()).collect(),
            origin: SnippetOrigin {
                commit: "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa".into(),
                file: "src/frame.cpp".into(),
                start_line: 10,
            },
        };
        crate::testgen::build_detection_test(
            &cve,
            vec![fragment(&[
                "free(frame);",
                "decode(frame);",
                "free(frame);",
            ])],
            vec![fragment(&[
                "free(frame);",
                "frame = NULL;",
                "decode_checked(frame);",
            ])],
            &profile(),
        )
        .unwrap()
    }

    #[test]
    fn scan_project_classifies_vulnerable_fixed_unaffected() {
        let test = test_fixture();
        let selector = FileSelector::for_language("C++").unwrap();

        let vulnerable = tempfile::tempdir().unwrap();
        write_tree(
            vulnerable.path(),
            &[(
                "src/frame.cpp",
                "setup();\nfree(frame);\ndecode(frame);\nfree(frame);\n",
            )],
        );
        let v = scan_project(&test, "vuln-fork", vulnerable.path(), &profile(), &selector);
        assert_eq!(v.status, VerdictStatus::Vulnerable);
        assert!(!v.vuln_matches.is_empty());

        let patched = tempfile::tempdir().unwrap();
        write_tree(
            patched.path(),
            &[(
                "src/frame.cpp",
                "setup();\nfree(frame);\nframe = NULL;\ndecode_checked(frame);\n",
            )],
        );
        let f = scan_project(&test, "patched-fork", patched.path(), &profile(), &selector);
        assert_eq!(f.status, VerdictStatus::Fixed);

        let unrelated = tempfile::tempdir().unwrap();
        write_tree(unrelated.path(), &[("src/other.cpp", "int x = 0;\n")]);
        let n = scan_project(&test, "other", unrelated.path(), &profile(), &selector);
        assert_eq!(n.status, VerdictStatus::NotAffected);
        assert!(n.vuln_matches.is_empty());
    }

    #[test]
    fn scan_project_vulnerable_match_is_reproducible() {
        // Re-running the matcher at the reported location reproduces
        // every reported match.
        let test = test_fixture();
        let selector = FileSelector::for_language("C++").unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_tree(
            dir.path(),
            &[(
                "src/frame.cpp",
                "// parser entry\nsetup();\n\nfree(frame);\ndecode(frame);\nfree(frame);\nteardown();\n",
            )],
        );
        let verdict = scan_project(&test, "fork", dir.path(), &profile(), &selector);
        assert_eq!(verdict.status, VerdictStatus::Vulnerable);
        for m in &verdict.vuln_matches {
            let content = std::fs::read_to_string(dir.path().join(&m.source_file)).unwrap();
            let normalized = normalize_source(m.source_file.clone(), &content, &profile());
            let snippet = &test.vulnerable_snippets[m.snippet_index];
            let again = find_clones(
                &snippet.normalized,
                &normalized,
                snippet.threshold,
                m.snippet_index,
            );
            assert!(
                again
                    .iter()
                    .any(|r| r.start_line == m.start_line && r.end_line == m.end_line),
                "reported match at {}..{} not reproducible",
                m.start_line,
                m.end_line
            );
        }
    }

    #[test]
    fn scan_project_unreadable_root_is_error_verdict() {
        let test = test_fixture();
        let selector = FileSelector::for_language("C++").unwrap();
        let v = scan_project(
            &test,
            "ghost",
            Path::new("/nonexistent/ghost"),
            &profile(),
            &selector,
        );
        assert_eq!(v.status, VerdictStatus::Error);
        assert!(!v.diagnostics.is_empty());
    }

    #[test]
    fn normalize_tree_skips_binary_and_flags_lossy_files() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::create_dir_all(dir.path().join("src")).unwrap();
        std::fs::write(dir.path().join("src/good.cpp"), "int x;\n").unwrap();
        std::fs::write(dir.path().join("src/blob.cpp"), b"\x00\x01binary").unwrap();
        std::fs::write(dir.path().join("src/latin.cpp"), b"int caf\xe9 = 1;\n").unwrap();
        let selector = FileSelector::for_language("C++").unwrap();
        let (files, warnings) = normalize_tree(dir.path(), &profile(), &selector).unwrap();
        let paths: Vec<&str> = files.iter().map(|f| f.path.as_str()).collect();
        assert_eq!(paths, vec!["src/good.cpp", "src/latin.cpp"]);
        assert!(warnings.iter().any(|w| w.contains("binary")));
        assert!(warnings.iter().any(|w| w.contains("invalid UTF-8")));
    }

    #[test]
    fn verdict_classification_rules() {
        let m = CloneMatch {
            source_file: "a.cpp".into(),
            start_line: 1,
            end_line: 2,
            line_count: 2,
            snippet_index: 0,
        };
        let v = ProjectVerdict::classify("p", vec![m.clone()], vec![], 1, vec![]);
        assert_eq!(v.status, VerdictStatus::Vulnerable);
        v.check_invariants().unwrap();

        let f = ProjectVerdict::classify("p", vec![m.clone()], vec![m.clone()], 1, vec![]);
        assert_eq!(f.status, VerdictStatus::Fixed);
        f.check_invariants().unwrap();

        let n = ProjectVerdict::classify("p", vec![], vec![], 1, vec![]);
        assert_eq!(n.status, VerdictStatus::NotAffected);
        n.check_invariants().unwrap();
    }
}
