//! Version-control history analysis: locating bug-fixing commits from
//! issue links, tracing each fixed line back to the commit that last
//! touched it, and deriving the vulnerability window.
//!
//! All repository access goes through the system `git` client; parsing
//! sticks to plumbing-style output so behavior does not depend on user
//! configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;

use chrono::{DateTime, Utc};
use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cve::IssueRecord;

#[derive(Debug, Error)]
pub enum HistoryError {
    #[error("issue-search pattern does not compile: {0}")]
    BadPattern(#[from] regex::Error),
    #[error("commit {0} not found in repository")]
    CommitNotFound(String),
    #[error("unreadable repository {path}: {detail}")]
    UnreadableRepo { path: PathBuf, detail: String },
    #[error("repository {0} has no commits on its default branch")]
    EmptyHistory(PathBuf),
    #[error("{0} commit set is empty; cannot compute a window")]
    EmptyCommitSet(&'static str),
    #[error(
        "window inverted: oldest introducing commit {intro_min} is after newest fix {fix_max}; \
         the identified commit sets are suspect"
    )]
    InvertedWindow {
        intro_min: DateTime<Utc>,
        fix_max: DateTime<Utc>,
    },
    #[error("malformed issue export: {0}")]
    MalformedIssueExport(String),
    #[error("corrupt window file: {0}")]
    CorruptWindow(String),
    #[error("invalid commit id {0:?}: expected at least 7 hex characters")]
    BadCommitId(String),
    #[error("git {args} failed: {detail}")]
    Git { args: String, detail: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A commit hash: lowercase hex, at least 7 characters (full 40
/// preferred).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CommitId(String);

impl CommitId {
    pub fn new(raw: impl Into<String>) -> Result<Self, HistoryError> {
        let raw = raw.into();
        let lower = raw.to_lowercase();
        if lower.len() < 7 || lower.len() > 40 || !lower.chars().all(|c| c.is_ascii_hexdigit()) {
            return Err(HistoryError::BadCommitId(raw));
        }
        Ok(Self(lower))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for CommitId {
    type Error = HistoryError;
    fn try_from(value: String) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<CommitId> for String {
    fn from(id: CommitId) -> Self {
        id.0
    }
}

impl fmt::Display for CommitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A resolved commit. Identity (equality, ordering) is the hash alone.
///
/// Window arithmetic uses `committer_date`: it reflects when the change
/// entered the shared history, and unlike `author_date` it survives
/// rebases in a meaningful order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommitRef {
    pub hash: String,
    pub author_date: DateTime<Utc>,
    pub committer_date: DateTime<Utc>,
    pub touched_files: Vec<String>,
    pub parent_hashes: Vec<String>,
}

impl PartialEq for CommitRef {
    fn eq(&self, other: &Self) -> bool {
        self.hash == other.hash
    }
}
impl Eq for CommitRef {}
impl PartialOrd for CommitRef {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CommitRef {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.hash.cmp(&other.hash)
    }
}

/// The derived vulnerability window: `[intro_min, fix_max]` over the
/// identified introducing (`G_b`) and fixing (`G_f`) commit sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VulnWindow {
    pub intro_min: DateTime<Utc>,
    pub fix_max: DateTime<Utc>,
    pub intro_commits: BTreeSet<CommitRef>,
    pub fix_commits: BTreeSet<CommitRef>,
}

impl VulnWindow {
    /// Inclusive on both ends.
    pub fn contains(&self, instant: DateTime<Utc>) -> bool {
        self.intro_min <= instant && instant <= self.fix_max
    }

    /// Re-checks the construction invariants; used on windows read
    /// back from disk.
    pub fn validate(&self) -> Result<(), HistoryError> {
        if self.intro_commits.is_empty() {
            return Err(HistoryError::EmptyCommitSet("introducing"));
        }
        if self.fix_commits.is_empty() {
            return Err(HistoryError::EmptyCommitSet("fixing"));
        }
        let intro_min = self
            .intro_commits
            .iter()
            .map(|c| c.committer_date)
            .min()
            .expect("non-empty set");
        let fix_max = self
            .fix_commits
            .iter()
            .map(|c| c.committer_date)
            .max()
            .expect("non-empty set");
        if intro_min != self.intro_min || fix_max != self.fix_max {
            return Err(HistoryError::CorruptWindow(format!(
                "bounds [{}, {}] disagree with commit sets [{intro_min}, {fix_max}]",
                self.intro_min, self.fix_max
            )));
        }
        if self.intro_min > self.fix_max {
            return Err(HistoryError::InvertedWindow {
                intro_min: self.intro_min,
                fix_max: self.fix_max,
            });
        }
        Ok(())
    }
}

/// Read-only handle to a local git repository.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepositoryHandle {
    pub root_path: PathBuf,
    pub default_branch: String,
}

impl RepositoryHandle {
    /// Opens `path`, verifying it is a readable git work tree, and
    /// records the currently checked-out branch as the default.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, HistoryError> {
        let root_path = path.into();
        let inside = run_git(&root_path, &["rev-parse", "--is-inside-work-tree"]).map_err(|e| {
            HistoryError::UnreadableRepo {
                path: root_path.clone(),
                detail: e.to_string(),
            }
        })?;
        if inside.trim() != "true" {
            return Err(HistoryError::UnreadableRepo {
                path: root_path,
                detail: "not a git work tree".to_string(),
            });
        }
        let default_branch = match run_git(&root_path, &["symbolic-ref", "--short", "-q", "HEAD"]) {
            Ok(name) if !name.trim().is_empty() => name.trim().to_string(),
            _ => "HEAD".to_string(),
        };
        Ok(Self {
            root_path,
            default_branch,
        })
    }

    /// Resolves a commit id to a full [`CommitRef`] plus its message.
    pub fn lookup_commit(&self, id: &CommitId) -> Result<(CommitRef, String), HistoryError> {
        let format = "%H%x00%aI%x00%cI%x00%P%x00%B";
        let raw = match run_git(
            &self.root_path,
            &[
                "show",
                "-s",
                &format!("--format={format}"),
                id.as_str(),
                "--",
            ],
        ) {
            Ok(out) => out,
            Err(HistoryError::Git { detail, .. }) if is_missing_revision(&detail) => {
                return Err(HistoryError::CommitNotFound(id.to_string()))
            }
            Err(e) => return Err(e),
        };
        let parts: Vec<&str> = raw.splitn(5, '\0').collect();
        if parts.len() != 5 {
            return Err(HistoryError::Git {
                args: "show -s".to_string(),
                detail: format!("unexpected output for {id}"),
            });
        }
        let hash = parts[0].trim().to_string();
        let author_date = parse_git_date(parts[1])?;
        let committer_date = parse_git_date(parts[2])?;
        let parent_hashes: Vec<String> =
            parts[3].split_whitespace().map(|s| s.to_string()).collect();
        let message = parts[4].trim_end().to_string();

        let touched_files = self.touched_files(&hash, parent_hashes.first())?;
        Ok((
            CommitRef {
                hash,
                author_date,
                committer_date,
                touched_files,
                parent_hashes,
            },
            message,
        ))
    }

    fn touched_files(
        &self,
        hash: &str,
        first_parent: Option<&String>,
    ) -> Result<Vec<String>, HistoryError> {
        let out = match first_parent {
            Some(parent) => run_git(
                &self.root_path,
                &[
                    "diff-tree",
                    "--no-commit-id",
                    "--name-only",
                    "-r",
                    parent,
                    hash,
                ],
            )?,
            None => run_git(
                &self.root_path,
                &[
                    "diff-tree",
                    "--no-commit-id",
                    "--name-only",
                    "-r",
                    "--root",
                    hash,
                ],
            )?,
        };
        Ok(out
            .lines()
            .map(|l| l.to_string())
            .filter(|l| !l.is_empty())
            .collect())
    }

    /// Committer timestamp of the earliest commit on the default branch.
    pub fn first_commit_timestamp(&self) -> Result<DateTime<Utc>, HistoryError> {
        let out = match run_git(
            &self.root_path,
            &[
                "log",
                "--reverse",
                "--format=%cI",
                &self.default_branch,
                "--",
            ],
        ) {
            Ok(out) => out,
            Err(HistoryError::Git { detail, .. })
                if detail.contains("does not have any commits") || is_missing_revision(&detail) =>
            {
                return Err(HistoryError::EmptyHistory(self.root_path.clone()))
            }
            Err(e) => return Err(e),
        };
        match out.lines().next() {
            Some(first) => parse_git_date(first),
            None => Err(HistoryError::EmptyHistory(self.root_path.clone())),
        }
    }
}

fn is_missing_revision(detail: &str) -> bool {
    detail.contains("unknown revision")
        || detail.contains("bad revision")
        || detail.contains("bad object")
        || detail.contains("ambiguous argument")
}

fn parse_git_date(raw: &str) -> Result<DateTime<Utc>, HistoryError> {
    DateTime::parse_from_rfc3339(raw.trim())
        .map(|d| d.with_timezone(&Utc))
        .map_err(|e| HistoryError::Git {
            args: "date parse".to_string(),
            detail: format!("{raw:?}: {e}"),
        })
}

fn run_git(dir: &Path, args: &[&str]) -> Result<String, HistoryError> {
    let output = Command::new("git")
        .arg("-C")
        .arg(dir)
        .args(["-c", "core.quotePath=false"])
        .args(args)
        .output()
        .map_err(|e| HistoryError::Git {
            args: args.join(" "),
            detail: format!("failed to spawn git: {e}"),
        })?;
    if !output.status.success() {
        return Err(HistoryError::Git {
            args: args.join(" "),
            detail: String::from_utf8_lossy(&output.stderr).trim().to_string(),
        });
    }
    Ok(String::from_utf8_lossy(&output.stdout).into_owned())
}

/// Reads a local issue-tracker export: a JSON array of objects with
/// `issue_id`, `labels[]`, `commits[]` (hashes), and `text`. Labels are
/// lowercased on ingestion.
pub fn read_issues(path: &Path) -> Result<Vec<IssueRecord>, HistoryError> {
    #[derive(Deserialize)]
    struct RawIssue {
        issue_id: Option<String>,
        #[serde(default)]
        labels: Vec<String>,
        #[serde(default)]
        commits: Vec<String>,
        #[serde(default)]
        text: String,
    }

    let content = std::fs::read_to_string(path)?;
    let raw: Vec<RawIssue> = serde_json::from_str(&content)
        .map_err(|e| HistoryError::MalformedIssueExport(e.to_string()))?;

    let mut issues = Vec::with_capacity(raw.len());
    for (idx, r) in raw.into_iter().enumerate() {
        let issue_id = r.issue_id.filter(|s| !s.trim().is_empty()).ok_or_else(|| {
            HistoryError::MalformedIssueExport(format!("entry {idx}: missing issue_id"))
        })?;
        let mut linked_commits = Vec::with_capacity(r.commits.len());
        for c in r.commits {
            linked_commits.push(CommitId::new(&c).map_err(|_| {
                HistoryError::MalformedIssueExport(format!(
                    "entry {idx} ({issue_id}): bad commit id {c:?}"
                ))
            })?);
        }
        issues.push(IssueRecord {
            issue_id,
            state_labels: r.labels.iter().map(|l| l.to_lowercase()).collect(),
            linked_commits,
            title_and_body: r.text,
        });
    }
    Ok(issues)
}

/// Where a fix commit's pattern match came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixCommitMatch {
    pub commit: String,
    pub issue_id: String,
    pub matched_in_message: bool,
    pub matched_in_issue_text: bool,
}

/// Result of the fix-commit search: the deduplicated commit set plus
/// per-commit provenance and any skipped-commit warnings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedFixes {
    pub commits: BTreeSet<CommitRef>,
    pub details: Vec<FixCommitMatch>,
    pub warnings: Vec<String>,
}

/// Scans the linked commits of the given issues for ones whose commit
/// message or issue text matches `pattern`, and returns the union,
/// deduplicated by hash.
///
/// Callers restrict `issues` to fixed/resolved/closed/bug entries (see
/// [`IssueRecord::qualifies_for_fix_search`]). Matching against both the
/// message and the issue text is deliberate: the search is
/// recall-oriented, and the provenance of each match is recorded.
pub fn match_fix_commits(
    issues: &[IssueRecord],
    pattern: &str,
    repo: &RepositoryHandle,
) -> Result<MatchedFixes, HistoryError> {
    let re = Regex::new(pattern)?;

    let mut by_hash: BTreeMap<String, CommitRef> = BTreeMap::new();
    let mut details = Vec::new();
    let mut warnings = Vec::new();

    for issue in issues {
        let issue_text_matches = re.is_match(&issue.title_and_body);
        for id in &issue.linked_commits {
            let (commit, message) = match repo.lookup_commit(id) {
                Ok(v) => v,
                Err(HistoryError::CommitNotFound(_)) => {
                    warnings.push(format!(
                        "issue {}: linked commit {id} not found in repository; skipped",
                        issue.issue_id
                    ));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let message_matches = re.is_match(&message);
            if message_matches || issue_text_matches {
                details.push(FixCommitMatch {
                    commit: commit.hash.clone(),
                    issue_id: issue.issue_id.clone(),
                    matched_in_message: message_matches,
                    matched_in_issue_text: issue_text_matches,
                });
                by_hash.entry(commit.hash.clone()).or_insert(commit);
            }
        }
    }

    Ok(MatchedFixes {
        commits: by_hash.into_values().collect(),
        details,
        warnings,
    })
}

#[derive(Debug, Clone, Copy)]
struct Hunk {
    old_start: usize,
    old_count: usize,
}

fn hunk_header_pattern() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^@@ -(\d+)(?:,(\d+))? \+\d+(?:,\d+)? @@").expect("static pattern")
    })
}

/// Parses `--unified=0` diff output into per-old-file hunk lists.
/// Files created by the diff (old side `/dev/null`) are skipped.
fn parse_diff_hunks(diff: &str) -> Vec<(String, Vec<Hunk>)> {
    let mut files: Vec<(String, Vec<Hunk>)> = Vec::new();
    let mut current: Option<(String, Vec<Hunk>)> = None;

    for line in diff.lines() {
        if let Some(rest) = line.strip_prefix("--- ") {
            if let Some(file) = current.take() {
                if !file.1.is_empty() {
                    files.push(file);
                }
            }
            let old = rest.trim();
            if old == "/dev/null" {
                current = None;
            } else {
                let path = old.strip_prefix("a/").unwrap_or(old).to_string();
                current = Some((path, Vec::new()));
            }
        } else if let Some(caps) = hunk_header_pattern().captures(line) {
            if let Some((_, hunks)) = current.as_mut() {
                let old_start: usize = caps[1].parse().unwrap_or(0);
                let old_count: usize = caps
                    .get(2)
                    .map(|m| m.as_str().parse().unwrap_or(1))
                    .unwrap_or(1);
                hunks.push(Hunk {
                    old_start,
                    old_count,
                });
            }
        }
    }
    if let Some(file) = current.take() {
        if !file.1.is_empty() {
            files.push(file);
        }
    }
    files
}

fn merge_ranges(mut ranges: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    ranges.sort_unstable();
    let mut merged: Vec<(usize, usize)> = Vec::new();
    for (start, end) in ranges {
        match merged.last_mut() {
            Some((_, last_end)) if start <= *last_end + 1 => *last_end = (*last_end).max(end),
            _ => merged.push((start, end)),
        }
    }
    merged
}

/// Traces the lines a fix commit touched back to the commits that last
/// modified them, by blaming those lines at the fix's first parent.
///
/// Lines the fix deleted or modified are blamed directly. A hunk that
/// only inserts lines into an existing file implicates the surrounding
/// code instead: the lines immediately above and below the insertion
/// point are blamed, when they exist. A fix that only creates new files
/// has nothing to blame and yields the empty set, as does a root commit.
pub fn blame_previous_commits(
    fix: &CommitRef,
    repo: &RepositoryHandle,
) -> Result<BTreeSet<CommitRef>, HistoryError> {
    let Some(parent) = fix.parent_hashes.first() else {
        return Ok(BTreeSet::new());
    };

    let diff = match run_git(
        &repo.root_path,
        &[
            "diff",
            "--no-color",
            "--no-renames",
            "--no-ext-diff",
            "--unified=0",
            parent,
            &fix.hash,
        ],
    ) {
        Ok(out) => out,
        Err(HistoryError::Git { detail, .. }) if is_missing_revision(&detail) => {
            return Err(HistoryError::CommitNotFound(fix.hash.clone()))
        }
        Err(e) => return Err(e),
    };

    let mut blamed_hashes: BTreeSet<String> = BTreeSet::new();
    for (old_path, hunks) in parse_diff_hunks(&diff) {
        let old_len = run_git(&repo.root_path, &["show", &format!("{parent}:{old_path}")])?
            .lines()
            .count();
        if old_len == 0 {
            continue;
        }

        let mut ranges: Vec<(usize, usize)> = Vec::new();
        for hunk in hunks {
            if hunk.old_count > 0 {
                ranges.push((hunk.old_start, hunk.old_start + hunk.old_count - 1));
            } else {
                // Pure insertion after old line `old_start`: blame the
                // adjacent lines.
                if hunk.old_start >= 1 {
                    ranges.push((hunk.old_start, hunk.old_start));
                }
                if hunk.old_start < old_len {
                    ranges.push((hunk.old_start + 1, hunk.old_start + 1));
                }
            }
        }
        let ranges: Vec<(usize, usize)> = merge_ranges(ranges)
            .into_iter()
            .filter_map(|(s, e)| {
                let s = s.max(1);
                let e = e.min(old_len);
                (s <= e).then_some((s, e))
            })
            .collect();
        if ranges.is_empty() {
            continue;
        }

        let mut args: Vec<String> = vec!["blame".to_string(), "--porcelain".to_string()];
        for (start, end) in &ranges {
            args.push("-L".to_string());
            args.push(format!("{start},{end}"));
        }
        args.push(parent.clone());
        args.push("--".to_string());
        args.push(old_path.clone());
        let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let blame = run_git(&repo.root_path, &arg_refs)?;

        for line in blame.lines() {
            let mut fields = line.split(' ');
            if let Some(first) = fields.next() {
                if first.len() == 40
                    && first.chars().all(|c| c.is_ascii_hexdigit())
                    && fields.next().is_some_and(|f| f.parse::<u64>().is_ok())
                {
                    blamed_hashes.insert(first.to_string());
                }
            }
        }
    }

    blamed_hashes.remove(&fix.hash);

    let mut commits = BTreeSet::new();
    for hash in blamed_hashes {
        let id = CommitId::new(&hash)?;
        let (commit, _) = repo.lookup_commit(&id)?;
        commits.insert(commit);
    }
    Ok(commits)
}

/// Builds the vulnerability window from the introducing and fixing
/// commit sets: the oldest introduction date to the newest fix date.
/// An inverted window aborts instead of guessing, since it signals
/// misidentified commits.
pub fn compute_window(
    intro: &BTreeSet<CommitRef>,
    fix: &BTreeSet<CommitRef>,
) -> Result<VulnWindow, HistoryError> {
    if intro.is_empty() {
        return Err(HistoryError::EmptyCommitSet("introducing"));
    }
    if fix.is_empty() {
        return Err(HistoryError::EmptyCommitSet("fixing"));
    }
    let intro_min = intro
        .iter()
        .map(|c| c.committer_date)
        .min()
        .expect("non-empty set");
    let fix_max = fix
        .iter()
        .map(|c| c.committer_date)
        .max()
        .expect("non-empty set");
    if intro_min > fix_max {
        return Err(HistoryError::InvertedWindow { intro_min, fix_max });
    }
    Ok(VulnWindow {
        intro_min,
        fix_max,
        intro_commits: intro.clone(),
        fix_commits: fix.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;

    fn commit(hash: &str, committed: &str) -> CommitRef {
        CommitRef {
            hash: hash.to_string(),
            author_date: DateTime::parse_from_rfc3339(committed)
                .unwrap()
                .with_timezone(&Utc),
            committer_date: DateTime::parse_from_rfc3339(committed)
                .unwrap()
                .with_timezone(&Utc),
            touched_files: vec![],
            parent_hashes: vec![],
        }
    }

    #[test]
    fn commit_id_validation() {
        assert_eq!(CommitId::new("B8F8019").unwrap().as_str(), "b8f8019");
        assert!(CommitId::new("abc").is_err());
        assert!(CommitId::new("xyzxyzz").is_err());
        assert!(CommitId::new("a".repeat(41)).is_err());
    }

    #[test]
    fn compute_window_takes_min_intro_max_fix() {
        let intro = BTreeSet::from([
            commit("a000001", "2016-12-01T00:00:00Z"),
            commit("a000002", "2017-03-05T00:00:00Z"),
        ]);
        let fix = BTreeSet::from([commit("b000001", "2018-09-18T00:00:00Z")]);
        let w = compute_window(&intro, &fix).unwrap();
        assert_eq!(
            w.intro_min,
            Utc.with_ymd_and_hms(2016, 12, 1, 0, 0, 0).unwrap()
        );
        assert_eq!(
            w.fix_max,
            Utc.with_ymd_and_hms(2018, 9, 18, 0, 0, 0).unwrap()
        );
        assert_eq!(w.intro_commits.len(), 2);
        assert_eq!(w.fix_commits.len(), 1);
    }

    #[test]
    fn compute_window_zero_width_is_valid() {
        let at = "2018-01-01T12:00:00Z";
        let intro = BTreeSet::from([commit("a000001", at)]);
        let fix = BTreeSet::from([commit("b000001", at)]);
        let w = compute_window(&intro, &fix).unwrap();
        assert_eq!(w.intro_min, w.fix_max);
        assert!(w.contains(w.intro_min));
    }

    #[test]
    fn compute_window_rejects_inversion() {
        let intro = BTreeSet::from([commit("a000001", "2019-01-01T00:00:00Z")]);
        let fix = BTreeSet::from([commit("b000001", "2018-01-01T00:00:00Z")]);
        assert!(matches!(
            compute_window(&intro, &fix),
            Err(HistoryError::InvertedWindow { .. })
        ));
    }

    #[test]
    fn compute_window_rejects_empty_sets() {
        let some = BTreeSet::from([commit("a000001", "2018-01-01T00:00:00Z")]);
        assert!(matches!(
            compute_window(&BTreeSet::new(), &some),
            Err(HistoryError::EmptyCommitSet("introducing"))
        ));
        assert!(matches!(
            compute_window(&some, &BTreeSet::new()),
            Err(HistoryError::EmptyCommitSet("fixing"))
        ));
    }

    #[test]
    fn window_bound_is_min_of_all_intro_dates() {
        let intro = BTreeSet::from([
            commit("a000001", "2017-06-01T00:00:00Z"),
            commit("a000002", "2016-02-01T00:00:00Z"),
            commit("a000003", "2018-01-01T00:00:00Z"),
        ]);
        let fix = BTreeSet::from([commit("b000001", "2018-09-18T00:00:00Z")]);
        let w = compute_window(&intro, &fix).unwrap();
        for c in &w.intro_commits {
            assert!(w.intro_min <= c.committer_date);
        }
    }

    #[test]
    fn read_issues_normalizes_labels() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("issues.json");
        std::fs::write(
            &path,
            serde_json::json!([
                {"issue_id": "14247", "labels": ["Bug", "CLOSED"],
                 "commits": ["b8f8019"], "text": "Fix CVE-2018-17144"},
                {"issue_id": "15000", "labels": ["open"], "commits": [], "text": "other"}
            ])
            .to_string(),
        )
        .unwrap();
        let issues = read_issues(&path).unwrap();
        assert_eq!(issues.len(), 2);
        assert!(issues[0].state_labels.contains("bug"));
        assert!(issues[0].state_labels.contains("closed"));
        assert!(issues[0].qualifies_for_fix_search());
        assert!(!issues[1].qualifies_for_fix_search());
    }

    #[test]
    fn read_issues_rejects_missing_id() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("issues.json");
        std::fs::write(&path, r#"[{"labels": [], "commits": [], "text": ""}]"#).unwrap();
        assert!(matches!(
            read_issues(&path),
            Err(HistoryError::MalformedIssueExport(_))
        ));
    }

    #[test]
    fn read_issues_empty_export() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("issues.json");
        std::fs::write(&path, "[]").unwrap();
        assert!(read_issues(&path).unwrap().is_empty());
    }

    #[test]
    fn diff_hunk_parsing() {
        let diff = "\
diff --git a/src/a.cpp b/src/a.cpp
index 111..222 100644
--- a/src/a.cpp
+++ b/src/a.cpp
@@ -10,2 +10,1 @@ void f()
-old line one
-old line two
+new line
@@ -20,0 +19,3 @@ void g()
+added only
+added only
+added only
diff --git a/new.cpp b/new.cpp
new file mode 100644
--- /dev/null
+++ b/new.cpp
@@ -0,0 +1,2 @@
+brand new
+brand new
";
        let files = parse_diff_hunks(diff);
        assert_eq!(files.len(), 1, "new files have no old side to blame");
        assert_eq!(files[0].0, "src/a.cpp");
        assert_eq!(files[0].1.len(), 2);
        assert_eq!(files[0].1[0].old_start, 10);
        assert_eq!(files[0].1[0].old_count, 2);
        assert_eq!(files[0].1[1].old_start, 20);
        assert_eq!(files[0].1[1].old_count, 0);
    }

    #[test]
    fn range_merging() {
        assert_eq!(
            merge_ranges(vec![(5, 6), (1, 2), (3, 4), (10, 12)]),
            vec![(1, 6), (10, 12)]
        );
        assert_eq!(merge_ranges(vec![(2, 2), (2, 3)]), vec![(2, 3)]);
    }

    #[test]
    fn window_serde_round_trip() {
        let intro = BTreeSet::from([commit("a000001", "2016-12-01T10:00:00Z")]);
        let fix = BTreeSet::from([commit("b000001", "2018-09-18T12:00:00Z")]);
        let w = compute_window(&intro, &fix).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        let back: VulnWindow = serde_json::from_str(&json).unwrap();
        assert_eq!(w, back);
    }
}
