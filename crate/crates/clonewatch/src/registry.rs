//! The monitored-project corpus: manifest ingestion, fork-date
//! resolution, and the vulnerability-window filter that produces the
//! first cut of candidate projects.

use std::collections::BTreeSet;
use std::path::Path;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::history::{HistoryError, RepositoryHandle, VulnWindow};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("manifest not found: {0}")]
    FileNotFound(String),
    #[error("malformed manifest at line {line}: {detail}")]
    MalformedManifest { line: u64, detail: String },
    #[error("duplicate project name {0:?} in manifest")]
    DuplicateProject(String),
    #[error("project {0:?} has no resolved fork date")]
    UnresolvedForkDate(String),
    #[error("repository for {name} unreadable: {detail}")]
    RepoUnreadable { name: String, detail: String },
    #[error("repository for {0} has an empty history")]
    EmptyHistory(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// How a project's fork date was determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ForkDateSource {
    /// Declared in the manifest; always wins.
    Manifest,
    /// Timestamp of the earliest commit on the repository's default
    /// branch. Conservative: an earlier date can only widen the
    /// candidate set.
    FirstCommit,
    /// Reserved for callers that compute a true fork point externally.
    ResolvedForkPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkDate {
    pub at: DateTime<Utc>,
    pub source: ForkDateSource,
}

/// One monitored project.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectRecord {
    pub name: String,
    /// Filesystem path or clone URL.
    pub repo_location: String,
    pub declared_language: String,
    pub fork_date: Option<ForkDate>,
}

/// The corpus, canonically ordered by name with unique names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProjectSet {
    records: Vec<ProjectRecord>,
}

impl ProjectSet {
    /// Builds a set, sorting by name and rejecting duplicates.
    pub fn new(mut records: Vec<ProjectRecord>) -> Result<Self, RegistryError> {
        records.sort_by(|a, b| a.name.cmp(&b.name));
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for r in &records {
            if !seen.insert(r.name.as_str()) {
                return Err(RegistryError::DuplicateProject(r.name.clone()));
            }
        }
        Ok(Self { records })
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ProjectRecord> {
        self.records.iter()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ProjectRecord> {
        self.records
            .binary_search_by(|r| r.name.as_str().cmp(name))
            .ok()
            .map(|i| &self.records[i])
    }

    /// Subset whose declared language equals `tag`, case-insensitively.
    pub fn filter_by_language(&self, tag: &str) -> ProjectSet {
        assert!(!tag.is_empty(), "language tag must be non-empty");
        let tag = tag.to_lowercase();
        ProjectSet {
            records: self
                .records
                .iter()
                .filter(|r| r.declared_language.to_lowercase() == tag)
                .cloned()
                .collect(),
        }
    }

    /// Keeps exactly the projects forked inside the window, boundaries
    /// inclusive. Every project must have a resolved fork date.
    pub fn filter_candidates(&self, window: &VulnWindow) -> Result<ProjectSet, RegistryError> {
        for r in &self.records {
            if r.fork_date.is_none() {
                return Err(RegistryError::UnresolvedForkDate(r.name.clone()));
            }
        }
        Ok(ProjectSet {
            records: self
                .records
                .iter()
                .filter(|r| window.contains(r.fork_date.expect("checked above").at))
                .cloned()
                .collect(),
        })
    }

    /// Serializes back to the manifest format. Loading the result
    /// reproduces all retained fields.
    pub fn to_manifest_string(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["name", "repo", "language", "fork_date"])
            .expect("writing to memory");
        for r in &self.records {
            let date = r
                .fork_date
                .map(|f| f.at.to_rfc3339_opts(SecondsFormat::Secs, true))
                .unwrap_or_default();
            wtr.write_record([&r.name, &r.repo_location, &r.declared_language, &date])
                .expect("writing to memory");
        }
        String::from_utf8(wtr.into_inner().expect("writing to memory"))
            .expect("csv output is UTF-8")
    }
}

impl<'a> IntoIterator for &'a ProjectSet {
    type Item = &'a ProjectRecord;
    type IntoIter = std::slice::Iter<'a, ProjectRecord>;
    fn into_iter(self) -> Self::IntoIter {
        self.records.iter()
    }
}

/// A loaded manifest: the project set plus notes about skipped rows.
#[derive(Debug, Clone)]
pub struct ManifestLoad {
    pub projects: ProjectSet,
    /// One entry per rejected row (e.g. missing repository location).
    pub skipped: Vec<String>,
}

/// Reads the manifest: UTF-8, comma-separated, header
/// `name,repo,language,fork_date`, `#` comment lines, RFC 3339 fork
/// dates (empty means unknown). Rows without a repository location are
/// skipped and reported, mirroring how broken listing entries are
/// discarded upstream.
pub fn load_manifest(path: &Path) -> Result<ManifestLoad, RegistryError> {
    load_manifest_at(path, Utc::now())
}

/// [`load_manifest`] with an explicit "now" for the future-date check.
pub fn load_manifest_at(path: &Path, now: DateTime<Utc>) -> Result<ManifestLoad, RegistryError> {
    let content = std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            RegistryError::FileNotFound(path.display().to_string())
        } else {
            RegistryError::Io(e)
        }
    })?;
    parse_manifest(&content, now)
}

fn parse_manifest(content: &str, now: DateTime<Utc>) -> Result<ManifestLoad, RegistryError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(content.as_bytes());

    let headers = reader
        .headers()
        .map_err(|e| RegistryError::MalformedManifest {
            line: 1,
            detail: e.to_string(),
        })?
        .clone();
    let expected = ["name", "repo", "language", "fork_date"];
    if headers.iter().collect::<Vec<_>>() != expected {
        return Err(RegistryError::MalformedManifest {
            line: 1,
            detail: format!("header must be {}", expected.join(",")),
        });
    }

    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| RegistryError::MalformedManifest {
            line: e.position().map(|p| p.line()).unwrap_or(0),
            detail: e.to_string(),
        })?;
        let line = row.position().map(|p| p.line()).unwrap_or(0);
        if row.len() != 4 {
            return Err(RegistryError::MalformedManifest {
                line,
                detail: format!("expected 4 fields, found {}", row.len()),
            });
        }
        let name = row[0].to_string();
        if name.is_empty() {
            return Err(RegistryError::MalformedManifest {
                line,
                detail: "empty project name".to_string(),
            });
        }
        let repo_location = row[1].to_string();
        if repo_location.is_empty() {
            skipped.push(format!(
                "line {line}: project {name:?} has no repository location; skipped"
            ));
            continue;
        }
        let declared_language = row[2].to_string();
        let fork_date = if row[3].is_empty() {
            None
        } else {
            let at = DateTime::parse_from_rfc3339(&row[3])
                .map_err(|e| RegistryError::MalformedManifest {
                    line,
                    detail: format!("bad fork_date {:?}: {e}", &row[3]),
                })?
                .with_timezone(&Utc);
            if at > now {
                return Err(RegistryError::MalformedManifest {
                    line,
                    detail: format!("fork_date {at} is in the future"),
                });
            }
            Some(ForkDate {
                at,
                source: ForkDateSource::Manifest,
            })
        };
        records.push(ProjectRecord {
            name,
            repo_location,
            declared_language,
            fork_date,
        });
    }

    Ok(ManifestLoad {
        projects: ProjectSet::new(records)?,
        skipped,
    })
}

/// Fills in a missing fork date from the repository's earliest commit.
/// A manifest-declared date is left untouched.
pub fn resolve_fork_date(
    project: &ProjectRecord,
    history: &RepositoryHandle,
) -> Result<ProjectRecord, RegistryError> {
    if project.fork_date.is_some() {
        return Ok(project.clone());
    }
    let at = history.first_commit_timestamp().map_err(|e| match e {
        HistoryError::EmptyHistory(_) => RegistryError::EmptyHistory(project.name.clone()),
        other => RegistryError::RepoUnreadable {
            name: project.name.clone(),
            detail: other.to_string(),
        },
    })?;
    Ok(ProjectRecord {
        fork_date: Some(ForkDate {
            at,
            source: ForkDateSource::FirstCommit,
        }),
        ..project.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::history::{compute_window, CommitRef};
    use chrono::TimeZone;
    use std::collections::BTreeSet;

    fn record(name: &str, language: &str, forked: Option<&str>) -> ProjectRecord {
        ProjectRecord {
            name: name.to_string(),
            repo_location: format!("/repos/{name}"),
            declared_language: language.to_string(),
            fork_date: forked.map(|d| ForkDate {
                at: DateTime::parse_from_rfc3339(d).unwrap().with_timezone(&Utc),
                source: ForkDateSource::Manifest,
            }),
        }
    }

    fn window(intro: &str, fix: &str) -> VulnWindow {
        let commit = |hash: &str, at: &str| CommitRef {
            hash: hash.to_string(),
            author_date: DateTime::parse_from_rfc3339(at)
                .unwrap()
                .with_timezone(&Utc),
            committer_date: DateTime::parse_from_rfc3339(at)
                .unwrap()
                .with_timezone(&Utc),
            touched_files: vec![],
            parent_hashes: vec![],
        };
        compute_window(
            &BTreeSet::from([commit("aaaaaaa", intro)]),
            &BTreeSet::from([commit("fffffff", fix)]),
        )
        .unwrap()
    }

    const NOW: &str = "2020-01-01T00:00:00Z";

    fn parse(content: &str) -> Result<ManifestLoad, RegistryError> {
        parse_manifest(
            content,
            DateTime::parse_from_rfc3339(NOW)
                .unwrap()
                .with_timezone(&Utc),
        )
    }

    #[test]
    fn manifest_with_valid_rows() {
        let loaded = parse(
            "name,repo,language,fork_date\n\
             # a comment line\n\
             litecoin,/repos/litecoin,C++,2016-12-01T00:00:00Z\n\
             dogecoin,/repos/dogecoin,C++,\n\
             steem,/repos/steem,C++,2016-03-01T00:00:00Z\n",
        )
        .unwrap();
        assert_eq!(loaded.projects.len(), 3);
        assert!(loaded.skipped.is_empty());
        let lite = loaded.projects.get("litecoin").unwrap();
        assert_eq!(lite.fork_date.unwrap().source, ForkDateSource::Manifest);
        assert!(loaded.projects.get("dogecoin").unwrap().fork_date.is_none());
    }

    #[test]
    fn manifest_skips_rows_without_repo() {
        let loaded = parse(
            "name,repo,language,fork_date\n\
             good,/repos/good,C++,\n\
             broken,,C++,\n",
        )
        .unwrap();
        assert_eq!(loaded.projects.len(), 1);
        assert_eq!(loaded.skipped.len(), 1);
        assert!(loaded.skipped[0].contains("broken"));
    }

    #[test]
    fn manifest_rejects_duplicate_names() {
        let err = parse(
            "name,repo,language,fork_date\n\
             litecoin,/a,C++,\n\
             litecoin,/b,C++,\n",
        )
        .unwrap_err();
        match err {
            RegistryError::DuplicateProject(name) => assert_eq!(name, "litecoin"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn manifest_reports_bad_date_with_line() {
        let err = parse(
            "name,repo,language,fork_date\n\
             ok,/a,C++,\n\
             bad,/b,C++,not-a-date\n",
        )
        .unwrap_err();
        match err {
            RegistryError::MalformedManifest { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn manifest_rejects_future_fork_date() {
        let err = parse(
            "name,repo,language,fork_date\n\
             tomorrow,/a,C++,2099-01-01T00:00:00Z\n",
        )
        .unwrap_err();
        assert!(matches!(err, RegistryError::MalformedManifest { .. }));
    }

    #[test]
    fn manifest_rejects_wrong_header() {
        let err = parse("project,url,lang,date\nx,/a,C++,\n").unwrap_err();
        assert!(matches!(
            err,
            RegistryError::MalformedManifest { line: 1, .. }
        ));
    }

    #[test]
    fn load_manifest_missing_file() {
        let err = load_manifest(Path::new("/nonexistent/manifest.csv")).unwrap_err();
        assert!(matches!(err, RegistryError::FileNotFound(_)));
    }

    #[test]
    fn language_filter_counts_full_corpus() {
        // Corpus shaped like the real survey: 1094 C++, 334 Javascript,
        // 65 C, 65 Go, 36 Python, 30 Java, 455 others.
        let mut records = Vec::new();
        let mut add = |lang: &str, n: usize| {
            let start = records.len();
            for i in 0..n {
                records.push(record(&format!("coin{:05}", start + i), lang, None));
            }
        };
        add("C++", 1094);
        add("Javascript", 334);
        add("C", 65);
        add("Go", 65);
        add("Python", 36);
        add("Java", 30);
        add("Solidity", 455);
        let set = ProjectSet::new(records).unwrap();
        assert_eq!(set.len(), 2079);
        assert_eq!(set.filter_by_language("C++").len(), 1094);
        assert_eq!(set.filter_by_language("c++").len(), 1094);
        assert_eq!(set.filter_by_language("Haskell").len(), 0);
    }

    #[test]
    fn candidate_filter_keeps_in_window_projects() {
        let set = ProjectSet::new(vec![
            record("early", "C++", Some("2016-11-01T00:00:00Z")),
            record("inside", "C++", Some("2017-06-01T00:00:00Z")),
            record("late", "C++", Some("2019-01-01T00:00:00Z")),
        ])
        .unwrap();
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let kept = set.filter_candidates(&w).unwrap();
        assert_eq!(kept.len(), 1);
        assert!(kept.get("inside").is_some());
    }

    #[test]
    fn candidate_filter_boundaries_inclusive() {
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let set = ProjectSet::new(vec![
            record("at-start", "C++", Some("2016-12-01T00:00:00Z")),
            record("at-end", "C++", Some("2018-09-18T00:00:00Z")),
        ])
        .unwrap();
        assert_eq!(set.filter_candidates(&w).unwrap().len(), 2);
    }

    #[test]
    fn candidate_filter_empty_set() {
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let empty = ProjectSet::default();
        assert!(empty.filter_candidates(&w).unwrap().is_empty());
    }

    #[test]
    fn candidate_filter_requires_resolved_dates() {
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let set = ProjectSet::new(vec![record("nodate", "C++", None)]).unwrap();
        match set.filter_candidates(&w).unwrap_err() {
            RegistryError::UnresolvedForkDate(name) => assert_eq!(name, "nodate"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn candidate_filter_idempotent_and_subset() {
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let set = ProjectSet::new(vec![
            record("a", "C++", Some("2016-11-30T23:59:59Z")),
            record("b", "C++", Some("2017-01-01T00:00:00Z")),
            record("c", "C++", Some("2018-09-18T00:00:01Z")),
        ])
        .unwrap();
        let once = set.filter_candidates(&w).unwrap();
        let twice = once.filter_candidates(&w).unwrap();
        assert_eq!(once, twice);
        for p in &once {
            assert!(set.get(&p.name).is_some());
            let at = p.fork_date.unwrap().at;
            assert!(w.intro_min <= at && at <= w.fix_max);
        }
    }

    #[test]
    fn language_and_window_filters_commute() {
        let w = window("2016-12-01T00:00:00Z", "2018-09-18T00:00:00Z");
        let set = ProjectSet::new(vec![
            record("a", "C++", Some("2017-01-01T00:00:00Z")),
            record("b", "Go", Some("2017-02-01T00:00:00Z")),
            record("c", "C++", Some("2015-01-01T00:00:00Z")),
            record("d", "go", Some("2019-01-01T00:00:00Z")),
        ])
        .unwrap();
        let one = set.filter_by_language("C++").filter_candidates(&w).unwrap();
        let other = set.filter_candidates(&w).unwrap().filter_by_language("C++");
        assert_eq!(one, other);
    }

    #[test]
    fn manifest_round_trips_retained_fields() {
        let loaded = parse(
            "name,repo,language,fork_date\n\
             alpha,/repos/alpha,C++,2017-04-01T00:00:00Z\n\
             beta,/repos/beta,Go,\n",
        )
        .unwrap();
        let serialized = loaded.projects.to_manifest_string();
        let reloaded = parse(&serialized).unwrap();
        assert_eq!(loaded.projects, reloaded.projects);
    }

    #[test]
    fn ordering_is_canonical_by_name() {
        let set = ProjectSet::new(vec![
            record("zeta", "C++", None),
            record("alpha", "C++", None),
            record("mid", "C++", None),
        ])
        .unwrap();
        let names: Vec<&str> = set.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, vec!["alpha", "mid", "zeta"]);
    }

    #[test]
    fn resolve_fork_date_keeps_manifest_dates() {
        let rec = record("keep", "C++", Some("2017-04-01T00:00:00Z"));
        // The repository handle is irrelevant for the no-op branch; use
        // a handle pointing anywhere.
        let handle = RepositoryHandle {
            root_path: "/nonexistent".into(),
            default_branch: "main".into(),
        };
        let resolved = resolve_fork_date(&rec, &handle).unwrap();
        assert_eq!(
            resolved.fork_date.unwrap().at,
            Utc.with_ymd_and_hms(2017, 4, 1, 0, 0, 0).unwrap()
        );
        assert_eq!(resolved.fork_date.unwrap().source, ForkDateSource::Manifest);
    }
}
