//! Vulnerability-descriptor parsing: the structured record that drives a
//! scan, keyword extraction from the description, and the issue-search
//! pattern built from those keywords.

use std::collections::{BTreeSet, HashMap};
use std::path::Path;
use std::sync::OnceLock;

use chrono::{DateTime, Utc};
use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::history::CommitId;

/// Errors from descriptor parsing.
#[derive(Debug, Error)]
pub enum CveError {
    #[error("descriptor id {0:?} does not match CVE-YYYY-NNNN")]
    BadCveId(String),
    #[error("descriptor field {field:?}: {detail}")]
    SchemaViolation { field: String, detail: String },
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn cve_id_pattern() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^CVE-\d{4}-\d{4,}$").expect("static pattern"))
}

fn cve_id_scanner() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)CVE-\d{4}-\d{4,}").expect("static pattern"))
}

/// Tokens dropped from keyword extraction. One token per line in the
/// on-disk form; `#` lines are comments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordSet {
    words: BTreeSet<String>,
}

impl StopwordSet {
    pub fn load(path: &Path) -> Result<Self, CveError> {
        Ok(Self::parse(&std::fs::read_to_string(path)?))
    }

    pub fn parse(content: &str) -> Self {
        let words = content
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.to_lowercase())
            .collect();
        Self { words }
    }

    /// The list shipped with the tool, used when no file is configured.
    pub fn builtin() -> Self {
        Self::parse(include_str!("../data/stopwords.txt"))
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self {
            words: words.into_iter().map(|w| w.into().to_lowercase()).collect(),
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Optional release tags carried on the descriptor (never scraped).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReleaseTags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub introduced: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed: Option<String>,
}

/// A parsed vulnerability descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CveDescriptor {
    pub id: String,
    pub published: DateTime<Utc>,
    pub description: String,
    /// Lowercase, stopword-free, deduplicated; ordered by descending
    /// term frequency, then first position in the description.
    pub keywords: Vec<String>,
    pub reference_links: Vec<String>,
    pub affected_language: String,
    pub affected_projects: Vec<String>,
    /// False when the flaw lives in an underlying protocol rather than
    /// the project's own code.
    pub code_specific: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub releases: Option<ReleaseTags>,
}

#[derive(Debug, Deserialize)]
struct RawDescriptor {
    id: Option<String>,
    published: Option<String>,
    description: Option<String>,
    references: Option<Vec<String>>,
    affected_language: Option<String>,
    affected_projects: Option<Vec<String>>,
    #[serde(default)]
    protocol_level: Option<bool>,
    #[serde(default)]
    releases: Option<ReleaseTags>,
}

fn required<T>(value: Option<T>, field: &str) -> Result<T, CveError> {
    value.ok_or_else(|| CveError::SchemaViolation {
        field: field.to_string(),
        detail: "missing".to_string(),
    })
}

/// Parses a descriptor document (JSON, see the manual for the schema)
/// into a [`CveDescriptor`], extracting keywords from the description.
pub fn parse_cve(document: &str, stopwords: &StopwordSet) -> Result<CveDescriptor, CveError> {
    let raw: RawDescriptor =
        serde_json::from_str(document).map_err(|e| CveError::MalformedDescriptor(e.to_string()))?;

    let id = required(raw.id, "id")?;
    if !cve_id_pattern().is_match(&id) {
        return Err(CveError::BadCveId(id));
    }
    let published_raw = required(raw.published, "published")?;
    let published = DateTime::parse_from_rfc3339(&published_raw)
        .map_err(|e| CveError::SchemaViolation {
            field: "published".to_string(),
            detail: e.to_string(),
        })?
        .with_timezone(&Utc);
    let description = required(raw.description, "description")?;
    let reference_links = required(raw.references, "references")?;
    let affected_language = required(raw.affected_language, "affected_language")?;
    if affected_language.trim().is_empty() {
        return Err(CveError::SchemaViolation {
            field: "affected_language".to_string(),
            detail: "empty".to_string(),
        });
    }
    let affected_projects = required(raw.affected_projects, "affected_projects")?;

    let keywords = extract_keywords(&description, stopwords);

    Ok(CveDescriptor {
        id,
        published,
        description,
        keywords,
        reference_links,
        affected_language,
        affected_projects,
        code_specific: !raw.protocol_level.unwrap_or(false),
        releases: raw.releases,
    })
}

/// Reads and parses a descriptor file.
pub fn parse_cve_file(path: &Path, stopwords: &StopwordSet) -> Result<CveDescriptor, CveError> {
    parse_cve(&std::fs::read_to_string(path)?, stopwords)
}

/// Extracts ordered keywords from free text.
///
/// Tokens are maximal alphanumeric runs, lowercased, except that CVE
/// identifiers are kept atomic (`cve-2018-17144`) and each occurrence
/// also contributes the token `cve`. Stopwords are removed, duplicates
/// collapse to their first occurrence, and the result is ordered by
/// descending term frequency, then first position in the text.
pub fn extract_keywords(description: &str, stopwords: &StopwordSet) -> Vec<String> {
    // (byte position, token), in reading order.
    let mut occurrences: Vec<(usize, String)> = Vec::new();

    let id_spans: Vec<(usize, usize)> = cve_id_scanner()
        .find_iter(description)
        .map(|m| {
            occurrences.push((m.start(), "cve".to_string()));
            occurrences.push((m.start(), m.as_str().to_lowercase()));
            (m.start(), m.end())
        })
        .collect();

    let covered = |pos: usize| id_spans.iter().any(|(s, e)| pos >= *s && pos < *e);
    let mut run_start: Option<usize> = None;
    for (pos, ch) in description.char_indices() {
        let in_run = ch.is_alphanumeric() && !covered(pos);
        match (run_start, in_run) {
            (None, true) => run_start = Some(pos),
            (Some(start), false) => {
                occurrences.push((start, description[start..pos].to_lowercase()));
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(start) = run_start {
        occurrences.push((start, description[start..].to_lowercase()));
    }
    occurrences.sort_by_key(|(pos, _)| *pos);

    let mut freq: HashMap<&str, usize> = HashMap::new();
    let mut ordered: Vec<(usize, &str)> = Vec::new(); // (first position, token)
    for (pos, token) in &occurrences {
        if stopwords.contains(token) {
            continue;
        }
        let count = freq.entry(token.as_str()).or_insert(0);
        if *count == 0 {
            ordered.push((*pos, token.as_str()));
        }
        *count += 1;
    }
    ordered.sort_by(|(pos_a, tok_a), (pos_b, tok_b)| {
        freq[tok_b].cmp(&freq[tok_a]).then(pos_a.cmp(pos_b))
    });
    ordered.into_iter().map(|(_, t)| t.to_string()).collect()
}

/// Builds the case-insensitive alternation pattern used to locate
/// fix-related issues and commits: the literal CVE id, the token `CVE`,
/// and the top `top_k` keywords.
pub fn build_issue_query(cve: &CveDescriptor, top_k: usize) -> String {
    let mut alternatives = vec![regex::escape(&cve.id)];
    alternatives.push("CVE".to_string());
    for keyword in cve.keywords.iter().take(top_k) {
        if keyword.eq_ignore_ascii_case("cve") || keyword.eq_ignore_ascii_case(&cve.id) {
            continue;
        }
        alternatives.push(regex::escape(keyword));
    }
    format!(r"(?i)\b(?:{})\b", alternatives.join("|"))
}

/// One issue-tracker entry from a local export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IssueRecord {
    pub issue_id: String,
    /// Lowercased state labels, e.g. "fixed", "closed", "bug".
    pub state_labels: BTreeSet<String>,
    pub linked_commits: Vec<CommitId>,
    pub title_and_body: String,
}

impl IssueRecord {
    /// Whether the issue is in the fixed/resolved/closed/bug population
    /// that the fix-commit search runs over.
    pub fn qualifies_for_fix_search(&self) -> bool {
        ["fixed", "resolved", "closed", "bug"]
            .iter()
            .any(|l| self.state_labels.contains(*l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn descriptor_json() -> String {
        serde_json::json!({
            "id": "CVE-2018-17144",
            "published": "2018-09-19T22:29:00Z",
            "description": "Remote denial of service in duplicate input handling. See CVE-2018-17144.",
            "references": ["https://example.invalid/advisory"],
            "affected_language": "C++",
            "affected_projects": ["bitcoin"],
            "protocol_level": false
        })
        .to_string()
    }

    #[test]
    fn parse_cve_populates_fields() {
        let stop = StopwordSet::from_words(["in", "see"]);
        let cve = parse_cve(&descriptor_json(), &stop).unwrap();
        assert_eq!(cve.id, "CVE-2018-17144");
        assert_eq!(cve.affected_language, "C++");
        assert!(cve.code_specific);
        assert_eq!(cve.published.to_rfc3339(), "2018-09-19T22:29:00+00:00");
        assert!(cve.keywords.contains(&"cve-2018-17144".to_string()));
    }

    #[test]
    fn parse_cve_rejects_bad_id() {
        let doc = descriptor_json().replace("CVE-2018-17144", "CVE-18-1");
        let err = parse_cve(&doc, &StopwordSet::default()).unwrap_err();
        assert!(matches!(err, CveError::BadCveId(_)), "{err}");
    }

    #[test]
    fn parse_cve_reports_missing_field() {
        let doc = serde_json::json!({
            "id": "CVE-2018-17144",
            "description": "x",
            "references": [],
            "affected_language": "C++",
            "affected_projects": []
        })
        .to_string();
        match parse_cve(&doc, &StopwordSet::default()).unwrap_err() {
            CveError::SchemaViolation { field, .. } => assert_eq!(field, "published"),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn parse_cve_protocol_level_clears_code_specific() {
        let doc = descriptor_json().replace("\"protocol_level\":false", "\"protocol_level\":true");
        let cve = parse_cve(&doc, &StopwordSet::default()).unwrap();
        assert!(!cve.code_specific);
    }

    #[test]
    fn stopword_only_description_yields_no_keywords() {
        let stop = StopwordSet::from_words(["the", "of"]);
        assert!(extract_keywords("The of the OF", &stop).is_empty());
    }

    #[test]
    fn keywords_ordered_by_position_when_frequency_ties() {
        let stop = StopwordSet::from_words(["of", "via"]);
        let got = extract_keywords("Remote denial of service via duplicate input", &stop);
        assert_eq!(
            got,
            vec!["remote", "denial", "service", "duplicate", "input"]
        );
    }

    #[test]
    fn keywords_ordered_by_frequency_first() {
        let got = extract_keywords("bug bug bug fix", &StopwordSet::default());
        assert_eq!(got, vec!["bug", "fix"]);
    }

    #[test]
    fn keyword_extraction_keeps_cve_ids_atomic() {
        let got = extract_keywords("Fix CVE-2018-17144 crash", &StopwordSet::default());
        assert!(got.contains(&"cve-2018-17144".to_string()));
        assert!(got.contains(&"cve".to_string()));
        assert!(!got.contains(&"17144".to_string()));
    }

    #[test]
    fn empty_description_yields_empty_keywords() {
        assert!(extract_keywords("", &StopwordSet::default()).is_empty());
    }

    #[test]
    fn issue_query_matches_expected_tokens() {
        let stop = StopwordSet::from_words(["of", "via", "in", "see"]);
        let cve = parse_cve(&descriptor_json(), &stop).unwrap();
        let pattern = build_issue_query(&cve, 2);
        let re = Regex::new(&pattern).unwrap();
        assert!(re.is_match("Fix CVE-2018-17144"));
        assert!(re.is_match("this mentions cve somewhere"));
        assert!(!re.is_match("wholly unrelated words only"));
    }

    #[test]
    fn issue_query_with_zero_keywords() {
        let stop = StopwordSet::default();
        let cve = parse_cve(&descriptor_json(), &stop).unwrap();
        let pattern = build_issue_query(&cve, 0);
        let re = Regex::new(&pattern).unwrap();
        assert!(re.is_match("CVE-2018-17144"));
        assert!(re.is_match("CVE"));
        assert!(!re.is_match("denial"));
    }

    #[test]
    fn issue_qualification_rule() {
        let mut issue = IssueRecord {
            issue_id: "1".into(),
            state_labels: BTreeSet::from(["open".to_string()]),
            linked_commits: vec![],
            title_and_body: String::new(),
        };
        assert!(!issue.qualifies_for_fix_search());
        issue.state_labels.insert("bug".to_string());
        assert!(issue.qualifies_for_fix_search());
    }

    #[test]
    fn builtin_stopword_list_loads() {
        let stop = StopwordSet::builtin();
        assert!(stop.contains("the"));
        assert!(stop.contains("of"));
        assert!(!stop.contains("overflow"));
    }

    proptest! {
        #[test]
        fn extract_keywords_is_deterministic(text in "[ -~]{0,200}") {
            let stop = StopwordSet::from_words(["the", "a", "of"]);
            prop_assert_eq!(extract_keywords(&text, &stop), extract_keywords(&text, &stop));
        }

        #[test]
        fn every_keyword_appears_in_description(text in "[ -~]{0,200}") {
            let stop = StopwordSet::default();
            let lower = text.to_lowercase();
            for kw in extract_keywords(&text, &stop) {
                prop_assert!(lower.contains(&kw), "{} not in {:?}", kw, lower);
            }
        }

        #[test]
        fn issue_query_always_matches_own_id(nnnn in 1000u32..99999) {
            let id = format!("CVE-2019-{nnnn}");
            let doc = serde_json::json!({
                "id": id,
                "published": "2019-01-01T00:00:00Z",
                "description": "some words",
                "references": [],
                "affected_language": "C++",
                "affected_projects": []
            }).to_string();
            let cve = parse_cve(&doc, &StopwordSet::default()).unwrap();
            let re = Regex::new(&build_issue_query(&cve, 5)).unwrap();
            prop_assert!(re.is_match(&cve.id));
        }
    }
}
