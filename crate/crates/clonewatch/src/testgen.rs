//! Packaging manually annotated vulnerable and fix code fragments into a
//! detection test the clone detector consumes.
//!
//! Annotation stays a human step, one per vulnerability; this module
//! only normalizes the fragments, pins each snippet's threshold to its
//! exact normalized length, and round-trips the result to disk.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clonedetect::{normalize_lines, NormalizationProfile};
use crate::cve::CveDescriptor;

#[derive(Debug, Error)]
pub enum TestgenError {
    #[error("{label} fragment {index} is empty after normalization (comments/blank lines only)")]
    EmptyAfterNormalization { label: SnippetLabel, index: usize },
    #[error("a detection test needs at least one {0} fragment")]
    MissingSnippets(SnippetLabel),
    #[error("detection test violates its schema: {0}")]
    SchemaViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SnippetLabel {
    Vulnerable,
    Fix,
}

impl std::fmt::Display for SnippetLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SnippetLabel::Vulnerable => "vulnerable",
            SnippetLabel::Fix => "fix",
        })
    }
}

/// Where an annotated fragment came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnippetOrigin {
    pub commit: String,
    pub file: String,
    pub start_line: usize,
}

/// An annotated fragment before packaging.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fragment {
    /// Raw lines, stored verbatim.
    pub source_lines: Vec<String>,
    pub origin: SnippetOrigin,
}

/// A packaged snippet: raw lines plus their normalized form and the
/// exact-length threshold. `normalized` is always computed from
/// `source_lines`, never edited by hand; loading re-derives and checks
/// it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSnippet {
    pub label: SnippetLabel,
    pub source_lines: Vec<String>,
    pub origin: SnippetOrigin,
    pub normalized: Vec<String>,
    /// Equals `normalized.len()`: a snippet matches all-or-nothing at
    /// its full length.
    pub threshold: usize,
}

/// The machine-checkable detection test for one vulnerability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetectionTest {
    pub cve_id: String,
    pub affected_language: String,
    /// The profile the snippets were normalized with; scans must use
    /// the same one or line-for-line matching breaks.
    pub profile: NormalizationProfile,
    pub vulnerable_snippets: Vec<CodeSnippet>,
    pub fix_snippets: Vec<CodeSnippet>,
}

impl DetectionTest {
    /// Per-snippet thresholds, vulnerable snippets first.
    pub fn thresholds(&self) -> Vec<usize> {
        self.vulnerable_snippets
            .iter()
            .chain(&self.fix_snippets)
            .map(|s| s.threshold)
            .collect()
    }

    /// Checks every structural invariant; run after deserializing.
    pub fn validate(&self) -> Result<(), TestgenError> {
        if self.vulnerable_snippets.is_empty() {
            return Err(TestgenError::MissingSnippets(SnippetLabel::Vulnerable));
        }
        if self.fix_snippets.is_empty() {
            return Err(TestgenError::MissingSnippets(SnippetLabel::Fix));
        }
        for (expect, list) in [
            (SnippetLabel::Vulnerable, &self.vulnerable_snippets),
            (SnippetLabel::Fix, &self.fix_snippets),
        ] {
            for (index, snippet) in list.iter().enumerate() {
                if snippet.label != expect {
                    return Err(TestgenError::SchemaViolation(format!(
                        "{expect} snippet {index} is labeled {}",
                        snippet.label
                    )));
                }
                let recomputed =
                    normalize_lines("snippet", &snippet.source_lines, &self.profile).lines;
                if recomputed.is_empty() {
                    return Err(TestgenError::SchemaViolation(format!(
                        "{expect} snippet {index} normalizes to zero lines"
                    )));
                }
                if snippet.normalized != recomputed {
                    return Err(TestgenError::SchemaViolation(format!(
                        "{expect} snippet {index}: stored normalized lines do not match \
                         normalize_source(source_lines)"
                    )));
                }
                if snippet.threshold != snippet.normalized.len() {
                    return Err(TestgenError::SchemaViolation(format!(
                        "{expect} snippet {index}: threshold {} != normalized length {}",
                        snippet.threshold,
                        snippet.normalized.len()
                    )));
                }
            }
        }
        Ok(())
    }
}

fn package(
    label: SnippetLabel,
    fragments: Vec<Fragment>,
    profile: &NormalizationProfile,
) -> Result<Vec<CodeSnippet>, TestgenError> {
    let mut snippets = Vec::with_capacity(fragments.len());
    for (index, fragment) in fragments.into_iter().enumerate() {
        let normalized = normalize_lines("fragment", &fragment.source_lines, profile).lines;
        if normalized.is_empty() {
            return Err(TestgenError::EmptyAfterNormalization { label, index });
        }
        let threshold = normalized.len();
        snippets.push(CodeSnippet {
            label,
            source_lines: fragment.source_lines,
            origin: fragment.origin,
            normalized,
            threshold,
        });
    }
    Ok(snippets)
}

/// Builds a detection test from annotated fragments. Each snippet's
/// threshold is pinned to its exact normalized length.
pub fn build_detection_test(
    cve: &CveDescriptor,
    vuln_fragments: Vec<Fragment>,
    fix_fragments: Vec<Fragment>,
    profile: &NormalizationProfile,
) -> Result<DetectionTest, TestgenError> {
    if vuln_fragments.is_empty() {
        return Err(TestgenError::MissingSnippets(SnippetLabel::Vulnerable));
    }
    if fix_fragments.is_empty() {
        return Err(TestgenError::MissingSnippets(SnippetLabel::Fix));
    }
    Ok(DetectionTest {
        cve_id: cve.id.clone(),
        affected_language: cve.affected_language.clone(),
        profile: profile.clone(),
        vulnerable_snippets: package(SnippetLabel::Vulnerable, vuln_fragments, profile)?,
        fix_snippets: package(SnippetLabel::Fix, fix_fragments, profile)?,
    })
}

/// Writes the test as JSON. Raw lines are preserved byte-for-byte
/// within UTF-8.
pub fn save_test(test: &DetectionTest, path: &Path) -> Result<(), TestgenError> {
    let json = serde_json::to_string_pretty(test)
        .map_err(|e| TestgenError::SchemaViolation(e.to_string()))?;
    std::fs::write(path, json + "\n")?;
    Ok(())
}

/// Reads a test back and checks every invariant.
pub fn load_test(path: &Path) -> Result<DetectionTest, TestgenError> {
    let content = std::fs::read_to_string(path)?;
    let test: DetectionTest =
        serde_json::from_str(&content).map_err(|e| TestgenError::SchemaViolation(e.to_string()))?;
    test.validate()?;
    Ok(test)
}

/// The annotation file consumed by `clonewatch build-test`: the raw
/// fragments for both sides, without derived fields.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnnotationFile {
    pub vulnerable: Vec<Fragment>,
    pub fix: Vec<Fragment>,
}

impl AnnotationFile {
    pub fn load(path: &Path) -> Result<Self, TestgenError> {
        let content = std::fs::read_to_string(path)?;
        serde_json::from_str(&content).map_err(|e| TestgenError::SchemaViolation(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cve::{parse_cve, StopwordSet};

    fn cve() -> CveDescriptor {
        let doc = serde_json::json!({
            "id": "CVE-2018-17144",
            "published": "2018-09-19T22:29:00Z",
            "description": "remote denial of service",
            "references": [],
            "affected_language": "C++",
            "affected_projects": ["bitcoin"]
        })
        .to_string();
        parse_cve(&doc, &StopwordSet::default()).unwrap()
    }

    fn origin() -> SnippetOrigin {
        SnippetOrigin {
            commit: "eecffe50efc2bd8e854e4b52d1adde4f2dc7cc4a".into(),
            file: "src/validation.cpp".into(),
            start_line: 100,
        }
    }

    fn fragment(lines: &[&str]) -> Fragment {
        Fragment {
            source_lines: lines.iter().map(|s| s.to_string()).collect(),
            origin: origin(),
        }
    }

    #[test]
    fn thresholds_are_exact_normalized_lengths() {
        // Six code lines plus two comment lines normalize to six.
        let vuln = fragment(&[
            "// check inputs",
            "for (const auto& txin : tx.vin) {",
            "    if (!inputs.HaveCoin(txin.prevout)) {",
            "        return state.Invalid(false);",
            "    }",
            "    /* inline note */ seen.insert(txin.prevout);",
            "}",
            "// done",
        ]);
        let fix = fragment(&[
            "if (!seen.insert(txin.prevout).second) {",
            "    return false;",
            "}",
        ]);
        let test = build_detection_test(
            &cve(),
            vec![vuln],
            vec![fix],
            &NormalizationProfile::default(),
        )
        .unwrap();
        assert_eq!(test.vulnerable_snippets[0].normalized.len(), 6);
        assert_eq!(test.vulnerable_snippets[0].threshold, 6);
        assert_eq!(test.fix_snippets[0].threshold, 3);
        test.validate().unwrap();
    }

    #[test]
    fn all_comment_fragment_is_rejected() {
        let vuln = fragment(&["/* nothing", "but comments */"]);
        let fix = fragment(&["real();"]);
        let err = build_detection_test(
            &cve(),
            vec![vuln],
            vec![fix],
            &NormalizationProfile::default(),
        )
        .unwrap_err();
        match err {
            TestgenError::EmptyAfterNormalization { label, index } => {
                assert_eq!(label, SnippetLabel::Vulnerable);
                assert_eq!(index, 0);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn per_snippet_thresholds() {
        let v1 = fragment(&["a;", "b;", "c;", "d;"]);
        let v2 = fragment(&["a;", "b;", "c;", "d;", "e;", "f;", "g;", "h;", "i;"]);
        let fix = fragment(&["patched();"]);
        let test = build_detection_test(
            &cve(),
            vec![v1, v2],
            vec![fix],
            &NormalizationProfile::default(),
        )
        .unwrap();
        assert_eq!(test.thresholds(), vec![4, 9, 1]);
    }

    #[test]
    fn missing_fragments_rejected() {
        let err = build_detection_test(
            &cve(),
            vec![],
            vec![fragment(&["x;"])],
            &NormalizationProfile::default(),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            TestgenError::MissingSnippets(SnippetLabel::Vulnerable)
        ));
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("test.json");
        let test = build_detection_test(
            &cve(),
            vec![fragment(&["int x = 1; // note", "use(x);"])],
            vec![fragment(&["int x = checked(1);", "use(x);"])],
            &NormalizationProfile::default(),
        )
        .unwrap();
        save_test(&test, &path).unwrap();
        let loaded = load_test(&path).unwrap();
        assert_eq!(test, loaded);
    }

    #[test]
    fn load_rejects_tampered_threshold() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("test.json");
        let test = build_detection_test(
            &cve(),
            vec![fragment(&["a;", "b;"])],
            vec![fragment(&["c;"])],
            &NormalizationProfile::default(),
        )
        .unwrap();
        save_test(&test, &path).unwrap();
        let tampered = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"threshold\": 2", "\"threshold\": 5");
        std::fs::write(&path, tampered).unwrap();
        assert!(matches!(
            load_test(&path),
            Err(TestgenError::SchemaViolation(_))
        ));
    }

    #[test]
    fn load_rejects_hand_edited_normalized_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("test.json");
        // Indented raw lines, so the normalized strings are distinct
        // text and only they get edited below.
        let test = build_detection_test(
            &cve(),
            vec![fragment(&["  alpha();", "  beta();"])],
            vec![fragment(&["  gamma();"])],
            &NormalizationProfile::default(),
        )
        .unwrap();
        save_test(&test, &path).unwrap();
        let tampered = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"alpha();\",", "\"edited();\",");
        std::fs::write(&path, tampered).unwrap();
        assert!(matches!(
            load_test(&path),
            Err(TestgenError::SchemaViolation(_))
        ));
    }

    #[test]
    fn load_missing_file_is_io_error() {
        assert!(matches!(
            load_test(Path::new("/nonexistent/test.json")),
            Err(TestgenError::Io(_))
        ));
    }
}
