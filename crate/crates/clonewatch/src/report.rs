//! Scan-result emission: a Simian-style XML document, a lossless JSON
//! mirror, and a fixed-width text summary.
//!
//! Reports are deterministic by contract: two runs over identical
//! inputs and settings differ only in `timestamp` and `processingTime`
//! fields. The XML structure is described by `schema/report.xsd`,
//! shipped with the crate; [`validate_xml`] enforces the same rules.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use chrono::{DateTime, SecondsFormat, Utc};
use quick_xml::events::Event;
use quick_xml::Reader;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clonedetect::{CloneMatch, ProjectVerdict, VerdictStatus};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("report XML is not well-formed: {0}")]
    Xml(String),
    #[error("report violates the schema: {0}")]
    SchemaViolation(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The complete result of one scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub cve_id: String,
    pub scan_timestamp: DateTime<Utc>,
    pub tool_version: String,
    /// Projects in the manifest before any filtering.
    pub corpus_size: usize,
    /// Projects that survived filtering and were scanned.
    pub filtered_count: usize,
    /// Ordered by project name.
    pub verdicts: Vec<ProjectVerdict>,
    /// The full effective configuration, echoed for reproducibility.
    pub settings_echo: BTreeMap<String, String>,
}

impl ScanReport {
    pub fn new(
        cve_id: impl Into<String>,
        scan_timestamp: DateTime<Utc>,
        corpus_size: usize,
        filtered_count: usize,
        mut verdicts: Vec<ProjectVerdict>,
        settings_echo: BTreeMap<String, String>,
    ) -> Self {
        assert!(
            filtered_count <= corpus_size,
            "filtered_count cannot exceed corpus_size"
        );
        verdicts.sort_by(|a, b| a.project.cmp(&b.project));
        Self {
            cve_id: cve_id.into(),
            scan_timestamp,
            tool_version: crate::TOOL_VERSION.to_string(),
            corpus_size,
            filtered_count,
            verdicts,
            settings_echo,
        }
    }

    /// Structural invariants, checked on reports read back from disk.
    pub fn validate(&self) -> Result<(), ReportError> {
        if self.filtered_count > self.corpus_size {
            return Err(ReportError::SchemaViolation(format!(
                "filteredCount {} exceeds corpusSize {}",
                self.filtered_count, self.corpus_size
            )));
        }
        if !self
            .verdicts
            .windows(2)
            .all(|w| w[0].project < w[1].project)
        {
            return Err(ReportError::SchemaViolation(
                "verdicts must be strictly ordered by project name".to_string(),
            ));
        }
        for v in &self.verdicts {
            v.check_invariants().map_err(ReportError::SchemaViolation)?;
            for m in v.vuln_matches.iter().chain(&v.fix_matches) {
                if m.end_line < m.start_line || m.line_count == 0 {
                    return Err(ReportError::SchemaViolation(format!(
                        "{}: invalid block {}..{} ({} lines)",
                        v.project, m.start_line, m.end_line, m.line_count
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn count_by_status(&self, status: VerdictStatus) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }
}

fn escape_xml(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len());
    for c in raw.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn format_seconds(elapsed_ms: u64) -> String {
    format!("{:.3}", elapsed_ms as f64 / 1000.0)
}

fn push_block(out: &mut String, kind: &str, m: &CloneMatch) {
    out.push_str(&format!(
        "    <block match=\"{kind}\" snippetIndex=\"{}\" sourceFile=\"{}\" \
         startLineNumber=\"{}\" endLineNumber=\"{}\" lineCount=\"{}\"/>\n",
        m.snippet_index,
        escape_xml(&m.source_file),
        m.start_line,
        m.end_line,
        m.line_count
    ));
}

/// Renders the report as the XML document described in
/// `schema/report.xsd`.
pub fn to_xml_string(report: &ScanReport) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<clonewatch cve=\"{}\" timestamp=\"{}\" toolVersion=\"{}\" corpusSize=\"{}\" \
         filteredCount=\"{}\">\n",
        escape_xml(&report.cve_id),
        report
            .scan_timestamp
            .to_rfc3339_opts(SecondsFormat::Secs, true),
        escape_xml(&report.tool_version),
        report.corpus_size,
        report.filtered_count
    ));
    out.push_str("  <settings>\n");
    for (key, value) in &report.settings_echo {
        out.push_str(&format!(
            "    <setting name=\"{}\" value=\"{}\"/>\n",
            escape_xml(key),
            escape_xml(value)
        ));
    }
    out.push_str("  </settings>\n");
    for v in &report.verdicts {
        out.push_str(&format!(
            "  <project name=\"{}\" status=\"{}\" processingTime=\"{}\">\n",
            escape_xml(&v.project),
            v.status,
            format_seconds(v.elapsed_ms)
        ));
        for m in &v.vuln_matches {
            push_block(&mut out, "vulnerable", m);
        }
        for m in &v.fix_matches {
            push_block(&mut out, "fix", m);
        }
        for d in &v.diagnostics {
            out.push_str(&format!("    <diagnostic>{}</diagnostic>\n", escape_xml(d)));
        }
        out.push_str("  </project>\n");
    }
    out.push_str("</clonewatch>\n");
    out
}

/// Writes the XML report to `path`.
pub fn emit_xml(report: &ScanReport, path: &Path) -> Result<(), ReportError> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(to_xml_string(report).as_bytes())?;
    Ok(())
}

fn xml_err(e: impl std::fmt::Display) -> ReportError {
    ReportError::Xml(e.to_string())
}

fn schema_err(msg: impl Into<String>) -> ReportError {
    ReportError::SchemaViolation(msg.into())
}

struct RawAttrs(BTreeMap<String, String>);

impl RawAttrs {
    fn get(&self, key: &str) -> Result<&str, ReportError> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| schema_err(format!("missing attribute {key:?}")))
    }

    fn get_usize(&self, key: &str) -> Result<usize, ReportError> {
        self.get(key)?
            .parse()
            .map_err(|_| schema_err(format!("attribute {key:?} is not an integer")))
    }
}

fn collect_attrs(e: &quick_xml::events::BytesStart<'_>) -> Result<RawAttrs, ReportError> {
    let mut map = BTreeMap::new();
    for attr in e.attributes() {
        let attr = attr.map_err(xml_err)?;
        let key = String::from_utf8_lossy(attr.key.as_ref()).into_owned();
        let value = attr
            .normalized_value(quick_xml::XmlVersion::Explicit1_0)
            .map_err(xml_err)?
            .into_owned();
        map.insert(key, value);
    }
    Ok(RawAttrs(map))
}

/// Parses a report produced by [`to_xml_string`] back into a
/// [`ScanReport`] and checks its invariants.
pub fn parse_xml(xml: &str) -> Result<ScanReport, ReportError> {
    let mut reader = Reader::from_str(xml);

    let mut report: Option<ScanReport> = None;
    let mut current: Option<ProjectVerdict> = None;
    // Text inside <diagnostic>, accumulated across text and entity
    // events; None outside a diagnostic element.
    let mut diagnostic_text: Option<String> = None;

    loop {
        let event = reader.read_event().map_err(xml_err)?;
        match event {
            Event::Start(ref e) | Event::Empty(ref e) => {
                let empty_element = matches!(event, Event::Empty(_));
                match e.name().as_ref() {
                    b"clonewatch" => {
                        let attrs = collect_attrs(e)?;
                        let timestamp = DateTime::parse_from_rfc3339(attrs.get("timestamp")?)
                            .map_err(|e| schema_err(format!("bad timestamp: {e}")))?
                            .with_timezone(&Utc);
                        report = Some(ScanReport {
                            cve_id: attrs.get("cve")?.to_string(),
                            scan_timestamp: timestamp,
                            tool_version: attrs.get("toolVersion")?.to_string(),
                            corpus_size: attrs.get_usize("corpusSize")?,
                            filtered_count: attrs.get_usize("filteredCount")?,
                            verdicts: Vec::new(),
                            settings_echo: BTreeMap::new(),
                        });
                    }
                    b"settings" => {}
                    b"setting" => {
                        let attrs = collect_attrs(e)?;
                        let report = report
                            .as_mut()
                            .ok_or_else(|| schema_err("setting outside clonewatch"))?;
                        report.settings_echo.insert(
                            attrs.get("name")?.to_string(),
                            attrs.get("value")?.to_string(),
                        );
                    }
                    b"project" => {
                        let attrs = collect_attrs(e)?;
                        let status_raw = attrs.get("status")?;
                        let status = VerdictStatus::parse(status_raw)
                            .ok_or_else(|| schema_err(format!("unknown status {status_raw:?}")))?;
                        let seconds: f64 = attrs
                            .get("processingTime")?
                            .parse()
                            .map_err(|_| schema_err("processingTime is not a number"))?;
                        let verdict = ProjectVerdict {
                            project: attrs.get("name")?.to_string(),
                            status,
                            vuln_matches: Vec::new(),
                            fix_matches: Vec::new(),
                            elapsed_ms: (seconds * 1000.0).round() as u64,
                            diagnostics: Vec::new(),
                        };
                        if empty_element {
                            report
                                .as_mut()
                                .ok_or_else(|| schema_err("project outside clonewatch"))?
                                .verdicts
                                .push(verdict);
                        } else {
                            current = Some(verdict);
                        }
                    }
                    b"block" => {
                        let attrs = collect_attrs(e)?;
                        let verdict = current
                            .as_mut()
                            .ok_or_else(|| schema_err("block outside project"))?;
                        let m = CloneMatch {
                            source_file: attrs.get("sourceFile")?.to_string(),
                            start_line: attrs.get_usize("startLineNumber")?,
                            end_line: attrs.get_usize("endLineNumber")?,
                            line_count: attrs.get_usize("lineCount")?,
                            snippet_index: attrs.get_usize("snippetIndex")?,
                        };
                        match attrs.get("match")? {
                            "vulnerable" => verdict.vuln_matches.push(m),
                            "fix" => verdict.fix_matches.push(m),
                            other => {
                                return Err(schema_err(format!("unknown match kind {other:?}")))
                            }
                        }
                    }
                    b"diagnostic" => diagnostic_text = Some(String::new()),
                    other => {
                        return Err(schema_err(format!(
                            "unexpected element {:?}",
                            String::from_utf8_lossy(other)
                        )))
                    }
                }
            }
            Event::Text(ref t) => {
                if let Some(buf) = diagnostic_text.as_mut() {
                    buf.push_str(&t.decode().map_err(xml_err)?);
                }
            }
            Event::GeneralRef(ref r) => {
                if let Some(buf) = diagnostic_text.as_mut() {
                    if let Some(ch) = r.resolve_char_ref().map_err(xml_err)? {
                        buf.push(ch);
                    } else {
                        match r.decode().map_err(xml_err)?.as_ref() {
                            "lt" => buf.push('<'),
                            "gt" => buf.push('>'),
                            "amp" => buf.push('&'),
                            "apos" => buf.push('\''),
                            "quot" => buf.push('"'),
                            other => return Err(schema_err(format!("unknown entity &{other};"))),
                        }
                    }
                }
            }
            Event::End(e) => match e.name().as_ref() {
                b"project" => {
                    let verdict = current
                        .take()
                        .ok_or_else(|| schema_err("unbalanced project element"))?;
                    report
                        .as_mut()
                        .ok_or_else(|| schema_err("project outside clonewatch"))?
                        .verdicts
                        .push(verdict);
                }
                b"diagnostic" => {
                    let text = diagnostic_text
                        .take()
                        .ok_or_else(|| schema_err("unbalanced diagnostic element"))?;
                    current
                        .as_mut()
                        .ok_or_else(|| schema_err("diagnostic outside project"))?
                        .diagnostics
                        .push(text);
                }
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
    }

    let report = report.ok_or_else(|| schema_err("missing clonewatch root element"))?;
    report.validate()?;
    Ok(report)
}

/// Checks a document against the shipped report schema: well-formed
/// XML, the expected element structure, required attributes with valid
/// types, and the verdict invariants.
pub fn validate_xml(xml: &str) -> Result<(), ReportError> {
    parse_xml(xml).map(|_| ())
}

/// Writes the JSON mirror of the report. Lossless for every field.
pub fn emit_json(report: &ScanReport, path: &Path) -> Result<(), ReportError> {
    let json = serde_json::to_string_pretty(report)?;
    std::fs::write(path, json + "\n")?;
    Ok(())
}

pub fn to_json_string(report: &ScanReport) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

pub fn parse_json(json: &str) -> Result<ScanReport, ReportError> {
    let report: ScanReport = serde_json::from_str(json)?;
    report.validate()?;
    Ok(report)
}

/// Renders the fixed-width summary table with per-status totals.
pub fn emit_summary(report: &ScanReport) -> String {
    let name_width = report
        .verdicts
        .iter()
        .map(|v| v.project.len())
        .chain(std::iter::once("PROJECT".len()))
        .max()
        .unwrap_or(7);

    let mut out = String::new();
    out.push_str(&format!(
        "scan of {} at {} (tool {})\n",
        report.cve_id,
        report
            .scan_timestamp
            .to_rfc3339_opts(SecondsFormat::Secs, true),
        report.tool_version
    ));
    out.push_str(&format!(
        "corpus {} projects, {} scanned after filtering\n\n",
        report.corpus_size, report.filtered_count
    ));
    out.push_str(&format!(
        "{:<name_width$}  {:<13} {:>5} {:>5} {:>9}\n",
        "PROJECT", "STATUS", "VULN", "FIX", "TIME(S)"
    ));
    for v in &report.verdicts {
        out.push_str(&format!(
            "{:<name_width$}  {:<13} {:>5} {:>5} {:>9}\n",
            v.project,
            v.status.as_str(),
            v.vuln_matches.len(),
            v.fix_matches.len(),
            format_seconds(v.elapsed_ms)
        ));
    }
    out.push('\n');
    let totals = [
        VerdictStatus::Vulnerable,
        VerdictStatus::Fixed,
        VerdictStatus::NotAffected,
        VerdictStatus::FilteredOut,
        VerdictStatus::Error,
    ]
    .iter()
    .map(|s| format!("{} {}", s.as_str(), report.count_by_status(*s)))
    .collect::<Vec<_>>()
    .join(", ");
    out.push_str(&format!("TOTALS: {totals}\n"));
    out
}

/// Writes the summary to `path`.
pub fn emit_summary_file(report: &ScanReport, path: &Path) -> Result<(), ReportError> {
    std::fs::write(path, emit_summary(report))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;
    use proptest::prelude::*;

    fn ts() -> DateTime<Utc> {
        Utc.with_ymd_and_hms(2018, 10, 7, 0, 0, 0).unwrap()
    }

    fn sample_match() -> CloneMatch {
        CloneMatch {
            source_file: "src/main.cpp".to_string(),
            start_line: 100,
            end_line: 119,
            line_count: 20,
            snippet_index: 0,
        }
    }

    fn sample_report() -> ScanReport {
        let vulnerable = ProjectVerdict {
            project: "fork-a".to_string(),
            status: VerdictStatus::Vulnerable,
            vuln_matches: vec![sample_match()],
            fix_matches: vec![],
            elapsed_ms: 123,
            diagnostics: vec![],
        };
        let fixed = ProjectVerdict {
            project: "fork-b".to_string(),
            status: VerdictStatus::Fixed,
            vuln_matches: vec![],
            fix_matches: vec![CloneMatch {
                snippet_index: 1,
                ..sample_match()
            }],
            elapsed_ms: 77,
            diagnostics: vec!["skipped binary file img.bin".to_string()],
        };
        let mut settings = BTreeMap::new();
        settings.insert("jobs".to_string(), "8".to_string());
        settings.insert("minBlock".to_string(), "6".to_string());
        ScanReport::new(
            "CVE-2018-17144",
            ts(),
            5,
            4,
            vec![fixed, vulnerable],
            settings,
        )
    }

    #[test]
    fn xml_contains_simian_style_block_fields() {
        let xml = to_xml_string(&sample_report());
        assert!(xml.contains(
            "sourceFile=\"src/main.cpp\" startLineNumber=\"100\" endLineNumber=\"119\" \
             lineCount=\"20\""
        ));
        assert!(xml.contains("processingTime=\"0.123\""));
        assert!(xml.contains("cve=\"CVE-2018-17144\""));
    }

    #[test]
    fn xml_round_trip_reproduces_verdicts() {
        let report = sample_report();
        let parsed = parse_xml(&to_xml_string(&report)).unwrap();
        assert_eq!(report, parsed);
    }

    #[test]
    fn empty_report_is_well_formed() {
        let report = ScanReport::new("CVE-2018-17144", ts(), 0, 0, vec![], BTreeMap::new());
        let xml = to_xml_string(&report);
        validate_xml(&xml).unwrap();
        let parsed = parse_xml(&xml).unwrap();
        assert!(parsed.verdicts.is_empty());
    }

    #[test]
    fn verdicts_are_sorted_by_name() {
        let report = sample_report();
        assert_eq!(report.verdicts[0].project, "fork-a");
        assert_eq!(report.verdicts[1].project, "fork-b");
    }

    #[test]
    fn xml_escapes_special_characters() {
        let verdict = ProjectVerdict::error("weird<&>\"name", "diag with <tags> & \"quotes\"");
        let report = ScanReport::new("CVE-2020-0001", ts(), 1, 1, vec![verdict], BTreeMap::new());
        let xml = to_xml_string(&report);
        let parsed = parse_xml(&xml).unwrap();
        assert_eq!(parsed.verdicts[0].project, "weird<&>\"name");
        assert_eq!(
            parsed.verdicts[0].diagnostics[0],
            "diag with <tags> & \"quotes\""
        );
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let report = sample_report();
        let parsed = parse_json(&to_json_string(&report).unwrap()).unwrap();
        assert_eq!(report, parsed);
    }

    #[test]
    fn summary_footer_totals() {
        let summary = emit_summary(&sample_report());
        assert!(summary
            .contains("TOTALS: VULNERABLE 1, FIXED 1, NOT_AFFECTED 0, FILTERED_OUT 0, ERROR 0"));
        assert!(summary.contains("fork-a"));
    }

    #[test]
    fn summary_of_empty_report() {
        let report = ScanReport::new("CVE-2018-17144", ts(), 0, 0, vec![], BTreeMap::new());
        let summary = emit_summary(&report);
        assert!(summary.contains("PROJECT"));
        assert!(summary
            .contains("TOTALS: VULNERABLE 0, FIXED 0, NOT_AFFECTED 0, FILTERED_OUT 0, ERROR 0"));
    }

    #[test]
    fn validation_rejects_inconsistent_counts() {
        let mut report = sample_report();
        report.filtered_count = 99;
        assert!(matches!(
            report.validate(),
            Err(ReportError::SchemaViolation(_))
        ));
    }

    #[test]
    fn validation_rejects_broken_verdict_invariant() {
        let xml = to_xml_string(&sample_report())
            .replace("status=\"VULNERABLE\"", "status=\"NOT_AFFECTED\"");
        assert!(matches!(
            parse_xml(&xml),
            Err(ReportError::SchemaViolation(_))
        ));
    }

    #[test]
    fn malformed_xml_is_rejected() {
        assert!(matches!(
            parse_xml("<clonewatch cve=\"x\""),
            Err(ReportError::Xml(_) | ReportError::SchemaViolation(_))
        ));
    }

    #[test]
    fn golden_xml_document() {
        let expected = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
<clonewatch cve=\"CVE-2018-17144\" timestamp=\"2018-10-07T00:00:00Z\" toolVersion=\"0.1.0\" corpusSize=\"5\" filteredCount=\"4\">\n\
\x20 <settings>\n\
\x20   <setting name=\"jobs\" value=\"8\"/>\n\
\x20   <setting name=\"minBlock\" value=\"6\"/>\n\
\x20 </settings>\n\
\x20 <project name=\"fork-a\" status=\"VULNERABLE\" processingTime=\"0.123\">\n\
\x20   <block match=\"vulnerable\" snippetIndex=\"0\" sourceFile=\"src/main.cpp\" startLineNumber=\"100\" endLineNumber=\"119\" lineCount=\"20\"/>\n\
\x20 </project>\n\
\x20 <project name=\"fork-b\" status=\"FIXED\" processingTime=\"0.077\">\n\
\x20   <block match=\"fix\" snippetIndex=\"1\" sourceFile=\"src/main.cpp\" startLineNumber=\"100\" endLineNumber=\"119\" lineCount=\"20\"/>\n\
\x20   <diagnostic>skipped binary file img.bin</diagnostic>\n\
\x20 </project>\n\
</clonewatch>\n";
        assert_eq!(to_xml_string(&sample_report()), expected);
    }

    fn arb_status() -> impl Strategy<Value = VerdictStatus> {
        prop_oneof![
            Just(VerdictStatus::Vulnerable),
            Just(VerdictStatus::Fixed),
            Just(VerdictStatus::NotAffected),
            Just(VerdictStatus::FilteredOut),
            Just(VerdictStatus::Error),
        ]
    }

    fn arb_match() -> impl Strategy<Value = CloneMatch> {
        ("[a-z/._ &<>\"]{1,20}", 1usize..5000, 1usize..40, 0usize..4).prop_map(
            |(file, start, span, idx)| CloneMatch {
                source_file: file,
                start_line: start,
                end_line: start + span - 1,
                line_count: span,
                snippet_index: idx,
            },
        )
    }

    fn arb_verdict() -> impl Strategy<Value = ProjectVerdict> {
        (
            arb_status(),
            proptest::collection::vec(arb_match(), 0..3),
            proptest::collection::vec(arb_match(), 0..3),
            0u64..100_000,
            proptest::collection::vec("[ -~]{0,30}", 0..2),
        )
            .prop_map(move |(status, vuln, fix, elapsed, diags)| {
                // Make the matches agree with the requested status.
                let (vuln, fix) = match status {
                    VerdictStatus::Vulnerable => {
                        let mut v = vuln;
                        if v.is_empty() {
                            v.push(CloneMatch {
                                source_file: "f".into(),
                                start_line: 1,
                                end_line: 1,
                                line_count: 1,
                                snippet_index: 0,
                            });
                        }
                        (v, vec![])
                    }
                    VerdictStatus::Fixed => {
                        let mut f = fix;
                        if f.is_empty() {
                            f.push(CloneMatch {
                                source_file: "f".into(),
                                start_line: 1,
                                end_line: 1,
                                line_count: 1,
                                snippet_index: 0,
                            });
                        }
                        (vuln, f)
                    }
                    VerdictStatus::NotAffected => (vec![], vec![]),
                    VerdictStatus::FilteredOut | VerdictStatus::Error => (vec![], vec![]),
                };
                ProjectVerdict {
                    project: String::new(), // named by index below
                    status,
                    vuln_matches: vuln,
                    fix_matches: fix,
                    elapsed_ms: elapsed,
                    diagnostics: diags
                        .into_iter()
                        .map(|d| d.trim().to_string())
                        .filter(|d| !d.is_empty())
                        .collect(),
                }
            })
    }

    proptest! {
        #[test]
        fn generated_reports_validate_and_round_trip(
            mut verdicts in proptest::collection::vec(arb_verdict(), 0..6),
            extra in 0usize..10,
        ) {
            for (i, v) in verdicts.iter_mut().enumerate() {
                v.project = format!("project-{i:03}");
            }
            let n = verdicts.len();
            let report = ScanReport::new(
                "CVE-2019-0001",
                ts(),
                n + extra,
                n,
                verdicts,
                BTreeMap::from([("jobs".to_string(), "1".to_string())]),
            );
            let xml = to_xml_string(&report);
            validate_xml(&xml).unwrap();
            prop_assert_eq!(parse_xml(&xml).unwrap(), report.clone());
            prop_assert_eq!(parse_json(&to_json_string(&report).unwrap()).unwrap(), report);
        }
    }
}
