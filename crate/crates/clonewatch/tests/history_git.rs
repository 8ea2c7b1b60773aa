//! History operations exercised against real scripted git repositories.

mod common;

use std::collections::BTreeSet;

use clonewatch::cve::IssueRecord;
use clonewatch::history::{
    blame_previous_commits, compute_window, match_fix_commits, CommitId, HistoryError,
    RepositoryHandle,
};
use clonewatch::registry::{resolve_fork_date, ForkDateSource, ProjectRecord};
use common::{GitFixture, XorShift};

fn issue(id: &str, labels: &[&str], commits: &[&str], text: &str) -> IssueRecord {
    IssueRecord {
        issue_id: id.to_string(),
        state_labels: labels.iter().map(|l| l.to_string()).collect(),
        linked_commits: commits.iter().map(|c| CommitId::new(*c).unwrap()).collect(),
        title_and_body: text.to_string(),
    }
}

fn hashes(set: &BTreeSet<clonewatch::history::CommitRef>) -> BTreeSet<String> {
    set.iter().map(|c| c.hash.clone()).collect()
}

#[test]
fn match_fix_commits_finds_linked_commit_by_message() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    repo.write("a.txt", "two\n");
    let fix = repo.commit("Fix CVE-2018-17144 crash", "2018-09-18T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let issues = vec![issue("1", &["closed"], &[&fix], "no keywords here at all")];
    let matched = match_fix_commits(&issues, r"(?i)\bCVE-2018-17144\b", &handle).unwrap();
    assert_eq!(hashes(&matched.commits), BTreeSet::from([fix]));
    assert!(matched.details[0].matched_in_message);
    assert!(!matched.details[0].matched_in_issue_text);
}

#[test]
fn match_fix_commits_finds_commit_via_issue_text() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    repo.write("a.txt", "two\n");
    let fix = repo.commit("tighten input validation", "2018-09-18T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let issues = vec![issue(
        "1",
        &["bug"],
        &[&fix],
        "crash reported as CVE-2018-17144",
    )];
    let matched = match_fix_commits(&issues, r"(?i)\bCVE-2018-17144\b", &handle).unwrap();
    assert_eq!(matched.commits.len(), 1);
    let detail = &matched.details[0];
    assert!(detail.matched_in_issue_text);
    assert!(!detail.matched_in_message);
}

#[test]
fn match_fix_commits_dedupes_across_issues() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    repo.write("a.txt", "two\n");
    let fix = repo.commit("Fix CVE-2020-1234", "2018-09-18T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let issues = vec![
        issue("1", &["closed"], &[&fix], "first report of CVE-2020-1234"),
        issue("2", &["bug"], &[&fix], "duplicate report of CVE-2020-1234"),
    ];
    let matched = match_fix_commits(&issues, r"(?i)\bCVE-2020-1234\b", &handle).unwrap();
    assert_eq!(matched.commits.len(), 1);
    assert_eq!(matched.details.len(), 2);
}

#[test]
fn match_fix_commits_empty_issue_list() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let matched = match_fix_commits(&[], r"anything", &handle).unwrap();
    assert!(matched.commits.is_empty());
}

#[test]
fn match_fix_commits_rejects_bad_pattern() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    assert!(matches!(
        match_fix_commits(&[], r"(unclosed", &handle),
        Err(HistoryError::BadPattern(_))
    ));
}

#[test]
fn match_fix_commits_skips_unknown_commit_with_warning() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    repo.commit("initial", "2018-01-01T00:00:00+00:00");
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let issues = vec![issue(
        "1",
        &["closed"],
        &["deadbeefdeadbeefdeadbeefdeadbeefdeadbeef"],
        "mentions CVE-2020-1234",
    )];
    let matched = match_fix_commits(&issues, r"(?i)CVE-2020-1234", &handle).unwrap();
    assert!(matched.commits.is_empty());
    assert_eq!(matched.warnings.len(), 1);
    assert!(matched.warnings[0].contains("deadbeef"));
}

#[test]
fn match_fix_commits_is_monotone_in_pattern() {
    let repo = GitFixture::new();
    repo.write("a.txt", "one\n");
    let c1 = repo.commit("fix the overflow", "2018-01-01T00:00:00+00:00");
    repo.write("a.txt", "two\n");
    let c2 = repo.commit("rework the parser", "2018-02-01T00:00:00+00:00");
    repo.write("a.txt", "three\n");
    let c3 = repo.commit("fix the assertion", "2018-03-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let issues = vec![
        issue("1", &["closed"], &[&c1], "first"),
        issue("2", &["closed"], &[&c2], "second"),
        issue("3", &["closed"], &[&c3], "third"),
    ];
    let narrow = match_fix_commits(&issues, r"(?i)\b(?:overflow)\b", &handle).unwrap();
    let wide = match_fix_commits(&issues, r"(?i)\b(?:overflow|assertion)\b", &handle).unwrap();
    assert!(hashes(&narrow.commits).is_subset(&hashes(&wide.commits)));
    assert_eq!(narrow.commits.len(), 1);
    assert_eq!(wide.commits.len(), 2);
}

#[test]
fn blame_modified_line_returns_introducing_commit() {
    let repo = GitFixture::new();
    repo.write("f.txt", "base line\n");
    repo.commit("base", "2016-01-01T00:00:00+00:00");
    repo.write("f.txt", "base line\nflawed line\n");
    let intro = repo.commit("introduce", "2016-06-01T00:00:00+00:00");
    repo.write("f.txt", "base line\n");
    let fix = repo.commit("remove flawed line", "2017-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
    let blamed = blame_previous_commits(&fix_ref, &handle).unwrap();
    assert_eq!(hashes(&blamed), BTreeSet::from([intro]));
}

#[test]
fn blame_new_file_only_fix_returns_empty() {
    let repo = GitFixture::new();
    repo.write("f.txt", "base\n");
    repo.commit("base", "2016-01-01T00:00:00+00:00");
    repo.write("mitigation.txt", "brand new content\nmore new content\n");
    let fix = repo.commit("add mitigation document", "2017-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
    assert!(blame_previous_commits(&fix_ref, &handle)
        .unwrap()
        .is_empty());
}

#[test]
fn blame_pure_insertion_blames_adjacent_lines() {
    let repo = GitFixture::new();
    repo.write("f.txt", "above line\nbelow line\n");
    let surrounding = repo.commit("surrounding", "2016-01-01T00:00:00+00:00");
    repo.write("other.txt", "noise\n");
    repo.commit("noise", "2016-06-01T00:00:00+00:00");
    repo.write("f.txt", "above line\ninserted check\nbelow line\n");
    let fix = repo.commit("insert missing check", "2017-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
    let blamed = blame_previous_commits(&fix_ref, &handle).unwrap();
    assert_eq!(hashes(&blamed), BTreeSet::from([surrounding]));
}

#[test]
fn blame_insertion_at_top_of_file_uses_line_below() {
    let repo = GitFixture::new();
    repo.write("f.txt", "first original\nsecond original\n");
    let original = repo.commit("original", "2016-01-01T00:00:00+00:00");
    repo.write("f.txt", "new header\nfirst original\nsecond original\n");
    let fix = repo.commit("prepend header", "2017-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
    let blamed = blame_previous_commits(&fix_ref, &handle).unwrap();
    assert_eq!(hashes(&blamed), BTreeSet::from([original]));
}

#[test]
fn blame_never_returns_the_fix_itself() {
    let repo = GitFixture::new();
    repo.write("f.txt", "a\nb\nc\n");
    repo.commit("base", "2016-01-01T00:00:00+00:00");
    repo.write("f.txt", "a\nB\nc\nd\n");
    let fix = repo.commit("fix", "2017-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
    let blamed = blame_previous_commits(&fix_ref, &handle).unwrap();
    assert!(!hashes(&blamed).contains(&fix));
}

#[test]
fn blame_root_commit_fix_is_vacuous() {
    let repo = GitFixture::new();
    repo.write("f.txt", "only\n");
    let root = repo.commit("root fix", "2016-01-01T00:00:00+00:00");
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let (root_ref, _) = handle
        .lookup_commit(&CommitId::new(&root).unwrap())
        .unwrap();
    assert!(blame_previous_commits(&root_ref, &handle)
        .unwrap()
        .is_empty());
}

/// Brute-force provenance oracle on randomized linear histories.
///
/// Each history evolves a file through whole-line replacements and
/// end-appends with globally unique line texts, while the test tracks
/// which commit last wrote every line. The final commit replaces a
/// random set of lines; blame must return exactly the tracked
/// provenance of those lines.
#[test]
fn blame_matches_provenance_oracle_on_linear_histories() {
    let mut rng = XorShift::new(0x5eed_cafe);
    for round in 0..5 {
        let repo = GitFixture::new();
        let mut lines: Vec<String> = Vec::new();
        let mut serial = 0usize;

        // Initial file: 4-8 unique lines.
        let initial_len = 4 + rng.below(5);
        for _ in 0..initial_len {
            lines.push(format!("line {round}-{serial};"));
            serial += 1;
        }
        repo.write("src/f.cpp", &(lines.join("\n") + "\n"));
        let base = repo.commit("base", "2016-01-01T00:00:00+00:00");
        // Commit hash that last wrote each line.
        let mut provenance: Vec<String> = vec![base; lines.len()];

        // 3-6 evolution commits.
        let steps = 3 + rng.below(4);
        for step in 0..steps {
            let mut touched = false;
            // Replace up to 2 random lines.
            for _ in 0..=rng.below(2) {
                let idx = rng.below(lines.len());
                lines[idx] = format!("line {round}-{serial};");
                serial += 1;
                provenance[idx] = String::new(); // filled after commit
                touched = true;
            }
            // Sometimes append a line.
            if rng.below(2) == 0 {
                lines.push(format!("line {round}-{serial};"));
                serial += 1;
                provenance.push(String::new());
                touched = true;
            }
            assert!(touched);
            repo.write("src/f.cpp", &(lines.join("\n") + "\n"));
            let hash = repo.commit(
                &format!("evolve {step}"),
                &format!("2016-0{}-01T00:00:00+00:00", 2 + step),
            );
            for p in provenance.iter_mut() {
                if p.is_empty() {
                    *p = hash.clone();
                }
            }
        }

        // The fix: replace 1-3 random distinct lines.
        let mut targets = BTreeSet::new();
        for _ in 0..=(rng.below(3)) {
            targets.insert(rng.below(lines.len()));
        }
        let expected: BTreeSet<String> = targets.iter().map(|i| provenance[*i].clone()).collect();
        for idx in &targets {
            lines[*idx] = format!("line {round}-{serial};");
            serial += 1;
        }
        repo.write("src/f.cpp", &(lines.join("\n") + "\n"));
        let fix = repo.commit("the fix", "2017-01-01T00:00:00+00:00");

        let handle = RepositoryHandle::open(repo.path()).unwrap();
        let (fix_ref, _) = handle.lookup_commit(&CommitId::new(&fix).unwrap()).unwrap();
        let blamed = blame_previous_commits(&fix_ref, &handle).unwrap();
        assert_eq!(
            hashes(&blamed),
            expected,
            "round {round}: blame disagrees with tracked provenance"
        );
    }
}

#[test]
fn szz_end_to_end_on_scripted_history() {
    let parent = common::build_parent_history();
    let handle = RepositoryHandle::open(parent.repo.path()).unwrap();

    let issues = vec![issue(
        "14247",
        &["bug", "closed"],
        &[&parent.fix_hash],
        "Assertion failure; see CVE-2018-17144.",
    )];
    let matched = match_fix_commits(&issues, r"(?i)\bCVE-2018-17144\b", &handle).unwrap();
    assert_eq!(
        hashes(&matched.commits),
        BTreeSet::from([parent.fix_hash.clone()])
    );

    let fix_ref = matched.commits.iter().next().unwrap().clone();
    let intro = blame_previous_commits(&fix_ref, &handle).unwrap();
    assert_eq!(hashes(&intro), BTreeSet::from([parent.intro_hash.clone()]));

    let window = compute_window(&intro, &matched.commits).unwrap();
    assert_eq!(window.intro_min.to_rfc3339(), "2016-12-01T10:00:00+00:00");
    assert_eq!(window.fix_max.to_rfc3339(), "2018-09-18T12:00:00+00:00");
}

#[test]
fn first_commit_timestamp_and_fork_date_resolution() {
    let repo = GitFixture::new();
    repo.write("f.txt", "x\n");
    repo.commit("first", "2018-02-10T00:00:00+00:00");
    repo.write("f.txt", "y\n");
    repo.commit("second", "2019-01-01T00:00:00+00:00");

    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let record = ProjectRecord {
        name: "fork".into(),
        repo_location: repo.path().display().to_string(),
        declared_language: "C++".into(),
        fork_date: None,
    };
    let resolved = resolve_fork_date(&record, &handle).unwrap();
    let fork = resolved.fork_date.unwrap();
    assert_eq!(fork.at.to_rfc3339(), "2018-02-10T00:00:00+00:00");
    assert_eq!(fork.source, ForkDateSource::FirstCommit);
}

#[test]
fn empty_repository_yields_empty_history_error() {
    let repo = GitFixture::new();
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let record = ProjectRecord {
        name: "empty".into(),
        repo_location: repo.path().display().to_string(),
        declared_language: "C++".into(),
        fork_date: None,
    };
    assert!(matches!(
        resolve_fork_date(&record, &handle),
        Err(clonewatch::registry::RegistryError::EmptyHistory(_))
    ));
}

#[test]
fn open_rejects_non_repository() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(
        RepositoryHandle::open(dir.path()),
        Err(HistoryError::UnreadableRepo { .. })
    ));
}

#[test]
fn lookup_missing_commit() {
    let repo = GitFixture::new();
    repo.write("f.txt", "x\n");
    repo.commit("first", "2018-02-10T00:00:00+00:00");
    let handle = RepositoryHandle::open(repo.path()).unwrap();
    let missing = CommitId::new("abcdef0123456789abcdef0123456789abcdef01").unwrap();
    assert!(matches!(
        handle.lookup_commit(&missing),
        Err(HistoryError::CommitNotFound(_))
    ));
}
