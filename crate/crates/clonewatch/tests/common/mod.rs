//! Shared fixtures: scripted git histories with pinned dates, and the
//! five-fork corpus used by the CLI and acceptance suites.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

/// A git repository with fully scripted commit dates.
pub struct GitFixture {
    dir: TempDir,
}

impl GitFixture {
    pub fn new() -> Self {
        let dir = TempDir::new().expect("create temp repo dir");
        let fixture = Self { dir };
        fixture.git(&["init", "--quiet", "--initial-branch=main"], &[]);
        fixture
    }

    pub fn path(&self) -> &Path {
        self.dir.path()
    }

    pub fn write(&self, rel: &str, content: &str) {
        let path = self.dir.path().join(rel);
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, content).unwrap();
    }

    pub fn remove(&self, rel: &str) {
        std::fs::remove_file(self.dir.path().join(rel)).unwrap();
    }

    /// Commits the working tree with the given message and RFC 3339
    /// author/committer date. Returns the full commit hash.
    pub fn commit(&self, message: &str, date: &str) -> String {
        self.git(&["add", "-A"], &[]);
        self.git(
            &[
                "-c",
                "user.name=Fixture Dev",
                "-c",
                "user.email=dev@example.invalid",
                "commit",
                "--quiet",
                "--allow-empty",
                "-m",
                message,
            ],
            &[("GIT_AUTHOR_DATE", date), ("GIT_COMMITTER_DATE", date)],
        );
        self.rev_parse("HEAD")
    }

    pub fn rev_parse(&self, rev: &str) -> String {
        self.git(&["rev-parse", rev], &[]).trim().to_string()
    }

    fn git(&self, args: &[&str], envs: &[(&str, &str)]) -> String {
        let mut cmd = Command::new("git");
        cmd.arg("-C")
            .arg(self.dir.path())
            .args(args)
            .env("GIT_CONFIG_GLOBAL", "/dev/null")
            .env("GIT_CONFIG_SYSTEM", "/dev/null");
        for (k, v) in envs {
            cmd.env(k, v);
        }
        let out = cmd.output().expect("spawn git");
        assert!(
            out.status.success(),
            "git {args:?} failed: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        String::from_utf8_lossy(&out.stdout).into_owned()
    }
}

pub fn write_file(root: &Path, rel: &str, content: &str) {
    let path = root.join(rel);
    std::fs::create_dir_all(path.parent().unwrap()).unwrap();
    std::fs::write(path, content).unwrap();
}

/// The code block the "vulnerability" lives in, exactly as the parent
/// project carries it between the introducing and fixing commits.
pub const VULN_BLOCK: &str = "    for (const auto& txin : tx.vin) {
        if (txin.prevout.IsNull()) {
            return state.Invalid(\"bad-txns-prevout-null\");
        }
        spent.Mark(txin.prevout);
    }
";

/// The block after the fix: the marking line is replaced by an insert
/// that rejects duplicates.
pub const FIXED_BLOCK: &str = "    for (const auto& txin : tx.vin) {
        if (txin.prevout.IsNull()) {
            return state.Invalid(\"bad-txns-prevout-null\");
        }
        if (!spent.Insert(txin.prevout)) {
            return state.Invalid(\"bad-txns-inputs-duplicate\");
        }
    }
";

/// The three lines unique to the fix, used as the fix snippet.
pub const FIX_SNIPPET: &str = "        if (!spent.Insert(txin.prevout)) {
            return state.Invalid(\"bad-txns-inputs-duplicate\");
        }
";

fn validation_cpp(log_level: i32, block: Option<&str>) -> String {
    let mut out = String::from("#include \"validation.h\"\n\n");
    out.push_str(&format!("static int log_level = {log_level};\n\n"));
    out.push_str("bool CheckTransaction(const Tx& tx, State& state) {\n");
    out.push_str("    if (tx.vin.empty()) {\n");
    out.push_str("        return state.Invalid(\"bad-txns-vin-empty\");\n");
    out.push_str("    }\n");
    out.push_str("    if (tx.vout.empty()) {\n");
    out.push_str("        return state.Invalid(\"bad-txns-vout-empty\");\n");
    out.push_str("    }\n");
    if let Some(block) = block {
        out.push_str(block);
    }
    out.push_str("    return true;\n}\n");
    out
}

pub const INTRO_DATE: &str = "2016-12-01T10:00:00+00:00";
pub const FIX_DATE: &str = "2018-09-18T12:00:00+00:00";

/// The scripted parent history: seven commits, one introducing the
/// flaw, one fixing it, the rest noise.
pub struct ParentHistory {
    pub repo: GitFixture,
    pub intro_hash: String,
    pub fix_hash: String,
    pub noise_hashes: Vec<String>,
}

pub fn build_parent_history() -> ParentHistory {
    let repo = GitFixture::new();
    let mut noise = Vec::new();

    repo.write("src/validation.cpp", &validation_cpp(1, None));
    repo.write(
        "src/util.cpp",
        "int Clamp(int v) {\n    return v < 0 ? 0 : v;\n}\n",
    );
    noise.push(repo.commit("initial import", "2016-10-01T00:00:00+00:00"));

    repo.write("README.md", "# parentcoin\n");
    noise.push(repo.commit("add readme", "2016-11-10T00:00:00+00:00"));

    repo.write("src/validation.cpp", &validation_cpp(1, Some(VULN_BLOCK)));
    let intro_hash = repo.commit("add fast path for input marking", INTRO_DATE);

    repo.write(
        "src/util.cpp",
        "int Clamp(int v) {\n    if (v < 0) {\n        return 0;\n    }\n    return v;\n}\n",
    );
    noise.push(repo.commit("refactor clamp", "2017-05-02T00:00:00+00:00"));

    repo.write("src/validation.cpp", &validation_cpp(2, Some(VULN_BLOCK)));
    noise.push(repo.commit("raise default log level", "2018-01-10T00:00:00+00:00"));

    repo.write("src/validation.cpp", &validation_cpp(2, Some(FIXED_BLOCK)));
    let fix_hash = repo.commit("Fix CVE-2018-17144: reject duplicate inputs", FIX_DATE);

    repo.write("VERSION", "0.16.3\n");
    noise.push(repo.commit("bump version", "2018-10-01T00:00:00+00:00"));

    ParentHistory {
        repo,
        intro_hash,
        fix_hash,
        noise_hashes: noise,
    }
}

/// Everything the end-to-end pipeline needs on disk: the parent repo,
/// five fork trees, the manifest, descriptor, issue export, and
/// annotation file.
pub struct PipelineFixture {
    pub dir: TempDir,
    pub parent: ParentHistory,
    pub manifest: PathBuf,
    pub cve: PathBuf,
    pub issues: PathBuf,
    pub annotations: PathBuf,
    pub out_dir: PathBuf,
}

pub fn build_pipeline_fixture() -> PipelineFixture {
    let dir = TempDir::new().expect("create fixture dir");
    let parent = build_parent_history();
    let root = dir.path();

    // Two forks that carry the vulnerable block verbatim.
    write_file(
        root,
        "forks/fork-hotcoin/src/validation.cpp",
        &validation_cpp(2, Some(VULN_BLOCK)),
    );
    write_file(
        root,
        "forks/fork-hotcoin/src/hot.cpp",
        "int HotPath(int base) {\n    int acc = base;\n    acc += 42;\n    acc *= 2;\n    return acc;\n}\n",
    );
    write_file(
        root,
        "forks/fork-dupcoin/core/checks.cpp",
        &format!(
            "// dupcoin validation core\nnamespace dup {{\nbool Verify(const Tx& tx, State& state) {{\n{VULN_BLOCK}    return Finish(state);\n}}\n}}\n"
        ),
    );
    // One fork that applied the fix.
    write_file(
        root,
        "forks/fork-patchcoin/src/validation.cpp",
        &validation_cpp(2, Some(FIXED_BLOCK)),
    );
    // One fork created before the flaw existed.
    write_file(
        root,
        "forks/fork-oldcoin/src/validation.cpp",
        &validation_cpp(1, None),
    );
    // One in-window fork that shares no code.
    write_file(
        root,
        "forks/fork-othercoin/src/ledger.cpp",
        "struct Ledger {\n    int height;\n};\n\nint Tip(const Ledger& l) {\n    return l.height;\n}\n",
    );

    let manifest = root.join("manifest.csv");
    std::fs::write(
        &manifest,
        "name,repo,language,fork_date\n\
         # five monitored forks around the window\n\
         fork-hotcoin,forks/fork-hotcoin,C++,2017-03-01T00:00:00Z\n\
         fork-dupcoin,forks/fork-dupcoin,C++,2018-02-15T00:00:00Z\n\
         fork-patchcoin,forks/fork-patchcoin,C++,2017-07-01T00:00:00Z\n\
         fork-oldcoin,forks/fork-oldcoin,C++,2016-05-01T00:00:00Z\n\
         fork-othercoin,forks/fork-othercoin,C++,2017-09-01T00:00:00Z\n",
    )
    .unwrap();

    let cve = root.join("cve.json");
    std::fs::write(
        &cve,
        serde_json::json!({
            "id": "CVE-2018-17144",
            "published": "2018-09-19T22:29:00Z",
            "description": "Remote denial of service due to duplicate input handling in \
                            transaction validation. CVE-2018-17144 allows crashing nodes \
                            via crafted transactions.",
            "references": ["https://example.invalid/advisories/CVE-2018-17144"],
            "affected_language": "C++",
            "affected_projects": ["parentcoin"]
        })
        .to_string(),
    )
    .unwrap();

    let issues = root.join("issues.json");
    std::fs::write(
        &issues,
        serde_json::json!([
            {
                "issue_id": "14247",
                "labels": ["bug", "closed"],
                "commits": [parent.fix_hash.clone()],
                "text": "Assertion failure and potential DoS; see CVE-2018-17144."
            },
            {
                "issue_id": "14300",
                "labels": ["closed"],
                "commits": [parent.noise_hashes.last().unwrap()],
                "text": "Housekeeping for the release branch."
            },
            {
                "issue_id": "14351",
                "labels": ["open"],
                "commits": [],
                "text": "Unrelated open question about CVE-2018-17144 docs."
            }
        ])
        .to_string(),
    )
    .unwrap();

    let annotations = root.join("annotations.json");
    let vuln_lines: Vec<&str> = VULN_BLOCK.lines().collect();
    let fix_lines: Vec<&str> = FIX_SNIPPET.lines().collect();
    std::fs::write(
        &annotations,
        serde_json::json!({
            "vulnerable": [{
                "source_lines": vuln_lines,
                "origin": {
                    "commit": parent.intro_hash.clone(),
                    "file": "src/validation.cpp",
                    "start_line": 12
                }
            }],
            "fix": [{
                "source_lines": fix_lines,
                "origin": {
                    "commit": parent.fix_hash.clone(),
                    "file": "src/validation.cpp",
                    "start_line": 16
                }
            }]
        })
        .to_string(),
    )
    .unwrap();

    let out_dir = root.join("out");
    PipelineFixture {
        dir,
        parent,
        manifest,
        cve,
        issues,
        annotations,
        out_dir,
    }
}

/// Deterministic xorshift generator for randomized-but-reproducible
/// test inputs.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        Self(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    /// Uniform in [0, bound).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Masks the fields the determinism contract exempts, so reports from
/// different runs can be compared byte-for-byte.
pub fn mask_timing(text: &str) -> String {
    let time_attr = regex::Regex::new(r#"processingTime="[0-9.]+""#).unwrap();
    let timestamp_attr = regex::Regex::new(r#"timestamp="[^"]+""#).unwrap();
    let elapsed_json = regex::Regex::new(r#""elapsed_ms": [0-9]+"#).unwrap();
    let scan_ts_json = regex::Regex::new(r#""scan_timestamp": "[^"]+""#).unwrap();
    let masked = time_attr.replace_all(text, r#"processingTime="X""#);
    let masked = timestamp_attr.replace_all(&masked, r#"timestamp="X""#);
    let masked = elapsed_json.replace_all(&masked, r#""elapsed_ms": 0"#);
    scan_ts_json
        .replace_all(&masked, r#""scan_timestamp": "X""#)
        .into_owned()
}
