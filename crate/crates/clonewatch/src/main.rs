use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use clonewatch::pipeline::{self, exit_code, CandidateStatus, ScanConfig};
use clonewatch::report::emit_summary;

/// Scans forked projects for vulnerabilities inherited from a parent
/// project and never patched.
#[derive(Parser)]
#[command(name = "clonewatch", version, about)]
struct Cli {
    /// Configuration file (TOML); command-line flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct CommonArgs {
    /// Vulnerability descriptor (JSON).
    #[arg(long)]
    cve: Option<PathBuf>,
    /// Monitored-project manifest (CSV).
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Issue-tracker export (JSON).
    #[arg(long)]
    issues: Option<PathBuf>,
    /// Parent project repository.
    #[arg(long)]
    repo: Option<PathBuf>,
    /// Detection test file.
    #[arg(long)]
    test: Option<PathBuf>,
    /// Output directory for stage files and reports.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker count for scanning.
    #[arg(long)]
    jobs: Option<usize>,
    /// Language filter for the corpus (defaults to the descriptor's).
    #[arg(long)]
    language: Option<String>,
    /// Minimum shared-block length for ratio mode.
    #[arg(long)]
    min_block: Option<usize>,
    /// Stopword list (one token per line).
    #[arg(long)]
    stopwords: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Derive the vulnerability window from issues, fix commits, and blame.
    Szz {
        #[command(flatten)]
        common: CommonArgs,
        /// Keyword count for the issue-search pattern.
        #[arg(long, default_value_t = 5)]
        top_k: usize,
    },
    /// Filter the monitored corpus by language and fork-date window.
    Filter {
        #[command(flatten)]
        common: CommonArgs,
        /// Window file from `szz` (defaults to <out>/window.json).
        #[arg(long)]
        window: Option<PathBuf>,
    },
    /// Scan candidates with a detection test; exits 2 when any project
    /// is vulnerable.
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        /// Candidate list from `filter` (defaults to <out>/candidates.json).
        #[arg(long)]
        candidates: Option<PathBuf>,
    },
    /// Measure how much of a target tree is cloned from a reference tree.
    Ratio {
        #[command(flatten)]
        common: CommonArgs,
        /// Tree being measured.
        #[arg(long)]
        target: PathBuf,
        /// Tree compared against.
        #[arg(long)]
        reference: PathBuf,
    },
    /// Package annotated vulnerable/fix fragments into a detection test.
    BuildTest {
        #[command(flatten)]
        common: CommonArgs,
        /// Annotation file with raw fragments (JSON).
        #[arg(long)]
        annotations: PathBuf,
    },
}

fn build_config(config_path: Option<&PathBuf>, common: &CommonArgs) -> anyhow::Result<ScanConfig> {
    let mut config = match config_path {
        Some(path) => ScanConfig::from_toml_file(path)
            .with_context(|| format!("loading config {}", path.display()))?,
        None => ScanConfig::default(),
    };
    if let Some(v) = &common.cve {
        config.cve_descriptor_path = v.clone();
    }
    if let Some(v) = &common.manifest {
        config.manifest_path = v.clone();
    }
    if let Some(v) = &common.issues {
        config.issue_export_path = v.clone();
    }
    if let Some(v) = &common.repo {
        config.parent_repo_path = v.clone();
    }
    if let Some(v) = &common.test {
        config.detection_test_path = Some(v.clone());
    }
    if let Some(v) = &common.out {
        config.output_dir = v.clone();
    }
    if let Some(v) = common.jobs {
        anyhow::ensure!(v >= 1, "--jobs must be at least 1");
        config.parallelism = v;
    }
    if let Some(v) = &common.language {
        config.language_filter = Some(v.clone());
    }
    if let Some(v) = common.min_block {
        config.min_block = v;
    }
    if let Some(v) = &common.stopwords {
        config.stopwords_path = Some(v.clone());
    }
    Ok(config)
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();

    match &cli.command {
        Command::Szz { common, top_k } => {
            let mut config = build_config(cli.config.as_ref(), common)?;
            config.top_k_keywords = *top_k;
            let window = pipeline::run_szz(&config)?;
            println!("cve:            {}", window.cve_id);
            println!("pattern:        {}", window.pattern);
            println!(
                "fix commits:    {}",
                window
                    .window
                    .fix_commits
                    .iter()
                    .map(|c| c.hash[..12.min(c.hash.len())].to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!(
                "intro commits:  {}",
                window
                    .window
                    .intro_commits
                    .iter()
                    .map(|c| c.hash[..12.min(c.hash.len())].to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!(
                "window:         [{}, {}]",
                window.window.intro_min, window.window.fix_max
            );
            for warning in &window.warnings {
                eprintln!("warning: {warning}");
            }
            println!("saved {}", config.window_path().display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Filter { common, window } => {
            let config = build_config(cli.config.as_ref(), common)?;
            let list = pipeline::run_filter(&config, window.as_deref())?;
            for warning in &list.manifest_warnings {
                eprintln!("warning: {warning}");
            }
            for decision in &list.decisions {
                println!(
                    "{:<12} {:<24} {}",
                    format!("{:?}", decision.status).to_uppercase(),
                    decision.name,
                    decision.reason
                );
            }
            let included = list
                .decisions
                .iter()
                .filter(|d| d.status == CandidateStatus::Included)
                .count();
            println!(
                "{included} of {} projects remain after filtering",
                list.decisions.len()
            );
            println!("saved {}", config.candidates_path().display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { common, candidates } => {
            let config = build_config(cli.config.as_ref(), common)?;
            let outcome = pipeline::run_scan(&config, candidates.as_deref())?;
            print!("{}", emit_summary(&outcome.report));
            println!("saved {}", outcome.xml_path.display());
            println!("saved {}", outcome.json_path.display());
            println!("saved {}", outcome.summary_path.display());
            Ok(ExitCode::from(exit_code(&outcome.report) as u8))
        }
        Command::Ratio {
            common,
            target,
            reference,
        } => {
            let config = build_config(cli.config.as_ref(), common)?;
            let result = pipeline::run_ratio(&config, target, reference, config.min_block)?;
            println!(
                "cloned {} of {} normalized lines (min block {}): ratio {:.4}",
                result.cloned_lines,
                result.total_lines,
                result.min_block,
                result.ratio()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::BuildTest {
            common,
            annotations,
        } => {
            let config = build_config(cli.config.as_ref(), common)?;
            let (test, path) = pipeline::run_build_test(&config, annotations)?;
            println!(
                "packaged {} vulnerable and {} fix snippet(s); thresholds {:?}",
                test.vulnerable_snippets.len(),
                test.fix_snippets.len(),
                test.thresholds()
            );
            println!("saved {}", path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
