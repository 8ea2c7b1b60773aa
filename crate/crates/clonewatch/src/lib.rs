//! Clonewatch scans a corpus of forked projects for vulnerabilities they
//! inherited from a parent project and never patched.
//!
//! Given a disclosed vulnerability in a parent repository, the pipeline:
//!
//! 1. parses a structured vulnerability descriptor ([`cve`]),
//! 2. mines the parent's history for the fixing and introducing commits
//!    and derives the vulnerability window ([`history`]),
//! 3. filters the monitored corpus down to projects forked inside that
//!    window ([`registry`]),
//! 4. packages annotated vulnerable/fix code fragments into a detection
//!    test ([`testgen`]),
//! 5. runs exact (Type I) clone detection over each candidate tree and
//!    classifies it as vulnerable, fixed, or not affected ([`clonedetect`]),
//! 6. emits XML, JSON, and plain-text reports ([`report`]).
//!
//! The [`pipeline`] module wires the stages together; the `clonewatch`
//! binary exposes each stage as a subcommand. See the book under `book/`
//! for a guided tour.

pub mod clonedetect;
pub mod cve;
pub mod history;
pub mod pipeline;
pub mod registry;
pub mod report;
pub mod testgen;

/// Version string stamped into reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
