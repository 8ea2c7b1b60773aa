//! The book under `book/` includes runnable Rust snippets. mdBook does
//! not execute them against the real library, so this crate includes
//! every chapter as module documentation and lets `cargo test --doc`
//! run the snippets. A broken example fails the build instead of
//! rotting in the rendered book.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/pipeline.md")]
pub mod pipeline {}

#[doc = include_str!("../../../book/src/normalization.md")]
pub mod normalization {}

#[doc = include_str!("../../../book/src/matching.md")]
pub mod matching {}

#[doc = include_str!("../../../book/src/ratio.md")]
pub mod ratio {}

#[doc = include_str!("../../../book/src/history.md")]
pub mod history {}

#[doc = include_str!("../../../book/src/window.md")]
pub mod window {}

#[doc = include_str!("../../../book/src/detection-tests.md")]
pub mod detection_tests {}

#[doc = include_str!("../../../book/src/reports.md")]
pub mod reports {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
