//! Core pipeline for token-level vulnerability detection in Python source.
//!
//! The crate is `no_std` + `alloc`: everything in here is pure computation
//! over in-memory data. File formats, the CLI, and network access live in the
//! companion `vudetect` crate.
//!
//! Pipeline stages, in data-flow order:
//!
//! 1. [`lexer`] — comment stripping and delimiter-driven tokenization with
//!    exact character spans.
//! 2. [`mining`] — commit records, quality filters, dedup, and unified-diff
//!    hunk parsing.
//! 3. [`label`] — sliding-window snippet extraction and vulnerable/clean
//!    labeling from commit diffs.
//! 4. [`embedding`] — skip-gram negative-sampling token vectors.
//! 5. [`nn`] — LSTM + dense-sigmoid sequence classifier with soft-F1 loss,
//!    trained with manual backpropagation through time.
//! 6. [`eval`] — confusion counts, precision/recall/F1/accuracy, and
//!    hyperparameter sweep evaluation.
//! 7. [`scan`] — applying a trained model to arbitrary files and producing
//!    span-level findings with confidence buckets.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod embedding;
pub mod eval;
pub mod label;
pub mod lexer;
pub mod mat;
mod mathutil;
pub mod mining;
pub mod nn;
pub mod rng;
pub mod scan;
