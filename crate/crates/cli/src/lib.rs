//! Command dispatch, claim suites and report generation for the `derham`
//! binary; exposed as a library so integration tests drive the exact same
//! code path as `main`.

pub mod claims;
pub mod commands;
pub mod report;

pub use commands::{run, Outcome};
