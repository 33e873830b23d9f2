//! Library surface of the verification CLI: suite runners and report types,
//! exposed so integration tests can drive them directly.

pub mod report;
pub mod suites;
