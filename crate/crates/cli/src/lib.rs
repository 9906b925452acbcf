//! Problem files, JSON reports and verification suites behind the `eqidx`
//! binary.

pub mod catalog;
pub mod error;
pub mod generator;
pub mod problem;
pub mod report;
pub mod verify;

pub use error::CliError;
pub use problem::{Problem, ProblemSpec};
pub use report::{compute_report, IndexReportJson, Which};
pub use verify::{run_suite, Suite, VerificationReport, VerifyOptions};
