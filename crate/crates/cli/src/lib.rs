//! Driver for the log-form freeness tool: problem files, the check
//! pipeline, JSON and text reports and the bundled corpus.

pub mod corpus;
pub mod pipeline;
pub mod problem;
pub mod render;
pub mod report;

use std::path::Path;

pub use pipeline::{run, Options};
pub use problem::{Check, ProblemFile};
pub use report::ReportDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed input or a failed geometric hypothesis.
    #[error("input error: {0}")]
    Input(String),
    /// A certificate or cross-check failed.
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Check(_) => 2,
        }
    }
}

/// Reads a problem from a path, falling back to a corpus entry of that name.
pub fn load_problem(arg: &str) -> Result<ProblemFile, CliError> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(e) = corpus::find(arg) {
            return Ok(e.problem());
        }
    }
    ProblemFile::load(path)
}
