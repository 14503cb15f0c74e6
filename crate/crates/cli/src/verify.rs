//! Batch verification of a directory of input files.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analyze::{analyze_path, AnalyzeOptions, Status};
use crate::{CliError, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotLinear,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub file: String,
    pub outcome: Outcome,
    pub messages: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub schema: u32,
    pub entries: Vec<VerifyEntry>,
    pub passed: usize,
    pub failed: usize,
    pub not_linear: usize,
    pub errors: usize,
}

impl VerifySummary {
    /// Not-linear entries are findings, not failures.
    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

/// Analyzes every regular file in `dir` (hidden files skipped) and tallies the outcomes.
pub fn verify_dir(dir: &Path, opts: &AnalyzeOptions) -> Result<VerifySummary, CliError> {
    let io = |source| CliError::Io {
        path: dir.to_owned(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let entry = entry.map_err(io)?;
        let name = entry.file_name().to_string_lossy().into_owned();
        if entry.file_type().map_err(io)?.is_file() && !name.starts_with('.') {
            files.push(name);
        }
    }
    files.sort();

    let entries: Vec<VerifyEntry> = files
        .par_iter()
        .map(|name| match analyze_path(&dir.join(name), opts) {
            Ok(report) => VerifyEntry {
                file: name.clone(),
                outcome: match report.status {
                    Status::Pass => Outcome::Pass,
                    Status::Fail => Outcome::Fail,
                    Status::NotLinear => Outcome::NotLinear,
                },
                messages: report.failures,
            },
            Err(e) => VerifyEntry {
                file: name.clone(),
                outcome: Outcome::Error,
                messages: vec![e.to_string()],
            },
        })
        .collect();

    let count = |o: Outcome| entries.iter().filter(|e| e.outcome == o).count();
    Ok(VerifySummary {
        schema: SCHEMA_VERSION,
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        not_linear: count(Outcome::NotLinear),
        errors: count(Outcome::Error),
        entries,
    })
}
