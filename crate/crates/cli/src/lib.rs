//! Library side of the `edge-ideal` command: report assembly, corpus
//! verification and graph generation, kept out of `main.rs` so the acceptance
//! tests can drive them directly.

pub mod analyze;
pub mod generate;
pub mod text;
pub mod verify;

use std::path::PathBuf;

use thiserror::Error;

pub use analyze::{analyze_path, analyze_text, AnalysisReport, AnalyzeOptions, OracleMode, Status};
pub use verify::{verify_dir, VerifySummary};

pub const SCHEMA_VERSION: u32 = 1;

pub mod exit {
    pub const PASS: i32 = 0;
    pub const VERIFICATION_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const RESOURCE_CAP: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: edge_ideal::Error,
    },
    #[error(transparent)]
    Core(#[from] edge_ideal::Error),
}

impl CliError {
    fn core(&self) -> Option<&edge_ideal::Error> {
        match self {
            CliError::Io { .. } => None,
            CliError::Input { source, .. } | CliError::Core(source) => Some(source),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.core() {
            Some(
                edge_ideal::Error::TooLarge { .. } | edge_ideal::Error::ComplexTooLarge { .. },
            ) => exit::RESOURCE_CAP,
            _ => exit::INPUT_ERROR,
        }
    }
}
