//! Front-end plumbing shared by the `cutlattice` binary: configuration, the
//! patch cache, graph generation by name and the reproduction report.

pub mod cache;
pub mod config;
pub mod generate;
pub mod report;

use thiserror::Error;

pub use cache::{cache_key, Cache, CACHE_ENV};
pub use config::{Budget, Config};
pub use generate::{generate, GenOptions, Graph, GENERATOR_VERSION};
pub use report::{run_report, EntryStatus, Report, ReportEntry, ReportOptions, REPORT_SCHEMA};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const VIOLATION: i32 = 3;
    /// A report entry failed.
    pub const REPORT_FAIL: i32 = 4;
    /// No report entry failed but some were skipped.
    pub const REPORT_SKIPPED: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Symbol(#[from] crate::schlafli::SchlafliError),
    #[error(transparent)]
    Skeleton(#[from] crate::skeletons::SkeletonError),
    #[error(transparent)]
    Metrics(#[from] crate::metrics::MetricsError),
    #[error(transparent)]
    Hypermetric(#[from] crate::hypermetrics::HypermetricError),
    #[error(transparent)]
    Embedding(#[from] crate::embeddings::EmbeddingError),
    #[error(transparent)]
    Riemann(#[from] crate::riemann::RiemannError),
    #[error(transparent)]
    Atlas(#[from] crate::atlas::AtlasError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Symbol(_) => exit::USAGE,
            _ => exit::INTERNAL,
        }
    }
}
