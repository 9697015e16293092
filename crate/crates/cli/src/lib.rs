//! Command layer of the `lcs` workbench: job specs, the five commands,
//! JSON/CSV reports and the dimension-table cache.

pub mod cache;
pub mod commands;
pub mod job;
pub mod report;

use std::time::Instant;

use lcs_core::LcsError;
use serde_json::json;

pub use job::{Command, Format, JobSpec};
pub use report::{Manifest, Report, Row, Value};

#[derive(Debug, thiserror::Error)]
pub enum WorkbenchError {
    #[error("invalid job: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] LcsError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache: {0}")]
    Cache(String),
}

impl WorkbenchError {
    fn kind(&self) -> &'static str {
        match self {
            WorkbenchError::Invalid(_) => "invalid",
            WorkbenchError::Core(LcsError::BudgetExceeded { .. }) => "budget_exceeded",
            WorkbenchError::Core(LcsError::DepthExceeded { .. }) => "depth_exceeded",
            WorkbenchError::Core(_) => "core",
            WorkbenchError::Io(_) => "io",
            WorkbenchError::Cache(_) => "cache",
        }
    }

    /// Structured record printed in place of a report.
    pub fn to_record(&self) -> serde_json::Value {
        let mut rec = json!({ "error": { "kind": self.kind(), "message": self.to_string() } });
        if let WorkbenchError::Core(LcsError::BudgetExceeded {
            degree,
            dim,
            budget,
        }) = self
        {
            rec["error"]["degree"] = json!(degree);
            rec["error"]["dim"] = json!(dim);
            rec["error"]["budget"] = json!(budget);
        }
        rec
    }
}

/// Runs one job and assembles its report.
pub fn run(job: &JobSpec) -> Result<Report, WorkbenchError> {
    let start = Instant::now();
    let outcome = match job.command {
        Command::Dims => commands::run_dims(job)?,
        Command::Series => commands::run_series(job)?,
        Command::Verify => commands::run_verify(job)?,
        Command::Schur => commands::run_schur(job)?,
        Command::Conjecture => commands::run_conjecture(job)?,
    };
    Ok(Report {
        manifest: Manifest {
            job: job.clone(),
            engine_version: lcs_core::VERSION.into(),
            wall_time_seconds: start.elapsed().as_secs_f64(),
            digest: report::digest(&outcome.rows),
            cache_hit: outcome.cache_hit,
        },
        rows: outcome.rows,
        ok: outcome.ok,
    })
}
