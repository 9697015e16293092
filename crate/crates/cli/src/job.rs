use std::path::PathBuf;

use lcs_core::algebra::GeneratorSet;
use lcs_core::lcs::DEFAULT_BUDGET;
use lcs_core::properties::DEFAULT_SAMPLES;
use serde::{Deserialize, Serialize};

use crate::WorkbenchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Dims,
    Series,
    Verify,
    Schur,
    Conjecture,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// One workbench invocation. Everything that influences the emitted rows
/// lives here, so the manifest echo is enough to reproduce a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    /// Sub-target for `schur` (`b3`, `bk`) and `conjecture` (`rational`, `fit`, `weakbound`).
    pub target: Option<String>,
    pub m: usize,
    pub n: usize,
    pub max_degree: usize,
    pub k: Option<usize>,
    pub j: Option<usize>,
    pub checks: Vec<String>,
    pub format: Format,
    pub seed: u64,
    pub samples: usize,
    pub budget: usize,
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub no_cache: bool,
    /// Recompute even on a cache hit and fail if the two disagree.
    #[serde(skip)]
    pub check_cache: bool,
}

impl JobSpec {
    pub fn new(command: Command, m: usize, n: usize, max_degree: usize) -> Self {
        Self {
            command,
            target: None,
            m,
            n,
            max_degree,
            k: None,
            j: None,
            checks: Vec::new(),
            format: Format::Json,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            budget: DEFAULT_BUDGET,
            cache_dir: None,
            no_cache: false,
            check_cache: false,
        }
    }

    pub fn validate(&self) -> Result<GeneratorSet, WorkbenchError> {
        if self.max_degree < 1 {
            return Err(WorkbenchError::Invalid(
                "--max-degree must be at least 1".into(),
            ));
        }
        if self.m + self.n > 64 {
            return Err(WorkbenchError::Invalid(
                "at most 64 generators are supported".into(),
            ));
        }
        Ok(GeneratorSet::new(self.m, self.n)?)
    }

    /// `--k` or the command's default.
    pub fn k_or(&self, default: usize) -> usize {
        self.k.unwrap_or(default)
    }

    pub fn target_or<'a>(&'a self, default: &'a str) -> &'a str {
        self.target.as_deref().unwrap_or(default)
    }
}
