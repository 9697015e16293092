pub mod algebra;
pub mod error;
pub mod forms;
pub mod lcs;
pub mod linalg;
pub mod properties;
pub mod schur;
pub mod series;

pub use error::{LcsError, Result};

/// Engine version recorded in result manifests and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
