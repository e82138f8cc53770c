//! Library side of the `pct` binary: config parsing and the three commands.

pub mod config;
pub mod discrepancy;
pub mod error;
pub mod output;
pub mod system;
pub mod transform;
pub mod verify;

pub use config::RunConfig;
pub use error::CliError;

/// Version tag carried by every JSON document the tool writes.
pub const SCHEMA_VERSION: u32 = 1;
