//! Command-line front end and file formats for `delcode-core`.
//!
//! Words are read and written one per line in the core text format: `0`/`1`
//! for binary words, digits for alphabets up to 10 and comma-separated
//! values above that. `--format structured` replaces the plain output with a
//! single JSON [`report::Report`].
//!
//! Exit statuses: 0 success, 1 IO or internal failure, 2 usage error, 3 a
//! word failed to encode or decode, 4 a resource limit or time budget was hit.

pub mod cli;
mod commands;
pub mod error;
pub mod io;
pub mod report;

pub use cli::{Cli, DEFAULT_BUDGET_SECONDS, DEFAULT_SEED};
pub use commands::run;
pub use error::{CliError, Exit};
pub use report::{Rendered, Report, Status, REPORT_VERSION};
