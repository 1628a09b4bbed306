//! The structured output document.
//!
//! Every invocation with `--format structured` prints exactly one JSON object:
//!
//! ```json
//! {"version": 1, "command": "decode", "params": {...}, "results": [...], "status": "ok"}
//! ```
//!
//! `results` holds one entry per input line for `encode`/`decode`, one per
//! codeword for `enumerate`, and one per checked instance for `analyze`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Exit;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    /// At least one line failed to encode or decode.
    Failed,
    /// A time budget ran out; results hold the best partial answer.
    Timeout,
    ResourceLimit,
}

impl Status {
    pub fn exit(self) -> Exit {
        match self {
            Status::Ok => Exit::Ok,
            Status::Failed => Exit::Decode,
            Status::Timeout | Status::ResourceLimit => Exit::ResourceLimit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub command: String,
    pub params: Value,
    pub results: Vec<Value>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, params: Value) -> Self {
        Report { version: REPORT_VERSION, command: command.to_string(), params, results: Vec::new(), status: Status::Ok }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

/// A finished command: the report plus its plain-text rendering.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub report: Report,
    /// Plain-format stdout, one entry per line.
    pub plain: Vec<String>,
    /// Per-line problems, destined for stderr.
    pub diagnostics: Vec<String>,
    /// Overrides the exit status implied by `report.status`.
    pub exit: Option<Exit>,
}

impl Rendered {
    pub fn new(report: Report) -> Self {
        Rendered { report, plain: Vec::new(), diagnostics: Vec::new(), exit: None }
    }

    pub fn exit(&self) -> Exit {
        self.exit.unwrap_or_else(|| self.report.status.exit())
    }
}
