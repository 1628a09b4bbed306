use std::path::PathBuf;

use delcode_core::ErrorClass;

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// IO failures and broken internal invariants.
    Failure = 1,
    Usage = 2,
    Decode = 3,
    ResourceLimit = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    /// The more serious of two statuses.
    pub fn worst(self, other: Exit) -> Exit {
        fn rank(e: Exit) -> u8 {
            match e {
                Exit::Ok => 0,
                Exit::Decode => 1,
                Exit::ResourceLimit => 2,
                Exit::Usage => 3,
                Exit::Failure => 4,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] delcode_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) => Exit::Usage,
            CliError::Core(e) => exit_for(e),
            CliError::Io { .. } | CliError::Json(_) => Exit::Failure,
        }
    }
}

pub fn exit_for(e: &delcode_core::Error) -> Exit {
    match e.class() {
        ErrorClass::InvalidArgument => Exit::Usage,
        ErrorClass::CorruptInput => Exit::Decode,
        ErrorClass::ResourceLimit => Exit::ResourceLimit,
        ErrorClass::InternalInvariant => Exit::Failure,
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
