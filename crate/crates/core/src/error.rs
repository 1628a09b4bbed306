use core::fmt;

/// Errors raised by codec, ball and analysis operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word had the wrong length for the operation.
    LengthMismatch { expected: usize, found: usize },
    /// A symbol was outside `[0, q)`.
    SymbolOutOfRange { symbol: u32, q: u32 },
    /// A parameter was outside its domain.
    InvalidArgument(&'static str),
    /// The received word is not consistent with the error model the decoder handles.
    CorruptInput(&'static str),
    /// The request would enumerate more than the configured limit allows.
    ResourceLimit { requested: usize, limit: usize },
    /// An internal consistency check failed. Indicates a bug, never bad input.
    InternalInvariant(&'static str),
}

/// Coarse classification of [`Error`], used for exit statuses and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    InvalidArgument,
    CorruptInput,
    ResourceLimit,
    InternalInvariant,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::LengthMismatch { .. }
            | Error::SymbolOutOfRange { .. }
            | Error::InvalidArgument(_) => ErrorClass::InvalidArgument,
            Error::CorruptInput(_) => ErrorClass::CorruptInput,
            Error::ResourceLimit { .. } => ErrorClass::ResourceLimit,
            Error::InternalInvariant(_) => ErrorClass::InternalInvariant,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, found } => {
                write!(f, "invalid argument: expected length {expected}, found {found}")
            }
            Error::SymbolOutOfRange { symbol, q } => {
                write!(f, "invalid argument: symbol {symbol} outside alphabet [0, {q})")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::CorruptInput(msg) => write!(f, "corrupt input: {msg}"),
            Error::ResourceLimit { requested, limit } => write!(
                f,
                "resource limit: length {requested} exceeds enumeration limit {limit}"
            ),
            Error::InternalInvariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
