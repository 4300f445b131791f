use thiserror::Error;

/// Errors raised by the engine.
///
/// `Usage` is a caller mistake (bad bounds, ill-defined composition).
/// `Consistency` means an internal identity or structural assertion failed,
/// which always indicates a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(format!($($arg)*)) };
}

macro_rules! consistency {
    ($($arg:tt)*) => { $crate::error::Error::Consistency(format!($($arg)*)) };
}

pub(crate) use consistency;
pub(crate) use usage;
