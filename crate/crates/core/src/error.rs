use thiserror::Error;

use crate::group::GroupKind;
use crate::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator symbol '{symbol}' for {group}")]
    UnknownGenerator { symbol: char, group: GroupKind },

    #[error("malformed document: {0}")]
    Malformed(#[from] serde_json::Error),

    /// A structural or semantic problem found while validating a document.
    #[error("{location}: {message}")]
    Invalid { location: String, message: String },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: GroupKind, right: GroupKind },

    #[error("{operation} is not supported on {group}")]
    UnsupportedGroup {
        operation: &'static str,
        group: GroupKind,
    },

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: String,
        cap: usize,
    },

    #[error("pattern support does not fit inside the ball of radius {radius}")]
    SupportTooLarge { radius: usize },

    #[error("pattern placement leaves the configuration domain")]
    OutsideDomain,

    #[error("local map has no row for input {input:?}")]
    MissingRow { input: Vec<Symbol> },

    #[error("alphabet mismatch: expected {expected:?}, found {found:?}")]
    AlphabetMismatch {
        expected: Vec<Symbol>,
        found: Vec<Symbol>,
    },

    #[error("symbol arithmetic overflowed while {0}")]
    Overflow(&'static str),

    #[error("no locally admissible pattern on the box of side {side}")]
    EmptyBox { side: usize },

    #[error("unknown witness '{0}'")]
    UnknownWitness(String),

    #[error("witness '{0}' requires a parameter presentation X")]
    MissingParameter(String),
}

impl Error {
    pub(crate) fn invalid(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn cap(what: &'static str, needed: impl ToString, cap: usize) -> Self {
        Error::ResourceCap {
            what,
            needed: needed.to_string(),
            cap,
        }
    }

    /// True for errors caused by a configured resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
