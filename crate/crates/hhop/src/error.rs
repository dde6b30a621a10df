//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HhopError {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// An element violates the grading bookkeeping.
    #[error("malformed element: {0}")]
    MalformedElement(String),
    /// A map sends a generator to an element of the wrong degree or level.
    #[error("malformed map: {0}")]
    MalformedMap(String),
    /// A generator occurring in an element has no image under a map.
    #[error("unbound generator: {0}")]
    UnboundGenerator(String),
    /// Two generators share a name.
    #[error("naming error: {0}")]
    Naming(String),
    /// Splice data violates the junction contract.
    #[error("malformed splice: {0}")]
    MalformedSplice(String),
    /// A defining system lacks a required entry.
    #[error("incomplete defining system: {0}")]
    IncompleteSystem(String),
    /// An enumeration or matrix would exceed a configured bound.
    #[error("resource bound exceeded: {0}")]
    Bound(String),
    /// Text input could not be parsed.
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, HhopError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(HhopError::Domain(msg.into()))
}
