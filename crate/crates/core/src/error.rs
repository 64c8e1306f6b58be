use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Parse` covers malformed textual input, `Usage` covers arguments outside
/// an operation's documented domain, and `Domain` covers inputs that are
/// syntactically fine but mathematically inadmissible (e.g. asking for a
/// quotient over an empty fiber).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
