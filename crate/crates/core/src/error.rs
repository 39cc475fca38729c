use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::ObjectiveLiteral;

/// Syntax error in program text, with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Raised by [`crate::wfsx::wfm`] when the paraconsistent model is not an
/// interpretation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("program is contradictory: {}", Overlap(.overlap))]
pub struct Contradiction {
    /// Literals that are both true and default-false.
    pub overlap: BTreeSet<ObjectiveLiteral>,
}

struct Overlap<'a>(&'a BTreeSet<ObjectiveLiteral>);

impl fmt::Display for Overlap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Contradiction(#[from] Contradiction),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown attack kind `{0}` (expected one of u, r, a, d, sa, su)")]
    UnknownAttackKind(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
