use thiserror::Error;

use crate::set::ElementSet;

/// Errors raised by the library.
///
/// Variants fall in three groups: invalid input (bad parameters, malformed
/// files), oracle failures (a query the coloring cannot answer), and
/// contract violations (a total search problem came back empty, which only
/// happens when an input broke its preconditions or a solver is buggy).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid element set: {0}")]
    InvalidSet(String),

    #[error("set {set} has {got} elements over [{ground}], expected {expected} elements over [{expected_ground}]")]
    SizeMismatch { set: String, got: usize, ground: usize, expected: usize, expected_ground: usize },

    #[error("{0} is not a vertex of the graph")]
    NotAVertex(ElementSet),

    #[error("{count} vertices exceed the cap of {cap}")]
    CapExceeded { count: String, cap: usize },

    #[error("coloring has no entry for vertex {0}")]
    MissingVertex(ElementSet),

    #[error("color {color} is outside the palette [1, {palette}]")]
    OutOfPalette { color: usize, palette: usize },

    #[error("query aborted by monitor")]
    Aborted,

    #[error("unknown coloring rule {0:?}")]
    UnknownRule(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no solution found: {0}")]
    NoSolution(String),

    #[error("sub-solver returned an invalid edge: {0}")]
    UntrustedSubsolver(String),

    #[error("insufficient slack: potential {phi} is below k = {k}")]
    InsufficientSlack { phi: String, k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that certify a broken input contract or solver
    /// rather than malformed input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(self, Error::NoSolution(_) | Error::UntrustedSubsolver(_) | Error::Precondition(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
