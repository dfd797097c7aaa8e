use std::fmt;

use crate::trigraph::Classification;

/// Errors raised by trigraph construction, the algorithms, and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self pair ({0}, {0}) has no adjacency value")]
    SelfPair(usize),
    #[error("vertex {vertex} out of range for a trigraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is an endpoint of two semiedges")]
    SemiedgeMatching(usize),
    #[error("pair ({0}, {1}) assigned twice")]
    DuplicatePair(usize, usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("vertices must be distinct")]
    NotDistinct,
    #[error("vertices {0} and {1} are not strongly adjacent")]
    NotStronglyAdjacent(usize, usize),
    #[error("clique pair sides must be nonempty and disjoint")]
    MalformedPair,
    #[error("not a homogeneous pair of strong cliques")]
    NotHposc,
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("connected input required")]
    Disconnected,
    #[error("degenerate input ({0}); rerun with force to override")]
    Degenerate(Classification),
    #[error("degenerate structure: {0}")]
    DegenerateStructure(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error("refusing {what}: n = {n} exceeds cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("oracle invariant broken: {0}")]
    OracleInvariant(String),
    #[error("invalid thickening spec: {0}")]
    InvalidSpec(String),
    #[error("sampling budget of {0} attempts exhausted")]
    BudgetExhausted(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            message: message.to_string(),
        }
    }
}
