use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("distribution has {got} entries but graph has {expected} vertices")]
    DistributionLength { expected: usize, got: usize },

    #[error("{{{from}, {to}}} is not an edge")]
    NotAnEdge { from: usize, to: usize },

    #[error("vertex {vertex} holds {have} pebble(s), a move needs at least 2")]
    InsufficientPebbles { vertex: usize, have: u32 },

    #[error("pebbling number undefined: graph is disconnected (infinite)")]
    Disconnected,

    #[error("distance {0} too large for exact dyadic weights")]
    TooDeep(usize),

    #[error("{what} = {value} exceeds the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("vertex {0} is not a zero of the distribution")]
    NotAZero(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
