use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },

    #[error("{what}: search budget of {limit} nodes exhausted{}",
        best_known.map(|b| format!(" (best upper bound so far: {b})")).unwrap_or_default())]
    ResourceLimit { what: &'static str, limit: u64, best_known: Option<u64> },

    #[error("instance too large: n = {n} exceeds the configured limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid contraction sequence at step {step}: {reason}")]
    InvalidSequence { step: usize, reason: String },

    #[error("unknown node id {0}")]
    UnknownNode(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not a cograph")]
    NotACograph,

    #[error("signing covers {got} edges but the graph has {expected}")]
    SigningMismatch { got: usize, expected: usize },

    #[error("size guard exceeded: lift would have {vertices} vertices (guard {guard})")]
    SizeGuard { vertices: u128, guard: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
