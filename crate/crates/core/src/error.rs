use thiserror::Error;

use crate::graph::EdgeRef;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("no vertex {0}")]
    NoSuchVertex(usize),
    #[error("no edge {0}")]
    NoSuchEdge(EdgeRef),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {n} vertices; this operation supports at most {max}")]
    TooLarge { n: usize, max: usize },
    #[error("bad parameters for {family}: {constraint}")]
    BadParameters { family: String, constraint: String },
    #[error("vertex set is not in general position")]
    NotGeneralPosition,
    #[error("no connected sample after {0} attempts")]
    GaveUp(usize),
    #[error("invalid edge-list JSON: {0}")]
    EdgeListJson(String),
    #[error("invalid sweep manifest: {0}")]
    Manifest(String),
    #[error("write failed: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
