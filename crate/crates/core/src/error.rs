use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("edge {0} is not present")]
    EdgeAbsent(Edge),

    #[error("malformed graph6 string {input:?}: {reason}")]
    Graph6 { input: String, reason: String },
    #[error("line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid family spec {spec:?}: {reason}")]
    FamilySpec { spec: String, reason: String },
    #[error("{family}: parameter out of range ({reason})")]
    FamilyRange { family: &'static str, reason: String },

    #[error("solver inconsistency: {0}")]
    Inconsistent(String),
    #[error("graph is not {0}-critical")]
    NotCritical(String),
    #[error("scope too large: {0}")]
    ScopeTooLarge(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}
