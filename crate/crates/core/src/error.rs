//! Crate-wide error type.

use thiserror::Error;

use crate::value::AttributeKind;

/// Errors raised by construction, predicates, ingestion, and analytics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("edge set is empty")]
    EmptyEdgeSet,

    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),

    #[error("duplicate edge {0:?}")]
    DuplicateEdge(String),

    #[error("edge {edge:?} contains undeclared vertex {vertex:?}")]
    UnknownVertexInEdge { vertex: String, edge: String },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("unknown edge {0:?}")]
    UnknownEdge(String),

    #[error("attribute attached to ({vertex:?}, {edge:?}), which is not an incidence")]
    NonIncidenceAttribute { vertex: String, edge: String },

    #[error("invalid interval: lower bound {lo} does not precede upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("expected a {expected} value, found {found}")]
    KindMismatch {
        expected: AttributeKind,
        found: AttributeKind,
    },

    #[error("attribute {attr:?} missing on {object:?}")]
    MissingAttribute { object: String, attr: String },

    #[error("incidence ({vertex:?}, {edge:?}) is missing attribute {attr:?}")]
    MissingIncidenceAttribute {
        vertex: String,
        edge: String,
        attr: String,
    },

    #[error("arc ({from:?}, {to:?}) carries no intersection-size attribute")]
    MissingEdgeAttribute { from: String, to: String },

    #[error("graphs have different node sets")]
    NodeSetMismatch,

    #[error("node {node:?} has no class label")]
    UnlabeledNode { node: String },

    #[error("unknown node {0:?}")]
    UnknownNode(String),

    #[error("interval collection is empty")]
    EmptyCollection,

    #[error("sample {t} lies outside the support hull [{lo}, {hi}]")]
    SampleOutsideSupport { t: String, lo: String, hi: String },

    #[error("malformed row at line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },

    #[error("thread {thread:?} labeled with both {first:?} and {second:?}")]
    InconsistentClass {
        thread: String,
        first: String,
        second: String,
    },

    #[error("no posts in input")]
    EmptyData,

    #[error("arc from {node:?} to itself cannot be reduced to a two-vertex hyperedge")]
    SelfLoopArc { node: String },

    #[error("bad predicate spec {spec:?}: {reason}")]
    BadPredicateSpec { spec: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
