//! Permissible walks on attributed hypergraphs.
//!
//! A hypergraph groups vertices into overlapping sets — meetings and their
//! attendees, threads and their posters, arcs and their endpoints. Walks
//! along its hyperedges are usually modelled on the *s-line graph*, which
//! joins two hyperedges whenever they share at least `s` vertices. That
//! graph knows who overlaps with whom, but nothing about *when* or *why* a
//! step between two hyperedges would make sense.
//!
//! This crate adds that second half. Hypergraphs here carry attribute maps
//! on vertices, hyperedges, and individual incidences (time intervals,
//! symbol sets, categories, directions, …). A [`Predicate`] compares two
//! attribute values and decides whether a step from one hyperedge to
//! another is admissible; filtering the bidirected s-line graph through a
//! predicate yields the [`PermissibleWalkGraph`], the directed graph of all
//! admissible steps. Everything downstream — class-interaction counts,
//! component structure, reachability, activity traces — is ordinary graph
//! analysis on that object, provided by [`analysis`].
//!
//! ```
//! use permissible_walks::{Hypergraph, NodePredicate, Predicate, Value};
//! use permissible_walks::linegraph::{attributed_s_line_graph, permissible_walk_graph};
//!
//! let h: Hypergraph = Hypergraph::builder()
//!     .vertices(["ann", "bob", "cara"])
//!     .edge("standup", ["ann", "bob"])
//!     .edge("review", ["bob", "cara"])
//!     .edge_attr("standup", "time", Value::interval(9.0, 9.5)?)
//!     .edge_attr("review", "time", Value::interval(10.0, 11.0)?)
//!     .build()?;
//!
//! let lg = attributed_s_line_graph(&h, 1, ["time"])?;
//! let walks = permissible_walk_graph(&lg, &NodePredicate::on("time", Predicate::StrongOrder))?;
//!
//! // The standup ends before the review begins, so a walk may step from
//! // one to the other — but not back.
//! let standup = walks.node_by_name("standup").unwrap();
//! let review = walks.node_by_name("review").unwrap();
//! assert!(walks.contains_arc(standup, review));
//! assert!(!walks.contains_arc(review, standup));
//! # Ok::<(), permissible_walks::Error>(())
//! ```
//!
//! The temporal scalar is generic: every structure is parameterized over a
//! [`TimeScalar`] (any float type), and the crate root exports `f64` type
//! aliases ([`Hypergraph`], [`WalkGraph`], …) for the common case.
//!
//! Beyond the core constructions, [`ingest`] loads user/thread post tables
//! and generates synthetic ones, [`multidigraph`] reduces timestamped
//! multi-digraphs to 2-uniform hypergraphs, and [`json`] / [`dot`] handle
//! interchange and drawing.

pub mod analysis;
pub mod attributes;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod hypergraph;
pub mod ingest;
pub mod json;
pub mod linegraph;
pub mod multidigraph;
pub mod scalar;
pub mod value;

pub use attributes::{
    extend_to_incidences, marginalize_edges, marginalize_vertices, parse_node_predicate,
    parse_predicate, ExtensionSource, Marginalizer, NodePredicate, Predicate,
};
pub use error::{Error, Result};
pub use hypergraph::{AttributedHypergraph, EdgeId, HypergraphBuilder, IncidenceMatrix, VertexId};
pub use linegraph::{
    attributed_s_line_graph, attribution_graph, intersect, permissible_walk_graph, s_line_graph,
    AttributedLineGraph, AttributionGraph, LineGraphNode, PermissibleWalkGraph, SLineGraph,
};
pub use scalar::TimeScalar;
pub use value::{AttrMap, AttributeKind, AttributeValue, DirectionPair, Interval};

/// Attributed hypergraph over `f64` time.
pub type Hypergraph = AttributedHypergraph<f64>;
/// Attribute value over `f64` time.
pub type Value = AttributeValue<f64>;
/// Closed interval over `f64`.
pub type TimeInterval = Interval<f64>;
/// Attributed bidirected s-line graph over `f64` time.
pub type LineGraph = AttributedLineGraph<f64>;
/// Permissible walk graph over `f64` time.
pub type WalkGraph = PermissibleWalkGraph<f64>;
/// User/thread post table over `f64` timestamps.
pub type Posts = ingest::PostArray<f64>;
/// Timestamped multi-digraph over `f64`.
pub type MultiDigraph = multidigraph::DynamicMultiDigraph<f64>;
