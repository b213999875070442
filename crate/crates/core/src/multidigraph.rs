//! Dynamic multi-digraphs as 2-uniform attributed hypergraphs, and the
//! timestamp-respecting chain graph recovered through the permissible-walk
//! pipeline.

use std::io;

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::attributes::{NodePredicate, Predicate};
use crate::error::{Error, Result};
use crate::hypergraph::{AttributedHypergraph, HypergraphBuilder};
use crate::linegraph::{
    attributed_s_line_graph, intersect, permissible_walk_graph, PermissibleWalkGraph,
};
use crate::scalar::TimeScalar;
use crate::value::AttributeValue;

/// A directed arc with a timestamp, endpoints as indices into the owning
/// graph's node table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimedArc<T> {
    pub source: usize,
    pub target: usize,
    pub timestamp: T,
}

/// Directed multigraph with timestamped arcs. Arcs may repeat; self-loops
/// are representable here but rejected by the hypergraph reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicMultiDigraph<T> {
    nodes: Vec<String>,
    arcs: Vec<TimedArc<T>>,
}

impl<T: TimeScalar> DynamicMultiDigraph<T> {
    /// Builds from `(source, target, timestamp)` triples, interning node
    /// symbols in first-seen order. Timestamps must be finite.
    pub fn from_arcs<I, S>(arcs: I) -> Self
    where
        I: IntoIterator<Item = (S, S, T)>,
        S: Into<String>,
    {
        let mut nodes: Vec<String> = Vec::new();
        let intern = |nodes: &mut Vec<String>, name: String| -> usize {
            match nodes.iter().position(|n| *n == name) {
                Some(i) => i,
                None => {
                    nodes.push(name);
                    nodes.len() - 1
                }
            }
        };
        let arcs = arcs
            .into_iter()
            .map(|(s, t, time)| {
                assert!(time.is_finite(), "arc timestamps must be finite");
                let source = intern(&mut nodes, s.into());
                let target = intern(&mut nodes, t.into());
                TimedArc {
                    source,
                    target,
                    timestamp: time,
                }
            })
            .collect();
        DynamicMultiDigraph { nodes, arcs }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.nodes[i]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[TimedArc<T>] {
        &self.arcs
    }

    /// Reduces to the 2-uniform attributed hypergraph: one hyperedge
    /// `arc{i}` per arc (in arc order, so `EdgeId(i)` is arc `i`) with
    /// member set `{source, target}` and edge attributes `"direction"` and
    /// `"time"`.
    pub fn to_hypergraph(&self) -> Result<AttributedHypergraph<T>> {
        let mut b = HypergraphBuilder::new().vertices(self.nodes.clone());
        for (i, arc) in self.arcs.iter().enumerate() {
            if arc.source == arc.target {
                return Err(Error::SelfLoopArc {
                    node: self.nodes[arc.source].clone(),
                });
            }
            let name = format!("arc{i}");
            b = b
                .edge(
                    &name,
                    [self.node_name(arc.source), self.node_name(arc.target)],
                )
                .edge_attr(
                    &name,
                    "direction",
                    AttributeValue::direction(
                        self.node_name(arc.source),
                        self.node_name(arc.target),
                    ),
                )
                .edge_attr(&name, "time", AttributeValue::Timestamp(arc.timestamp));
        }
        b.build()
    }

    /// The chain graph on arcs: `(e_i, e_j)` iff `target(e_i) =
    /// source(e_j)` and `t(e_i) <= t(e_j)`.
    ///
    /// Built through the generic pipeline as the intersection of the
    /// direction-chaining and timestamp-ordered permissible walk graphs
    /// over the 1-line graph of the 2-uniform reduction.
    pub fn chain_permissible_graph(&self) -> Result<PermissibleWalkGraph<T>> {
        let h = self.to_hypergraph()?;
        let lg = attributed_s_line_graph(&h, 1, ["direction", "time"])?;
        let p_dir = permissible_walk_graph(
            &lg,
            &NodePredicate::on("direction", Predicate::DirectionChains),
        )?;
        let p_time =
            permissible_walk_graph(&lg, &NodePredicate::on("time", Predicate::TimestampLessEq))?;
        intersect(&p_dir, &p_time)
    }
}

#[derive(Debug, Deserialize)]
struct ArcRow<T> {
    source: String,
    target: String,
    timestamp: T,
}

/// Reads arcs CSV (`source,target,timestamp` header) into a dynamic
/// multi-digraph. Row errors carry 1-based line numbers.
pub fn load_arcs<T, R>(reader: R) -> Result<DynamicMultiDigraph<T>>
where
    T: TimeScalar + DeserializeOwned,
    R: io::Read,
{
    let mut rdr = csv::Reader::from_reader(reader);
    let headers = rdr.headers().map_err(Error::Csv)?.clone();
    let mut triples = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(Error::Csv)?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row: ArcRow<T> =
            record
                .deserialize(Some(&headers))
                .map_err(|e| Error::MalformedRow {
                    line,
                    reason: e.to_string(),
                })?;
        if !row.timestamp.is_finite() {
            return Err(Error::MalformedRow {
                line,
                reason: "non-finite timestamp".to_string(),
            });
        }
        triples.push((row.source, row.target, row.timestamp));
    }
    Ok(DynamicMultiDigraph::from_arcs(triples))
}
