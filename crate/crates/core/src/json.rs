//! JSON interchange for hypergraphs and permissible walk graphs.
//!
//! Hypergraph documents look like
//! `{"vertices":[{"id","attrs"}],"edges":[{"id","members","attrs"}],
//! "incidences":[{"vertex","edge","attrs"}]}`; graph documents mirror that
//! shape with `nodes` and `arcs` (`{"from","to","overlap"}`). Attribute
//! values use the tagged encoding of [`crate::value::AttributeValue`].

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{AttributedHypergraph, EdgeId, HypergraphBuilder};
use crate::linegraph::{LineGraphNode, PermissibleWalkGraph};
use crate::scalar::TimeScalar;
use crate::value::AttrMap;

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct HypergraphDoc<T> {
    vertices: Vec<VertexDoc<T>>,
    edges: Vec<EdgeDoc<T>>,
    #[serde(default = "Vec::new", skip_serializing_if = "Vec::is_empty")]
    incidences: Vec<IncidenceDoc<T>>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct VertexDoc<T> {
    id: String,
    #[serde(default = "AttrMap::new", skip_serializing_if = "AttrMap::is_empty")]
    attrs: AttrMap<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct EdgeDoc<T> {
    id: String,
    members: Vec<String>,
    #[serde(default = "AttrMap::new", skip_serializing_if = "AttrMap::is_empty")]
    attrs: AttrMap<T>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct IncidenceDoc<T> {
    vertex: String,
    edge: String,
    attrs: AttrMap<T>,
}

/// Serializes a hypergraph to pretty-printed JSON.
pub fn hypergraph_to_json<T: TimeScalar + Serialize>(h: &AttributedHypergraph<T>) -> String {
    let doc = HypergraphDoc {
        vertices: h
            .vertex_ids()
            .map(|v| VertexDoc {
                id: h.vertex_name(v).to_string(),
                attrs: h.vertex_attrs(v).clone(),
            })
            .collect(),
        edges: h
            .edge_ids()
            .map(|e| EdgeDoc {
                id: h.edge_name(e).to_string(),
                members: h
                    .members(e)
                    .iter()
                    .map(|v| h.vertex_name(*v).to_string())
                    .collect(),
                attrs: h.edge_attrs(e).clone(),
            })
            .collect(),
        incidences: h
            .incidences()
            .filter_map(|(v, e)| {
                h.incidence_attrs(v, e).map(|attrs| IncidenceDoc {
                    vertex: h.vertex_name(v).to_string(),
                    edge: h.edge_name(e).to_string(),
                    attrs: attrs.clone(),
                })
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("hypergraph serializes")
}

/// Parses and validates a hypergraph from JSON. Structural problems
/// (unknown members, non-incidence attributes, duplicates) surface as the
/// corresponding build errors.
pub fn hypergraph_from_json<T>(text: &str) -> Result<AttributedHypergraph<T>>
where
    T: TimeScalar + DeserializeOwned,
{
    let doc: HypergraphDoc<T> = serde_json::from_str(text)?;
    let mut b = HypergraphBuilder::new();
    for v in &doc.vertices {
        b = b.vertex(&v.id);
        for (attr, value) in &v.attrs {
            b = b.vertex_attr(&v.id, attr, value.clone());
        }
    }
    for e in &doc.edges {
        b = b.edge(&e.id, e.members.iter().map(String::as_str));
        for (attr, value) in &e.attrs {
            b = b.edge_attr(&e.id, attr, value.clone());
        }
    }
    for inc in &doc.incidences {
        for (attr, value) in &inc.attrs {
            b = b.incidence_attr(&inc.vertex, &inc.edge, attr, value.clone());
        }
    }
    b.build()
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct GraphDoc<T> {
    s: usize,
    nodes: Vec<NodeDoc<T>>,
    arcs: Vec<ArcDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
struct NodeDoc<T> {
    id: String,
    #[serde(default = "AttrMap::new", skip_serializing_if = "AttrMap::is_empty")]
    attrs: AttrMap<T>,
}

#[derive(Serialize, Deserialize)]
struct ArcDoc {
    from: String,
    to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    overlap: Option<usize>,
}

/// Serializes a permissible walk graph to pretty-printed JSON.
pub fn graph_to_json<T: TimeScalar + Serialize>(p: &PermissibleWalkGraph<T>) -> String {
    let doc = GraphDoc {
        s: p.s(),
        nodes: p
            .node_ids()
            .map(|id| {
                let node = p.node(id).expect("iterating own nodes");
                NodeDoc {
                    id: node.name.clone(),
                    attrs: node.attrs.clone(),
                }
            })
            .collect(),
        arcs: p
            .arcs()
            .iter()
            .map(|(a, b)| ArcDoc {
                from: p.node(*a).expect("arc endpoints are nodes").name.clone(),
                to: p.node(*b).expect("arc endpoints are nodes").name.clone(),
                overlap: p.zeta(*a, *b),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

/// Parses a permissible walk graph from JSON. Node ids are re-interned
/// densely in listing order; arcs must reference listed nodes.
pub fn graph_from_json<T>(text: &str) -> Result<PermissibleWalkGraph<T>>
where
    T: TimeScalar + DeserializeOwned,
{
    let doc: GraphDoc<T> = serde_json::from_str(text)?;

    let mut nodes = BTreeMap::new();
    let mut index = BTreeMap::new();
    for (i, node) in doc.nodes.into_iter().enumerate() {
        if index.insert(node.id.clone(), EdgeId(i)).is_some() {
            return Err(Error::DuplicateEdge(node.id));
        }
        nodes.insert(
            EdgeId(i),
            LineGraphNode {
                name: node.id,
                attrs: node.attrs,
            },
        );
    }

    let mut arcs = BTreeSet::new();
    let mut overlaps = BTreeMap::new();
    for arc in &doc.arcs {
        let from = *index
            .get(&arc.from)
            .ok_or_else(|| Error::UnknownNode(arc.from.clone()))?;
        let to = *index
            .get(&arc.to)
            .ok_or_else(|| Error::UnknownNode(arc.to.clone()))?;
        arcs.insert((from, to));
        if let Some(overlap) = arc.overlap {
            let key = if from <= to { (from, to) } else { (to, from) };
            overlaps.insert(key, overlap);
        }
    }

    Ok(PermissibleWalkGraph {
        s: doc.s,
        nodes,
        arcs,
        overlaps,
    })
}
