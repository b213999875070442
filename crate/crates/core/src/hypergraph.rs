//! The attributed hypergraph data model: incidence structure, attribute
//! maps, incidence matrix, and the dual construction.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::scalar::TimeScalar;
use crate::value::{AttrMap, AttributeValue};

/// Dense handle for a vertex. Assigned by the builder in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) usize);

/// Dense handle for a hyperedge. Distinct ids may carry equal member-sets:
/// the edge family is indexed, not a set of sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub(crate) usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Staged construction of an [`AttributedHypergraph`].
///
/// Objects are referred to by name until [`build`](Self::build), which
/// validates the whole structure and interns names to dense ids. Re-setting
/// an attribute name on the same object overwrites the earlier value.
#[derive(Debug, Clone, Default)]
pub struct HypergraphBuilder<T> {
    vertices: Vec<String>,
    edges: Vec<(String, Vec<String>)>,
    vertex_attrs: Vec<(String, String, AttributeValue<T>)>,
    edge_attrs: Vec<(String, String, AttributeValue<T>)>,
    incidence_attrs: Vec<(String, String, String, AttributeValue<T>)>,
}

impl<T: TimeScalar> HypergraphBuilder<T> {
    pub fn new() -> Self {
        Self {
            vertices: Vec::new(),
            edges: Vec::new(),
            vertex_attrs: Vec::new(),
            edge_attrs: Vec::new(),
            incidence_attrs: Vec::new(),
        }
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.vertices.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn edge<I, S>(mut self, name: impl Into<String>, members: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.edges
            .push((name.into(), members.into_iter().map(Into::into).collect()));
        self
    }

    pub fn vertex_attr(
        mut self,
        vertex: impl Into<String>,
        attr: impl Into<String>,
        value: AttributeValue<T>,
    ) -> Self {
        self.vertex_attrs.push((vertex.into(), attr.into(), value));
        self
    }

    pub fn edge_attr(
        mut self,
        edge: impl Into<String>,
        attr: impl Into<String>,
        value: AttributeValue<T>,
    ) -> Self {
        self.edge_attrs.push((edge.into(), attr.into(), value));
        self
    }

    pub fn incidence_attr(
        mut self,
        vertex: impl Into<String>,
        edge: impl Into<String>,
        attr: impl Into<String>,
        value: AttributeValue<T>,
    ) -> Self {
        self.incidence_attrs
            .push((vertex.into(), edge.into(), attr.into(), value));
        self
    }

    /// Validates and freezes the hypergraph.
    pub fn build(self) -> Result<AttributedHypergraph<T>> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if self.edges.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }

        let mut vertex_index = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if vertex_index.insert(name.clone(), VertexId(i)).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }

        let mut edge_index = HashMap::new();
        let mut members = Vec::with_capacity(self.edges.len());
        for (j, (name, member_names)) in self.edges.iter().enumerate() {
            if edge_index.insert(name.clone(), EdgeId(j)).is_some() {
                return Err(Error::DuplicateEdge(name.clone()));
            }
            let mut set = BTreeSet::new();
            for m in member_names {
                let v = vertex_index
                    .get(m)
                    .ok_or_else(|| Error::UnknownVertexInEdge {
                        vertex: m.clone(),
                        edge: name.clone(),
                    })?;
                set.insert(*v);
            }
            members.push(set);
        }

        let mut memberships = vec![BTreeSet::new(); self.vertices.len()];
        for (j, set) in members.iter().enumerate() {
            for v in set {
                memberships[v.0].insert(EdgeId(j));
            }
        }

        let mut vertex_attrs = vec![AttrMap::new(); self.vertices.len()];
        for (vertex, attr, value) in self.vertex_attrs {
            let v = vertex_index
                .get(&vertex)
                .ok_or(Error::UnknownVertex(vertex))?;
            vertex_attrs[v.0].insert(attr, value);
        }

        let mut edge_attrs = vec![AttrMap::new(); self.edges.len()];
        for (edge, attr, value) in self.edge_attrs {
            let e = edge_index.get(&edge).ok_or(Error::UnknownEdge(edge))?;
            edge_attrs[e.0].insert(attr, value);
        }

        let mut incidence_attrs: BTreeMap<(VertexId, EdgeId), AttrMap<T>> = BTreeMap::new();
        for (vertex, edge, attr, value) in self.incidence_attrs {
            let v = *vertex_index
                .get(&vertex)
                .ok_or_else(|| Error::UnknownVertex(vertex.clone()))?;
            let e = *edge_index
                .get(&edge)
                .ok_or_else(|| Error::UnknownEdge(edge.clone()))?;
            if !members[e.0].contains(&v) {
                return Err(Error::NonIncidenceAttribute { vertex, edge });
            }
            incidence_attrs
                .entry((v, e))
                .or_default()
                .insert(attr, value);
        }

        Ok(AttributedHypergraph {
            vertex_names: self.vertices,
            edge_names: self.edges.into_iter().map(|(name, _)| name).collect(),
            members,
            memberships,
            vertex_attrs,
            edge_attrs,
            incidence_attrs,
            vertex_index,
            edge_index,
        })
    }
}

/// An attributed hypergraph: vertices, an indexed family of hyperedges,
/// and attribute maps on vertices, edges, and incidences.
///
/// Immutable after construction; analytics are pure functions of it, and
/// values can be shared freely across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributedHypergraph<T> {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    /// Member set per edge, indexed by `EdgeId`.
    members: Vec<BTreeSet<VertexId>>,
    /// Incident edges per vertex, indexed by `VertexId` (inverse of `members`).
    memberships: Vec<BTreeSet<EdgeId>>,
    vertex_attrs: Vec<AttrMap<T>>,
    edge_attrs: Vec<AttrMap<T>>,
    /// Defined only on pairs `(v, e)` with `v ∈ e`.
    incidence_attrs: BTreeMap<(VertexId, EdgeId), AttrMap<T>>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl<T: TimeScalar> AttributedHypergraph<T> {
    pub fn builder() -> HypergraphBuilder<T> {
        HypergraphBuilder::new()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    /// Number of pairs `(v, e)` with `v ∈ e`.
    pub fn incidence_count(&self) -> usize {
        self.members.iter().map(BTreeSet::len).sum()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_names.len()).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn members(&self, e: EdgeId) -> &BTreeSet<VertexId> {
        &self.members[e.0]
    }

    /// Edges incident to `v` (the dual member-set `v* = {e : v ∈ e}`).
    pub fn memberships(&self, v: VertexId) -> &BTreeSet<EdgeId> {
        &self.memberships[v.0]
    }

    pub fn is_incident(&self, v: VertexId, e: EdgeId) -> bool {
        self.members[e.0].contains(&v)
    }

    pub fn vertex_attrs(&self, v: VertexId) -> &AttrMap<T> {
        &self.vertex_attrs[v.0]
    }

    pub fn edge_attrs(&self, e: EdgeId) -> &AttrMap<T> {
        &self.edge_attrs[e.0]
    }

    /// Attributes of the incidence `(v, e)`, or `None` when the pair carries
    /// no attributes (including when it is not an incidence at all).
    pub fn incidence_attrs(&self, v: VertexId, e: EdgeId) -> Option<&AttrMap<T>> {
        self.incidence_attrs.get(&(v, e))
    }

    /// All incidences `(v, e)` in edge-major order.
    pub fn incidences(&self) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.members
            .iter()
            .enumerate()
            .flat_map(|(j, set)| set.iter().map(move |v| (*v, EdgeId(j))))
    }

    /// Copy of `self` with one named attribute set on each edge in `values`.
    /// Used to attach marginalized attributes without a mutation API.
    pub fn with_edge_attrs(
        &self,
        attr: &str,
        values: &BTreeMap<EdgeId, AttributeValue<T>>,
    ) -> Self {
        let mut out = self.clone();
        for (e, value) in values {
            out.edge_attrs[e.0].insert(attr.to_string(), value.clone());
        }
        out
    }

    /// Keeps only edges with at least `min_size` members. Vertices are
    /// retained even if they lose all incident edges; edge ids are
    /// renumbered densely in the surviving order.
    pub fn filter_edges_by_size(&self, min_size: usize) -> Result<Self> {
        let keep: Vec<EdgeId> = self
            .edge_ids()
            .filter(|e| self.members[e.0].len() >= min_size)
            .collect();
        if keep.is_empty() {
            return Err(Error::EmptyEdgeSet);
        }

        let mut builder = HypergraphBuilder::new().vertices(self.vertex_names.clone());
        for (v, attrs) in self.vertex_attrs.iter().enumerate() {
            for (name, value) in attrs {
                builder = builder.vertex_attr(&self.vertex_names[v], name, value.clone());
            }
        }
        for e in &keep {
            let member_names: Vec<&str> = self.members[e.0]
                .iter()
                .map(|v| self.vertex_name(*v))
                .collect();
            builder = builder.edge(self.edge_name(*e), member_names);
            for (name, value) in &self.edge_attrs[e.0] {
                builder = builder.edge_attr(self.edge_name(*e), name, value.clone());
            }
        }
        for ((v, e), attrs) in &self.incidence_attrs {
            if keep.contains(e) {
                for (name, value) in attrs {
                    builder = builder.incidence_attr(
                        self.vertex_name(*v),
                        self.edge_name(*e),
                        name,
                        value.clone(),
                    );
                }
            }
        }
        builder.build()
    }

    /// Boolean incidence matrix with rows = vertices, columns = edges.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let rows = self.vertex_count();
        let cols = self.edge_count();
        let mut data = vec![false; rows * cols];
        for (j, set) in self.members.iter().enumerate() {
            for v in set {
                data[v.0 * cols + j] = true;
            }
        }
        IncidenceMatrix { rows, cols, data }
    }

    /// The dual hypergraph: vertices become edges and vice versa, attribute
    /// maps swap, and incidence attributes transpose (`γ*(e,v) = γ(v,e)`).
    ///
    /// Ids and names are carried over positionally, so `dual` is an exact
    /// involution: `h.dual().dual() == h`.
    pub fn dual(&self) -> Self {
        let members: Vec<BTreeSet<VertexId>> = self
            .memberships
            .iter()
            .map(|edges| edges.iter().map(|e| VertexId(e.0)).collect())
            .collect();
        let memberships: Vec<BTreeSet<EdgeId>> = self
            .members
            .iter()
            .map(|verts| verts.iter().map(|v| EdgeId(v.0)).collect())
            .collect();
        let incidence_attrs = self
            .incidence_attrs
            .iter()
            .map(|((v, e), attrs)| ((VertexId(e.0), EdgeId(v.0)), attrs.clone()))
            .collect();
        AttributedHypergraph {
            vertex_names: self.edge_names.clone(),
            edge_names: self.vertex_names.clone(),
            members,
            memberships,
            vertex_attrs: self.edge_attrs.clone(),
            edge_attrs: self.vertex_attrs.clone(),
            incidence_attrs,
            vertex_index: self
                .edge_index
                .iter()
                .map(|(name, e)| (name.clone(), VertexId(e.0)))
                .collect(),
            edge_index: self
                .vertex_index
                .iter()
                .map(|(name, v)| (name.clone(), EdgeId(v.0)))
                .collect(),
        }
    }
}

/// Dense boolean incidence matrix; entry `(v, e)` is set iff `v ∈ e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl IncidenceMatrix {
    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, v: VertexId, e: EdgeId) -> bool {
        self.data[v.0 * self.cols + e.0]
    }

    /// Number of set entries in column `e`, i.e. `|e|`.
    pub fn column_popcount(&self, e: EdgeId) -> usize {
        (0..self.rows)
            .filter(|i| self.data[i * self.cols + e.0])
            .count()
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut data = vec![false; self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        IncidenceMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }
}
