//! Line-graph constructions on hyperedges: the s-line graph, its attributed
//! bidirected form, predicate attribution graphs, and permissible walk
//! graphs.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::attributes::NodePredicate;
use crate::error::{Error, Result};
use crate::hypergraph::{AttributedHypergraph, EdgeId};
use crate::scalar::TimeScalar;
use crate::value::AttrMap;

/// Undirected graph on hyperedges with an edge between `e_i` and `e_j`
/// whenever `|e_i ∩ e_j| >= s` (and `e_i != e_j`). Each pair stores its
/// intersection size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SLineGraph {
    s: usize,
    node_count: usize,
    /// Keys are ordered pairs `(a, b)` with `a < b`.
    pairs: BTreeMap<(EdgeId, EdgeId), usize>,
}

impl SLineGraph {
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn nodes(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.node_count).map(EdgeId)
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((EdgeId, EdgeId), usize)> + '_ {
        self.pairs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn contains(&self, a: EdgeId, b: EdgeId) -> bool {
        self.pairs.contains_key(&ordered(a, b))
    }

    pub fn intersection_size(&self, a: EdgeId, b: EdgeId) -> Option<usize> {
        self.pairs.get(&ordered(a, b)).copied()
    }

    /// Both orientations of every undirected pair, for comparison against
    /// directed graphs.
    pub fn bidirected_arcs(&self) -> BTreeSet<(EdgeId, EdgeId)> {
        self.pairs
            .keys()
            .flat_map(|(a, b)| [(*a, *b), (*b, *a)])
            .collect()
    }
}

/// A node of a graph on hyperedges: the hyperedge's name plus its attribute
/// map τ.
#[derive(Debug, Clone, PartialEq)]
pub struct LineGraphNode<T> {
    pub name: String,
    pub attrs: AttrMap<T>,
}

/// Bidirected s-line graph carrying hyperedge attributes on nodes (τ) and
/// intersection sizes on pairs (ζ).
#[derive(Debug, Clone, PartialEq)]
pub struct AttributedLineGraph<T> {
    pub(crate) s: usize,
    pub(crate) nodes: BTreeMap<EdgeId, LineGraphNode<T>>,
    /// Directed edge set K; symmetric by construction.
    pub(crate) arcs: BTreeSet<(EdgeId, EdgeId)>,
    /// ζ per unordered pair, keyed `(a, b)` with `a < b`.
    pub(crate) overlaps: BTreeMap<(EdgeId, EdgeId), usize>,
}

/// Directed graph on hyperedges whose arcs are exactly the predicate-
/// satisfying ordered pairs — no line-graph structure involved.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributionGraph<T> {
    pub(crate) nodes: BTreeMap<EdgeId, LineGraphNode<T>>,
    pub(crate) arcs: BTreeSet<(EdgeId, EdgeId)>,
}

/// Spanning subgraph of an attributed line graph keeping only the
/// predicate-satisfying arcs `Q ⊆ K`.
#[derive(Debug, Clone, PartialEq)]
pub struct PermissibleWalkGraph<T> {
    pub(crate) s: usize,
    pub(crate) nodes: BTreeMap<EdgeId, LineGraphNode<T>>,
    pub(crate) arcs: BTreeSet<(EdgeId, EdgeId)>,
    pub(crate) overlaps: BTreeMap<(EdgeId, EdgeId), usize>,
}

macro_rules! digraph_accessors {
    () => {
        pub fn node_count(&self) -> usize {
            self.nodes.len()
        }

        pub fn node_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
            self.nodes.keys().copied()
        }

        pub fn node(&self, id: EdgeId) -> Option<&LineGraphNode<T>> {
            self.nodes.get(&id)
        }

        pub fn node_by_name(&self, name: &str) -> Option<EdgeId> {
            self.nodes
                .iter()
                .find(|(_, n)| n.name == name)
                .map(|(id, _)| *id)
        }

        pub fn contains_node(&self, id: EdgeId) -> bool {
            self.nodes.contains_key(&id)
        }

        pub fn arcs(&self) -> &BTreeSet<(EdgeId, EdgeId)> {
            &self.arcs
        }

        pub fn arc_count(&self) -> usize {
            self.arcs.len()
        }

        pub fn contains_arc(&self, from: EdgeId, to: EdgeId) -> bool {
            self.arcs.contains(&(from, to))
        }

        pub fn out_neighbors(&self, from: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
            self.arcs
                .range((from, EdgeId(0))..=(from, EdgeId(usize::MAX)))
                .map(|(_, to)| *to)
        }
    };
}

impl<T: TimeScalar> AttributedLineGraph<T> {
    digraph_accessors!();

    pub fn s(&self) -> usize {
        self.s
    }

    /// Intersection size of the underlying hyperedges, when recorded.
    pub fn zeta(&self, a: EdgeId, b: EdgeId) -> Option<usize> {
        self.overlaps.get(&ordered(a, b)).copied()
    }
}

impl<T: TimeScalar> AttributionGraph<T> {
    digraph_accessors!();
}

impl<T: TimeScalar> PermissibleWalkGraph<T> {
    digraph_accessors!();

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn zeta(&self, a: EdgeId, b: EdgeId) -> Option<usize> {
        self.overlaps.get(&ordered(a, b)).copied()
    }

    /// Spanning subgraph keeping only arcs whose recorded pair overlap is
    /// at least `s` — the walk graph that would have resulted from building
    /// on the s-line graph instead. Errors on an arc with no recorded
    /// overlap.
    pub fn with_min_overlap(&self, s: usize) -> Result<Self> {
        let mut arcs = BTreeSet::new();
        for (a, b) in &self.arcs {
            let zeta = self
                .zeta(*a, *b)
                .ok_or_else(|| Error::MissingEdgeAttribute {
                    from: self.nodes[a].name.clone(),
                    to: self.nodes[b].name.clone(),
                })?;
            if zeta >= s {
                arcs.insert((*a, *b));
            }
        }
        let overlaps = restrict_overlaps(&self.overlaps, &arcs);
        Ok(Self {
            s: self.s.max(s),
            nodes: self.nodes.clone(),
            arcs,
            overlaps,
        })
    }
}

fn ordered(a: EdgeId, b: EdgeId) -> (EdgeId, EdgeId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Builds the s-line graph of `h`.
///
/// Uses an inverted vertex→edges index and pair-count accumulation, so the
/// cost is proportional to the co-membership pairs actually present rather
/// than all `|E|²` edge pairs. `s = 0` yields the complete graph.
pub fn s_line_graph<T: TimeScalar>(h: &AttributedHypergraph<T>, s: usize) -> SLineGraph {
    let mut counts: HashMap<(EdgeId, EdgeId), usize> = HashMap::new();
    for v in h.vertex_ids() {
        let edges: Vec<EdgeId> = h.memberships(v).iter().copied().collect();
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                *counts.entry((*a, *b)).or_insert(0) += 1;
            }
        }
    }

    let mut pairs: BTreeMap<(EdgeId, EdgeId), usize> =
        counts.into_iter().filter(|(_, size)| *size >= s).collect();
    if s == 0 {
        // Every pair qualifies, including fully disjoint ones the index
        // never saw.
        for i in 0..h.edge_count() {
            for j in i + 1..h.edge_count() {
                pairs.entry((EdgeId(i), EdgeId(j))).or_insert(0);
            }
        }
    }

    SLineGraph {
        s,
        node_count: h.edge_count(),
        pairs,
    }
}

/// Builds the bidirected attributed s-line graph, copying the named edge
/// attributes of `h` onto nodes as τ and intersection sizes onto pairs
/// as ζ.
pub fn attributed_s_line_graph<T, I, S>(
    h: &AttributedHypergraph<T>,
    s: usize,
    attr_names: I,
) -> Result<AttributedLineGraph<T>>
where
    T: TimeScalar,
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let attr_names: Vec<String> = attr_names
        .into_iter()
        .map(|s| s.as_ref().to_string())
        .collect();

    let mut nodes = BTreeMap::new();
    for e in h.edge_ids() {
        let mut attrs = AttrMap::new();
        for name in &attr_names {
            let value = h
                .edge_attrs(e)
                .get(name)
                .ok_or_else(|| Error::MissingAttribute {
                    object: h.edge_name(e).to_string(),
                    attr: name.clone(),
                })?;
            attrs.insert(name.clone(), value.clone());
        }
        nodes.insert(
            e,
            LineGraphNode {
                name: h.edge_name(e).to_string(),
                attrs,
            },
        );
    }

    let base = s_line_graph(h, s);
    Ok(AttributedLineGraph {
        s,
        nodes,
        arcs: base.bidirected_arcs(),
        overlaps: base.pairs.clone(),
    })
}

/// Predicate filter over the complete digraph on the hyperedges of `h`:
/// arc `(a, b)` iff the predicate holds on `(ε(a), ε(b))` and `a != b`.
pub fn attribution_graph<T: TimeScalar>(
    h: &AttributedHypergraph<T>,
    pred: &NodePredicate,
) -> Result<AttributionGraph<T>> {
    let mut nodes = BTreeMap::new();
    for e in h.edge_ids() {
        for attr in pred.referenced_attrs() {
            if !h.edge_attrs(e).contains_key(attr) {
                return Err(Error::MissingAttribute {
                    object: h.edge_name(e).to_string(),
                    attr: attr.to_string(),
                });
            }
        }
        nodes.insert(
            e,
            LineGraphNode {
                name: h.edge_name(e).to_string(),
                attrs: h.edge_attrs(e).clone(),
            },
        );
    }

    let mut arcs = BTreeSet::new();
    for (a, na) in &nodes {
        for (b, nb) in &nodes {
            if a != b && pred.eval(&na.name, &na.attrs, &nb.name, &nb.attrs)? {
                arcs.insert((*a, *b));
            }
        }
    }
    Ok(AttributionGraph { nodes, arcs })
}

/// Filters the arcs of an attributed line graph by a predicate on the
/// ordered endpoint attributes. The node set is preserved (spanning).
pub fn permissible_walk_graph<T: TimeScalar>(
    lg: &AttributedLineGraph<T>,
    pred: &NodePredicate,
) -> Result<PermissibleWalkGraph<T>> {
    for node in lg.nodes.values() {
        for attr in pred.referenced_attrs() {
            if !node.attrs.contains_key(attr) {
                return Err(Error::MissingAttribute {
                    object: node.name.clone(),
                    attr: attr.to_string(),
                });
            }
        }
    }

    let mut arcs = BTreeSet::new();
    for (a, b) in &lg.arcs {
        let na = &lg.nodes[a];
        let nb = &lg.nodes[b];
        if pred.eval(&na.name, &na.attrs, &nb.name, &nb.attrs)? {
            arcs.insert((*a, *b));
        }
    }

    let overlaps = restrict_overlaps(&lg.overlaps, &arcs);
    Ok(PermissibleWalkGraph {
        s: lg.s,
        nodes: lg.nodes.clone(),
        arcs,
        overlaps,
    })
}

/// Intersection of two permissible walk graphs over the same node set.
///
/// Node attributes and overlaps are merged left-biased (`a` wins on
/// conflicting names), which is only observable when the operands were
/// built with different τ restrictions.
pub fn intersect<T: TimeScalar>(
    a: &PermissibleWalkGraph<T>,
    b: &PermissibleWalkGraph<T>,
) -> Result<PermissibleWalkGraph<T>> {
    if a.nodes.keys().ne(b.nodes.keys()) {
        return Err(Error::NodeSetMismatch);
    }

    let mut nodes = a.nodes.clone();
    for (id, node) in &b.nodes {
        let merged = nodes.get_mut(id).expect("node sets checked equal");
        for (name, value) in &node.attrs {
            merged
                .attrs
                .entry(name.clone())
                .or_insert_with(|| value.clone());
        }
    }

    let arcs: BTreeSet<(EdgeId, EdgeId)> = a.arcs.intersection(&b.arcs).copied().collect();
    let mut overlaps = a.overlaps.clone();
    for (pair, size) in &b.overlaps {
        overlaps.entry(*pair).or_insert(*size);
    }

    Ok(PermissibleWalkGraph {
        s: a.s,
        nodes,
        arcs: arcs.clone(),
        overlaps: restrict_overlaps(&overlaps, &arcs),
    })
}

/// Recovers the s-line graph from a 1-line graph by thresholding ζ at `s`:
/// keeps arcs whose pair intersection size is at least `s`.
pub fn s_line_as_permissible<T: TimeScalar>(
    lg: &AttributedLineGraph<T>,
    s: usize,
) -> Result<PermissibleWalkGraph<T>> {
    let mut arcs = BTreeSet::new();
    for (a, b) in &lg.arcs {
        let zeta = lg.zeta(*a, *b).ok_or_else(|| Error::MissingEdgeAttribute {
            from: lg.nodes[a].name.clone(),
            to: lg.nodes[b].name.clone(),
        })?;
        if zeta >= s {
            arcs.insert((*a, *b));
        }
    }
    let overlaps = restrict_overlaps(&lg.overlaps, &arcs);
    Ok(PermissibleWalkGraph {
        s: lg.s,
        nodes: lg.nodes.clone(),
        arcs,
        overlaps,
    })
}

fn restrict_overlaps(
    overlaps: &BTreeMap<(EdgeId, EdgeId), usize>,
    arcs: &BTreeSet<(EdgeId, EdgeId)>,
) -> BTreeMap<(EdgeId, EdgeId), usize> {
    overlaps
        .iter()
        .filter(|((a, b), _)| arcs.contains(&(*a, *b)) || arcs.contains(&(*b, *a)))
        .map(|(k, v)| (*k, *v))
        .collect()
}
