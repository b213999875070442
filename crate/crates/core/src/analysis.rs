//! Analytics over permissible walk graphs: class interaction matrices,
//! weakly connected components, downstream reachability, and interval
//! traces.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::EdgeId;
use crate::linegraph::PermissibleWalkGraph;
use crate::scalar::TimeScalar;
use crate::value::Interval;

/// Class-by-class counts of the directed edges of a permissible walk graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteractionMatrix {
    /// Class labels in sorted order; row/column `i` is `classes[i]`.
    classes: Vec<String>,
    counts: Vec<Vec<u64>>,
}

impl InteractionMatrix {
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn count(&self, i: usize, j: usize) -> u64 {
        self.counts[i][j]
    }

    pub fn count_by_label(&self, from: &str, to: &str) -> Option<u64> {
        let i = self.classes.iter().position(|c| c == from)?;
        let j = self.classes.iter().position(|c| c == to)?;
        Some(self.counts[i][j])
    }

    /// Sum of all entries; equals the arc count when every node is labeled.
    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    /// CSV rendering: header row of class labels, then one count row per
    /// class.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.classes).expect("write to Vec");
        for row in &self.counts {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            w.write_record(&cells).expect("write to Vec");
        }
        String::from_utf8(w.into_inner().expect("no partial flush")).expect("csv is utf-8")
    }
}

/// Reads the class label of every node from a `Category`-kind attribute.
pub fn class_labels<T: TimeScalar>(
    p: &PermissibleWalkGraph<T>,
    attr: &str,
) -> Result<BTreeMap<EdgeId, String>> {
    let mut out = BTreeMap::new();
    for id in p.node_ids() {
        let node = p.node(id).expect("iterating own nodes");
        let value = node.attrs.get(attr).ok_or_else(|| Error::UnlabeledNode {
            node: node.name.clone(),
        })?;
        out.insert(id, value.as_category()?.to_string());
    }
    Ok(out)
}

/// Counts arcs per ordered class pair. `class_of` must label every node.
pub fn interaction_matrix<T: TimeScalar>(
    p: &PermissibleWalkGraph<T>,
    class_of: &BTreeMap<EdgeId, String>,
) -> Result<InteractionMatrix> {
    for id in p.node_ids() {
        if !class_of.contains_key(&id) {
            return Err(Error::UnlabeledNode {
                node: p.node(id).expect("iterating own nodes").name.clone(),
            });
        }
    }

    let classes: Vec<String> = class_of
        .values()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .cloned()
        .collect();
    let index: HashMap<&str, usize> = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_str(), i))
        .collect();

    let mut counts = vec![vec![0u64; classes.len()]; classes.len()];
    for (from, to) in p.arcs() {
        let i = index[class_of[from].as_str()];
        let j = index[class_of[to].as_str()];
        counts[i][j] += 1;
    }
    Ok(InteractionMatrix { classes, counts })
}

/// Weighted directed graph on class labels whose adjacency matrix is the
/// interaction matrix; diagonal entries become self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGraph {
    classes: Vec<String>,
    /// Non-zero weights only.
    arcs: BTreeMap<(usize, usize), u64>,
}

impl ClassGraph {
    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn weight(&self, from: &str, to: &str) -> u64 {
        let Some(i) = self.classes.iter().position(|c| c == from) else {
            return 0;
        };
        let Some(j) = self.classes.iter().position(|c| c == to) else {
            return 0;
        };
        self.arcs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&str, &str, u64)> + '_ {
        self.arcs
            .iter()
            .map(|((i, j), w)| (self.classes[*i].as_str(), self.classes[*j].as_str(), *w))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

pub fn class_graph(m: &InteractionMatrix) -> ClassGraph {
    let mut arcs = BTreeMap::new();
    for i in 0..m.classes.len() {
        for j in 0..m.classes.len() {
            if m.counts[i][j] > 0 {
                arcs.insert((i, j), m.counts[i][j]);
            }
        }
    }
    ClassGraph {
        classes: m.classes.clone(),
        arcs,
    }
}

/// One weakly connected component: its size and the sorted node names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub size: usize,
    pub members: Vec<String>,
}

/// Disjoint-set forest with union by size and path halving.
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }
}

/// Components of the graph with edge directions forgotten, sorted by
/// descending size (ties broken by smallest member name).
pub fn weakly_connected_components<T: TimeScalar>(p: &PermissibleWalkGraph<T>) -> Vec<Component> {
    let ids: Vec<EdgeId> = p.node_ids().collect();
    let index: HashMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, id)| (*id, i)).collect();

    let mut uf = UnionFind::new(ids.len());
    for (from, to) in p.arcs() {
        uf.union(index[from], index[to]);
    }

    let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (i, id) in ids.iter().enumerate() {
        let root = uf.find(i);
        groups
            .entry(root)
            .or_default()
            .push(p.node(*id).expect("iterating own nodes").name.clone());
    }

    let mut components: Vec<Component> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            Component {
                size: members.len(),
                members,
            }
        })
        .collect();
    components.sort_by(|a, b| b.size.cmp(&a.size).then_with(|| a.members.cmp(&b.members)));
    components
}

/// JSON rendering of a components report: `[{"size", "members"}, ...]`.
pub fn components_to_json(components: &[Component]) -> String {
    serde_json::to_string_pretty(components).expect("components serialize")
}

fn require_node<T: TimeScalar>(p: &PermissibleWalkGraph<T>, node: EdgeId) -> Result<()> {
    if p.contains_node(node) {
        Ok(())
    } else {
        Err(Error::UnknownNode(format!("#{}", node.index())))
    }
}

/// Out-neighborhood of `node`.
pub fn downstream_neighbors<T: TimeScalar>(
    p: &PermissibleWalkGraph<T>,
    node: EdgeId,
) -> Result<BTreeSet<EdgeId>> {
    require_node(p, node)?;
    Ok(p.out_neighbors(node).collect())
}

/// Nodes reachable from `node` by directed paths of length at least one.
/// The start node appears only if a cycle returns to it.
pub fn downstream_reachable<T: TimeScalar>(
    p: &PermissibleWalkGraph<T>,
    node: EdgeId,
) -> Result<BTreeSet<EdgeId>> {
    require_node(p, node)?;
    let mut reached = BTreeSet::new();
    let mut queue: VecDeque<EdgeId> = p.out_neighbors(node).collect();
    for n in &queue {
        reached.insert(*n);
    }
    while let Some(n) = queue.pop_front() {
        for next in p.out_neighbors(n) {
            if reached.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(reached)
}

/// Drops nodes with no incident arcs in either direction. Returns the
/// reduced graph and the number of nodes removed; the arc set is unchanged.
pub fn remove_isolated<T: TimeScalar>(
    p: &PermissibleWalkGraph<T>,
) -> (PermissibleWalkGraph<T>, usize) {
    let mut touched: BTreeSet<EdgeId> = BTreeSet::new();
    for (from, to) in p.arcs() {
        touched.insert(*from);
        touched.insert(*to);
    }
    let mut out = p.clone();
    let before = out.node_count();
    out.nodes.retain(|id, _| touched.contains(id));
    (out, before - touched.len())
}

/// Convex hull of a non-empty interval collection.
pub fn support_hull<T: TimeScalar>(intervals: &[Interval<T>]) -> Result<Interval<T>> {
    let mut iter = intervals.iter();
    let first = iter.next().ok_or(Error::EmptyCollection)?;
    Ok(iter.fold(*first, |hull, iv| hull.hull(iv)))
}

/// `k` evenly spaced sample points across `hull`, endpoints included.
/// Interior points are clamped into the hull to absorb rounding.
pub fn evenly_spaced_samples<T: TimeScalar>(hull: Interval<T>, k: usize) -> Vec<T> {
    match k {
        0 => Vec::new(),
        1 => vec![hull.lo()],
        _ => {
            let steps = T::from_usize(k - 1).expect("sample count fits in scalar");
            let width = hull.hi() - hull.lo();
            (0..k)
                .map(|i| {
                    if i == 0 {
                        hull.lo()
                    } else if i == k - 1 {
                        hull.hi()
                    } else {
                        let x = hull.lo() + width * T::from_usize(i).expect("index fits") / steps;
                        x.min(hull.hi()).max(hull.lo())
                    }
                })
                .collect()
        }
    }
}

/// Evaluates the trace `T(t) = |{I : min(I) <= t <= max(I)}|` at each
/// sample point. Samples must lie inside the support hull.
pub fn trace<T: TimeScalar>(intervals: &[Interval<T>], samples: &[T]) -> Result<Vec<(T, usize)>> {
    let hull = support_hull(intervals)?;

    // Counting with two sorted endpoint lists: the number of intervals
    // containing t is #{lo <= t} - #{hi < t}.
    let mut los: Vec<T> = intervals.iter().map(Interval::lo).collect();
    let mut his: Vec<T> = intervals.iter().map(Interval::hi).collect();
    los.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));
    his.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));

    let mut out = Vec::with_capacity(samples.len());
    for &t in samples {
        if !hull.contains(t) {
            return Err(Error::SampleOutsideSupport {
                t: t.to_string(),
                lo: hull.lo().to_string(),
                hi: hull.hi().to_string(),
            });
        }
        let started = los.partition_point(|lo| *lo <= t);
        let ended = his.partition_point(|hi| *hi < t);
        out.push((t, started - ended));
    }
    Ok(out)
}

/// Trace at `k` evenly spaced samples over the support hull.
pub fn trace_evenly<T: TimeScalar>(intervals: &[Interval<T>], k: usize) -> Result<Vec<(T, usize)>> {
    let hull = support_hull(intervals)?;
    trace(intervals, &evenly_spaced_samples(hull, k))
}

/// CSV rendering of a trace: `t,T` header then one row per sample.
pub fn trace_to_csv<T: TimeScalar>(rows: &[(T, usize)]) -> String {
    let mut out = String::from("t,T\n");
    for (t, count) in rows {
        out.push_str(&format!("{t},{count}\n"));
    }
    out
}
