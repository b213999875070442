//! Attribute algebra: binary predicates over attribute values,
//! marginalization of incidence attributes onto edges or vertices, and the
//! reverse extension of object attributes down onto incidences.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{AttributedHypergraph, EdgeId, VertexId};
use crate::scalar::TimeScalar;
use crate::value::{AttrMap, AttributeValue, Interval};

/// Binary boolean relation on a pair of attribute values.
///
/// Each predicate is total on one value kind and errors with
/// [`Error::KindMismatch`] on anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    /// Strong interval order: `a` ends no later than `b` begins
    /// (`a.hi <= b.lo`, boundary inclusive).
    StrongOrder,
    /// Sets share at least `t` elements (`t >= 1`).
    SetIntersectsAtLeast {
        t: usize,
    },
    BoolAnd,
    BoolOr,
    CategoryEqual,
    /// Non-strict timestamp order `a <= b`.
    TimestampLessEq,
    /// Target of the first arc equals source of the second.
    DirectionChains,
}

impl Predicate {
    pub fn eval<T: TimeScalar>(
        &self,
        a: &AttributeValue<T>,
        b: &AttributeValue<T>,
    ) -> Result<bool> {
        match self {
            Predicate::StrongOrder => {
                let (a, b) = (a.as_interval()?, b.as_interval()?);
                Ok(a.hi() <= b.lo())
            }
            Predicate::SetIntersectsAtLeast { t } => {
                let (a, b) = (a.as_set()?, b.as_set()?);
                Ok(a.iter().filter(|x| b.contains(*x)).count() >= *t)
            }
            Predicate::BoolAnd => Ok(a.as_bool()? && b.as_bool()?),
            Predicate::BoolOr => Ok(a.as_bool()? || b.as_bool()?),
            Predicate::CategoryEqual => Ok(a.as_category()? == b.as_category()?),
            Predicate::TimestampLessEq => Ok(a.as_timestamp()? <= b.as_timestamp()?),
            Predicate::DirectionChains => Ok(a.as_direction()?.target == b.as_direction()?.source),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::StrongOrder => f.write_str("strong-order"),
            Predicate::SetIntersectsAtLeast { t } => write!(f, "set-intersects:t={t}"),
            Predicate::BoolAnd => f.write_str("bool-and"),
            Predicate::BoolOr => f.write_str("bool-or"),
            Predicate::CategoryEqual => f.write_str("category-equal"),
            Predicate::TimestampLessEq => f.write_str("timestamp-leq"),
            Predicate::DirectionChains => f.write_str("direction-chains"),
        }
    }
}

/// Conjunction of named-attribute predicates evaluated on node attribute
/// maps: every `(attr, predicate)` pair must hold.
///
/// An empty conjunction is constantly true. A single pair is the plain
/// "predicate on one attribute" case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodePredicate {
    pairs: Vec<(String, Predicate)>,
}

impl NodePredicate {
    /// Predicate `pred` applied to the attribute `attr` of both endpoints.
    pub fn on(attr: impl Into<String>, pred: Predicate) -> Self {
        Self {
            pairs: vec![(attr.into(), pred)],
        }
    }

    /// Conjunction over several named attributes.
    pub fn all<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, Predicate)>,
        S: Into<String>,
    {
        Self {
            pairs: pairs.into_iter().map(|(a, p)| (a.into(), p)).collect(),
        }
    }

    /// The constantly-true predicate (empty conjunction).
    pub fn always() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(String, Predicate)] {
        &self.pairs
    }

    /// Attribute names this predicate reads.
    pub fn referenced_attrs(&self) -> impl Iterator<Item = &str> {
        self.pairs.iter().map(|(a, _)| a.as_str())
    }

    /// Evaluates the conjunction on two attribute maps. `a_name`/`b_name`
    /// only label error messages.
    pub fn eval<T: TimeScalar>(
        &self,
        a_name: &str,
        a: &AttrMap<T>,
        b_name: &str,
        b: &AttrMap<T>,
    ) -> Result<bool> {
        for (attr, pred) in &self.pairs {
            let va = lookup(a, attr, a_name)?;
            let vb = lookup(b, attr, b_name)?;
            if !pred.eval(va, vb)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn lookup<'m, T>(attrs: &'m AttrMap<T>, attr: &str, object: &str) -> Result<&'m AttributeValue<T>> {
    attrs.get(attr).ok_or_else(|| Error::MissingAttribute {
        object: object.to_string(),
        attr: attr.to_string(),
    })
}

impl fmt::Display for NodePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pairs.as_slice() {
            [] => f.write_str("true"),
            [(attr, pred)] => write!(f, "{attr}:{pred}"),
            pairs => {
                f.write_str("and(")?;
                for (i, (attr, pred)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{attr}:{pred}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Reduction of a non-empty multiset of incidence attribute values to one
/// value per object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marginalizer {
    /// Union of finite sets.
    SetUnion,
    /// Convex hull `[min lo, max hi]` of intervals; timestamps are treated
    /// as degenerate point intervals.
    IntervalHull,
}

impl Marginalizer {
    pub fn reduce<'a, T, I>(&self, values: I) -> Result<AttributeValue<T>>
    where
        T: TimeScalar + 'a,
        I: IntoIterator<Item = &'a AttributeValue<T>>,
    {
        let mut values = values.into_iter();
        match self {
            Marginalizer::SetUnion => {
                let first = values.next().ok_or(Error::EmptyCollection)?;
                let mut out = first.as_set()?.clone();
                for v in values {
                    out.extend(v.as_set()?.iter().cloned());
                }
                Ok(AttributeValue::Set(out))
            }
            Marginalizer::IntervalHull => {
                let first = values.next().ok_or(Error::EmptyCollection)?;
                let mut hull = as_hullable(first)?;
                for v in values {
                    hull = hull.hull(&as_hullable(v)?);
                }
                Ok(AttributeValue::Interval(hull))
            }
        }
    }
}

fn as_hullable<T: TimeScalar>(value: &AttributeValue<T>) -> Result<Interval<T>> {
    match value {
        AttributeValue::Interval(iv) => Ok(*iv),
        AttributeValue::Timestamp(t) => Interval::point(*t),
        other => Err(Error::KindMismatch {
            expected: crate::value::AttributeKind::Interval,
            found: other.kind(),
        }),
    }
}

/// Reduces the named incidence attribute onto each edge.
///
/// Every incidence of every edge must carry the attribute with the kind the
/// marginalizer expects.
pub fn marginalize_edges<T: TimeScalar>(
    h: &AttributedHypergraph<T>,
    attr: &str,
    m: Marginalizer,
) -> Result<BTreeMap<EdgeId, AttributeValue<T>>> {
    let mut out = BTreeMap::new();
    for e in h.edge_ids() {
        let mut values = Vec::with_capacity(h.members(e).len());
        for v in h.members(e) {
            values.push(incidence_value(h, *v, e, attr)?);
        }
        out.insert(e, m.reduce(values)?);
    }
    Ok(out)
}

/// Reduces the named incidence attribute onto each vertex (row form of
/// [`marginalize_edges`]).
pub fn marginalize_vertices<T: TimeScalar>(
    h: &AttributedHypergraph<T>,
    attr: &str,
    m: Marginalizer,
) -> Result<BTreeMap<VertexId, AttributeValue<T>>> {
    let mut out = BTreeMap::new();
    for v in h.vertex_ids() {
        let mut values = Vec::with_capacity(h.memberships(v).len());
        for e in h.memberships(v) {
            values.push(incidence_value(h, v, *e, attr)?);
        }
        if !h.memberships(v).is_empty() {
            out.insert(v, m.reduce(values)?);
        }
    }
    Ok(out)
}

fn incidence_value<'h, T: TimeScalar>(
    h: &'h AttributedHypergraph<T>,
    v: VertexId,
    e: EdgeId,
    attr: &str,
) -> Result<&'h AttributeValue<T>> {
    h.incidence_attrs(v, e)
        .and_then(|attrs| attrs.get(attr))
        .ok_or_else(|| Error::MissingIncidenceAttribute {
            vertex: h.vertex_name(v).to_string(),
            edge: h.edge_name(e).to_string(),
            attr: attr.to_string(),
        })
}

/// Which object family an extension copies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionSource {
    Vertex,
    Edge,
}

/// Copies the named vertex or edge attribute down onto every incidence of
/// the owning object.
pub fn extend_to_incidences<T: TimeScalar>(
    h: &AttributedHypergraph<T>,
    source: ExtensionSource,
    attr: &str,
) -> Result<BTreeMap<(VertexId, EdgeId), AttributeValue<T>>> {
    let mut out = BTreeMap::new();
    for (v, e) in h.incidences() {
        let value = match source {
            ExtensionSource::Edge => lookup(h.edge_attrs(e), attr, h.edge_name(e))?,
            ExtensionSource::Vertex => lookup(h.vertex_attrs(v), attr, h.vertex_name(v))?,
        };
        out.insert((v, e), value.clone());
    }
    Ok(out)
}

/// Parses a predicate spec string: `strong-order`, `set-intersects`,
/// `set-intersects:t=2`, `bool-and`, `bool-or`, `category-equal`,
/// `timestamp-leq`, `direction-chains`.
pub fn parse_predicate(spec: &str) -> Result<Predicate> {
    let bad = |reason: &str| Error::BadPredicateSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    match spec {
        "strong-order" => Ok(Predicate::StrongOrder),
        "set-intersects" => Ok(Predicate::SetIntersectsAtLeast { t: 1 }),
        "bool-and" => Ok(Predicate::BoolAnd),
        "bool-or" => Ok(Predicate::BoolOr),
        "category-equal" => Ok(Predicate::CategoryEqual),
        "timestamp-leq" => Ok(Predicate::TimestampLessEq),
        "direction-chains" => Ok(Predicate::DirectionChains),
        _ => {
            if let Some(arg) = spec.strip_prefix("set-intersects:") {
                let t: usize = arg
                    .strip_prefix("t=")
                    .ok_or_else(|| bad("expected t=<threshold>"))?
                    .parse()
                    .map_err(|_| bad("threshold is not an integer"))?;
                if t == 0 {
                    return Err(bad("threshold must be at least 1"));
                }
                Ok(Predicate::SetIntersectsAtLeast { t })
            } else {
                Err(bad("unknown predicate"))
            }
        }
    }
}

/// Parses a node-level predicate spec.
///
/// Accepted forms: a bare predicate (`strong-order`, applied to
/// `default_attr`), an attribute-qualified predicate (`time:strong-order`),
/// and a conjunction (`and(time:strong-order,topics:set-intersects:t=1)`).
pub fn parse_node_predicate(spec: &str, default_attr: Option<&str>) -> Result<NodePredicate> {
    let bad = |reason: &str| Error::BadPredicateSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };

    if let Some(inner) = spec.strip_prefix("and(") {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| bad("missing closing parenthesis"))?;
        if inner.trim().is_empty() {
            return Err(bad("empty conjunction"));
        }
        let mut pairs = Vec::new();
        for item in inner.split(',') {
            pairs.push(parse_qualified(item.trim(), spec)?);
        }
        return Ok(NodePredicate::all(pairs));
    }

    if let Ok(pred) = parse_predicate(spec) {
        let attr = default_attr.ok_or_else(|| bad("bare predicate needs an attribute name"))?;
        return Ok(NodePredicate::on(attr, pred));
    }

    let (attr, pred) = parse_qualified(spec, spec)?;
    Ok(NodePredicate::on(attr, pred))
}

fn parse_qualified(item: &str, whole: &str) -> Result<(String, Predicate)> {
    let bad = |reason: String| Error::BadPredicateSpec {
        spec: whole.to_string(),
        reason,
    };
    let (attr, pred_spec) = item
        .split_once(':')
        .ok_or_else(|| bad(format!("expected attr:predicate in {item:?}")))?;
    if attr.is_empty() {
        return Err(bad(format!("empty attribute name in {item:?}")));
    }
    Ok((attr.to_string(), parse_predicate(pred_spec)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::meetings;
    use crate::hypergraph::HypergraphBuilder;
    use proptest::prelude::*;

    fn iv(lo: f64, hi: f64) -> AttributeValue<f64> {
        AttributeValue::interval(lo, hi).unwrap()
    }

    fn set(elems: &[&str]) -> AttributeValue<f64> {
        AttributeValue::set(elems.iter().copied())
    }

    #[test]
    fn strong_order_examples() {
        let q = Predicate::StrongOrder;
        assert!(q.eval(&iv(0.0, 1.0), &iv(2.0, 3.0)).unwrap());
        assert!(!q.eval(&iv(0.0, 2.0), &iv(1.0, 3.0)).unwrap());
        // Touching endpoints satisfy the order: the bound is inclusive.
        assert!(q.eval(&iv(0.0, 1.0), &iv(1.0, 2.0)).unwrap());
    }

    #[test]
    fn strong_order_rejects_wrong_kind() {
        let res = Predicate::StrongOrder.eval(&set(&["A"]), &set(&["A"]));
        assert!(matches!(res, Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn set_intersects_examples() {
        let q1 = Predicate::SetIntersectsAtLeast { t: 1 };
        assert!(!q1.eval(&set(&["A", "B", "C"]), &set(&["E", "F"])).unwrap());
        assert!(q1.eval(&set(&["C"]), &set(&["C"])).unwrap());
        assert!(!q1.eval(&set(&[]), &set(&["A"])).unwrap());

        let q2 = Predicate::SetIntersectsAtLeast { t: 2 };
        assert!(!q2.eval(&set(&["A", "B"]), &set(&["B", "C"])).unwrap());
        assert!(q2.eval(&set(&["A", "B"]), &set(&["B", "A", "Z"])).unwrap());
    }

    #[test]
    fn remaining_predicate_kinds() {
        let t: AttributeValue<f64> = AttributeValue::Bool(true);
        let f: AttributeValue<f64> = AttributeValue::Bool(false);
        assert!(!Predicate::BoolAnd.eval(&t, &f).unwrap());
        assert!(Predicate::BoolOr.eval(&t, &f).unwrap());

        let a: AttributeValue<f64> = AttributeValue::category("x");
        let b: AttributeValue<f64> = AttributeValue::category("y");
        assert!(Predicate::CategoryEqual.eval(&a, &a.clone()).unwrap());
        assert!(!Predicate::CategoryEqual.eval(&a, &b).unwrap());

        let t1: AttributeValue<f64> = AttributeValue::Timestamp(1.0);
        let t2: AttributeValue<f64> = AttributeValue::Timestamp(2.0);
        assert!(Predicate::TimestampLessEq.eval(&t1, &t2).unwrap());
        assert!(Predicate::TimestampLessEq.eval(&t1, &t1.clone()).unwrap());
        assert!(!Predicate::TimestampLessEq.eval(&t2, &t1).unwrap());

        let ab: AttributeValue<f64> = AttributeValue::direction("a", "b");
        let bc: AttributeValue<f64> = AttributeValue::direction("b", "c");
        assert!(Predicate::DirectionChains.eval(&ab, &bc).unwrap());
        assert!(!Predicate::DirectionChains.eval(&bc, &ab).unwrap());
    }

    #[test]
    fn toy_topic_marginalization() {
        let h = meetings();
        let topics = marginalize_edges(&h, "topics", Marginalizer::SetUnion).unwrap();
        let expect = [
            ("M1", vec!["A", "B", "C"]),
            ("M2", vec!["E", "F"]),
            ("M3", vec!["B", "C", "D"]),
            ("M4", vec!["C"]),
        ];
        for (edge, elems) in expect {
            let e = h.edge_id(edge).unwrap();
            assert_eq!(topics[&e], set(&elems), "edge {edge}");
        }
    }

    #[test]
    fn toy_vertex_marginalization() {
        let h = meetings();
        let by_vertex = marginalize_vertices(&h, "topics", Marginalizer::SetUnion).unwrap();
        let p5 = h.vertex_id("P5").unwrap();
        assert_eq!(by_vertex[&p5], set(&["A", "C", "E", "F"]));
        let p4 = h.vertex_id("P4").unwrap();
        assert_eq!(by_vertex[&p4], set(&["A", "B", "D"]));
    }

    #[test]
    fn single_incidence_reduction_is_identity() {
        let h: AttributedHypergraph<f64> = HypergraphBuilder::new()
            .vertex("v")
            .edge("e", ["v"])
            .incidence_attr("v", "e", "topics", set(&["A", "B"]))
            .build()
            .unwrap();
        let m = marginalize_edges(&h, "topics", Marginalizer::SetUnion).unwrap();
        assert_eq!(m[&h.edge_id("e").unwrap()], set(&["A", "B"]));
    }

    #[test]
    fn interval_hull_marginalization() {
        let h: AttributedHypergraph<f64> = HypergraphBuilder::new()
            .vertices(["u1", "u2"])
            .edge("thread", ["u1", "u2"])
            .incidence_attr("u1", "thread", "time", iv(1.0, 10.0))
            .incidence_attr("u2", "thread", "time", iv(4.0, 7.0))
            .build()
            .unwrap();
        let m = marginalize_edges(&h, "time", Marginalizer::IntervalHull).unwrap();
        assert_eq!(m[&h.edge_id("thread").unwrap()], iv(1.0, 10.0));
    }

    #[test]
    fn row_hull_marginalization() {
        // User active in two threads with cell intervals [1,3] and [4,7].
        let h: AttributedHypergraph<f64> = HypergraphBuilder::new()
            .vertices(["user1", "user2"])
            .edge("t1", ["user1", "user2"])
            .edge("t2", ["user1"])
            .incidence_attr("user1", "t1", "time", iv(1.0, 3.0))
            .incidence_attr("user1", "t2", "time", iv(4.0, 7.0))
            .incidence_attr("user2", "t1", "time", iv(2.0, 2.0))
            .build()
            .unwrap();
        let m = marginalize_vertices(&h, "time", Marginalizer::IntervalHull).unwrap();
        assert_eq!(m[&h.vertex_id("user1").unwrap()], iv(1.0, 7.0));
        // A vertex in exactly one edge keeps its cell interval.
        assert_eq!(m[&h.vertex_id("user2").unwrap()], iv(2.0, 2.0));
    }

    #[test]
    fn missing_incidence_attribute_is_an_error() {
        let h = meetings();
        let res = marginalize_edges(&h, "nope", Marginalizer::SetUnion);
        assert!(matches!(res, Err(Error::MissingIncidenceAttribute { .. })));
    }

    #[test]
    fn extension_copies_edge_values() {
        let h = meetings();
        let ext = extend_to_incidences(&h, ExtensionSource::Edge, "time").unwrap();
        let p4 = h.vertex_id("P4").unwrap();
        let m1 = h.edge_id("M1").unwrap();
        assert_eq!(ext[&(p4, m1)], iv(0.0, 1.0));
        assert_eq!(ext.len(), h.incidence_count());
    }

    #[test]
    fn extension_missing_attribute() {
        let h = meetings();
        let res = extend_to_incidences(&h, ExtensionSource::Vertex, "time");
        assert!(matches!(res, Err(Error::MissingAttribute { .. })));
    }

    #[test]
    fn extend_then_hull_is_identity() {
        let h = meetings();
        let ext = extend_to_incidences(&h, ExtensionSource::Edge, "time").unwrap();
        // Rebuild with the extended values as incidence attrs, then
        // marginalize back: hull of identical copies is the copy.
        let mut b = HypergraphBuilder::new();
        for v in h.vertex_ids() {
            b = b.vertex(h.vertex_name(v));
        }
        for e in h.edge_ids() {
            let members: Vec<&str> = h.members(e).iter().map(|v| h.vertex_name(*v)).collect();
            b = b.edge(h.edge_name(e), members);
        }
        for ((v, e), value) in &ext {
            b = b.incidence_attr(h.vertex_name(*v), h.edge_name(*e), "time", value.clone());
        }
        let h2 = b.build().unwrap();
        let back = marginalize_edges(&h2, "time", Marginalizer::IntervalHull).unwrap();
        for e in h.edge_ids() {
            assert_eq!(back[&e], h.edge_attrs(e)["time"]);
        }
    }

    #[test]
    fn node_predicate_conjunction() {
        let mut a = AttrMap::new();
        a.insert("time".into(), iv(0.0, 1.0));
        a.insert("topics".into(), set(&["A"]));
        let mut b = AttrMap::new();
        b.insert("time".into(), iv(2.0, 3.0));
        b.insert("topics".into(), set(&["A", "B"]));

        let both = NodePredicate::all([
            ("time", Predicate::StrongOrder),
            ("topics", Predicate::SetIntersectsAtLeast { t: 1 }),
        ]);
        assert!(both.eval("a", &a, "b", &b).unwrap());
        // Reversed order fails the interval half.
        assert!(!both.eval("b", &b, "a", &a).unwrap());

        assert!(NodePredicate::always().eval("a", &a, "b", &b).unwrap());

        let missing = NodePredicate::on("absent", Predicate::BoolAnd);
        assert!(matches!(
            missing.eval("a", &a, "b", &b),
            Err(Error::MissingAttribute { .. })
        ));
    }

    #[test]
    fn predicate_spec_parsing() {
        assert_eq!(
            parse_predicate("strong-order").unwrap(),
            Predicate::StrongOrder
        );
        assert_eq!(
            parse_predicate("set-intersects").unwrap(),
            Predicate::SetIntersectsAtLeast { t: 1 }
        );
        assert_eq!(
            parse_predicate("set-intersects:t=3").unwrap(),
            Predicate::SetIntersectsAtLeast { t: 3 }
        );
        assert!(parse_predicate("set-intersects:t=0").is_err());
        assert!(parse_predicate("set-intersects:k=1").is_err());
        assert!(parse_predicate("frobnicate").is_err());
    }

    #[test]
    fn node_predicate_spec_parsing() {
        let p = parse_node_predicate("strong-order", Some("time")).unwrap();
        assert_eq!(p, NodePredicate::on("time", Predicate::StrongOrder));

        let q = parse_node_predicate("topics:set-intersects:t=2", None).unwrap();
        assert_eq!(
            q,
            NodePredicate::on("topics", Predicate::SetIntersectsAtLeast { t: 2 })
        );

        let c =
            parse_node_predicate("and(time:strong-order,topics:set-intersects:t=1)", None).unwrap();
        assert_eq!(
            c,
            NodePredicate::all([
                ("time", Predicate::StrongOrder),
                ("topics", Predicate::SetIntersectsAtLeast { t: 1 }),
            ])
        );

        assert!(parse_node_predicate("strong-order", None).is_err());
        assert!(parse_node_predicate("and()", None).is_err());
        assert!(parse_node_predicate("and(time:strong-order", None).is_err());
    }

    #[test]
    fn node_predicate_display_round_trips() {
        for spec in [
            "time:strong-order",
            "topics:set-intersects:t=2",
            "and(time:strong-order,topics:set-intersects:t=1)",
        ] {
            let parsed = parse_node_predicate(spec, None).unwrap();
            assert_eq!(parsed.to_string(), spec);
            assert_eq!(
                parse_node_predicate(&parsed.to_string(), None).unwrap(),
                parsed
            );
        }
    }

    proptest! {
        #[test]
        fn strong_order_transitive(
            a in (0i32..50, 0i32..50),
            b in (0i32..50, 0i32..50),
            c in (0i32..50, 0i32..50),
        ) {
            let mk = |(lo, len): (i32, i32)| iv(lo as f64, (lo + len) as f64);
            let (a, b, c) = (mk(a), mk(b), mk(c));
            let q = Predicate::StrongOrder;
            if q.eval(&a, &b).unwrap() && q.eval(&b, &c).unwrap() {
                prop_assert!(q.eval(&a, &c).unwrap());
            }
        }

        #[test]
        fn strong_order_two_cycles_are_degenerate(
            a in (0i32..20, 0i32..20),
            b in (0i32..20, 0i32..20),
        ) {
            let mk = |(lo, len): (i32, i32)| iv(lo as f64, (lo + len) as f64);
            let (a, b) = (mk(a), mk(b));
            let q = Predicate::StrongOrder;
            if q.eval(&a, &b).unwrap() && q.eval(&b, &a).unwrap() {
                prop_assert_eq!(&a, &b);
                let iv = a.as_interval().unwrap();
                prop_assert_eq!(iv.lo(), iv.hi());
            }
        }

        #[test]
        fn set_intersects_symmetric(
            a in proptest::collection::btree_set("[a-e]", 0..6),
            b in proptest::collection::btree_set("[a-e]", 0..6),
            t in 1usize..4,
        ) {
            let (a, b): (AttributeValue<f64>, AttributeValue<f64>) =
                (AttributeValue::Set(a), AttributeValue::Set(b));
            let q = Predicate::SetIntersectsAtLeast { t };
            prop_assert_eq!(q.eval(&a, &b).unwrap(), q.eval(&b, &a).unwrap());
        }

        #[test]
        fn hull_contains_every_cell(cells in proptest::collection::vec((0i32..100, 0i32..20), 1..10)) {
            let values: Vec<AttributeValue<f64>> = cells
                .iter()
                .map(|(lo, len)| iv(*lo as f64, (*lo + *len) as f64))
                .collect();
            let hull = Marginalizer::IntervalHull.reduce(values.iter()).unwrap();
            let hull = hull.as_interval().unwrap();
            for v in &values {
                let cell = v.as_interval().unwrap();
                prop_assert!(hull.lo() <= cell.lo() && cell.hi() <= hull.hi());
            }
        }
    }
}
