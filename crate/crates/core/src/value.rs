//! Attribute values: the tagged union carried by vertices, edges, and incidences.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::TimeScalar;

/// Named attributes of a single object (vertex, edge, or incidence).
pub type AttrMap<T> = BTreeMap<String, AttributeValue<T>>;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: TimeScalar> Interval<T> {
    /// Builds `[lo, hi]`, rejecting `lo > hi` and non-finite endpoints.
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            })
        }
    }

    /// The degenerate interval `[t, t]`.
    pub fn point(t: T) -> Result<Self> {
        Self::new(t, t)
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    /// Convex hull of the two intervals: `[min lo, max hi]`.
    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Closed-endpoint membership: `lo <= t <= hi`.
    pub fn contains(&self, t: T) -> bool {
        self.lo <= t && t <= self.hi
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl<T: Serialize> Serialize for Interval<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(serializer)
    }
}

impl<'de, T: TimeScalar + Deserialize<'de>> Deserialize<'de> for Interval<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = <(T, T)>::deserialize(deserializer)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Source and target symbols of a directed arc, stored as an edge attribute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionPair {
    pub source: String,
    pub target: String,
}

impl DirectionPair {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Self {
        Self {
            source: source.into(),
            target: target.into(),
        }
    }
}

impl fmt::Display for DirectionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source, self.target)
    }
}

impl Serialize for DirectionPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.source, &self.target).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DirectionPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (source, target) = <(String, String)>::deserialize(deserializer)?;
        Ok(Self { source, target })
    }
}

/// The value kinds an attribute can take.
///
/// Predicates and marginalizers are total on the kinds they declare and
/// reject everything else with [`Error::KindMismatch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttributeKind {
    Interval,
    Set,
    Bool,
    Scalar,
    Category,
    Timestamp,
    Direction,
}

impl fmt::Display for AttributeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            AttributeKind::Interval => "interval",
            AttributeKind::Set => "set",
            AttributeKind::Bool => "bool",
            AttributeKind::Scalar => "scalar",
            AttributeKind::Category => "category",
            AttributeKind::Timestamp => "timestamp",
            AttributeKind::Direction => "direction",
        };
        f.write_str(name)
    }
}

/// Tagged union of attribute values.
///
/// Set elements are kept in a `BTreeSet`, so equality is structural
/// regardless of insertion order.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
#[serde(bound(
    serialize = "T: Serialize",
    deserialize = "T: TimeScalar + Deserialize<'de>"
))]
pub enum AttributeValue<T> {
    Interval(Interval<T>),
    Set(BTreeSet<String>),
    Bool(bool),
    Scalar(T),
    Category(String),
    Timestamp(T),
    Direction(DirectionPair),
}

impl<T: TimeScalar> AttributeValue<T> {
    /// Interval value `[lo, hi]`.
    pub fn interval(lo: T, hi: T) -> Result<Self> {
        Ok(AttributeValue::Interval(Interval::new(lo, hi)?))
    }

    /// Finite-set value from any collection of symbols.
    pub fn set<I, S>(elements: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        AttributeValue::Set(elements.into_iter().map(Into::into).collect())
    }

    pub fn category(label: impl Into<String>) -> Self {
        AttributeValue::Category(label.into())
    }

    pub fn direction(source: impl Into<String>, target: impl Into<String>) -> Self {
        AttributeValue::Direction(DirectionPair::new(source, target))
    }

    pub fn kind(&self) -> AttributeKind {
        match self {
            AttributeValue::Interval(_) => AttributeKind::Interval,
            AttributeValue::Set(_) => AttributeKind::Set,
            AttributeValue::Bool(_) => AttributeKind::Bool,
            AttributeValue::Scalar(_) => AttributeKind::Scalar,
            AttributeValue::Category(_) => AttributeKind::Category,
            AttributeValue::Timestamp(_) => AttributeKind::Timestamp,
            AttributeValue::Direction(_) => AttributeKind::Direction,
        }
    }

    pub fn as_interval(&self) -> Result<&Interval<T>> {
        match self {
            AttributeValue::Interval(iv) => Ok(iv),
            other => Err(mismatch(AttributeKind::Interval, other)),
        }
    }

    pub fn as_set(&self) -> Result<&BTreeSet<String>> {
        match self {
            AttributeValue::Set(s) => Ok(s),
            other => Err(mismatch(AttributeKind::Set, other)),
        }
    }

    pub fn as_bool(&self) -> Result<bool> {
        match self {
            AttributeValue::Bool(b) => Ok(*b),
            other => Err(mismatch(AttributeKind::Bool, other)),
        }
    }

    pub fn as_category(&self) -> Result<&str> {
        match self {
            AttributeValue::Category(c) => Ok(c),
            other => Err(mismatch(AttributeKind::Category, other)),
        }
    }

    pub fn as_timestamp(&self) -> Result<T> {
        match self {
            AttributeValue::Timestamp(t) => Ok(*t),
            other => Err(mismatch(AttributeKind::Timestamp, other)),
        }
    }

    pub fn as_direction(&self) -> Result<&DirectionPair> {
        match self {
            AttributeValue::Direction(d) => Ok(d),
            other => Err(mismatch(AttributeKind::Direction, other)),
        }
    }
}

fn mismatch<T: TimeScalar>(expected: AttributeKind, found: &AttributeValue<T>) -> Error {
    Error::KindMismatch {
        expected,
        found: found.kind(),
    }
}

impl<T: TimeScalar> fmt::Display for AttributeValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttributeValue::Interval(iv) => write!(f, "{iv}"),
            AttributeValue::Set(s) => {
                write!(f, "{{")?;
                for (i, item) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    f.write_str(item)?;
                }
                write!(f, "}}")
            }
            AttributeValue::Bool(b) => write!(f, "{b}"),
            AttributeValue::Scalar(x) => write!(f, "{x}"),
            AttributeValue::Category(c) => f.write_str(c),
            AttributeValue::Timestamp(t) => write!(f, "{t}"),
            AttributeValue::Direction(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rejects_inverted_bounds() {
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(1.0, 1.0).is_ok());
    }

    #[test]
    fn set_values_are_canonical() {
        let a: AttributeValue<f64> = AttributeValue::set(["B", "A", "B"]);
        let b: AttributeValue<f64> = AttributeValue::set(["A", "B"]);
        assert_eq!(a, b);
    }

    #[test]
    fn json_encoding_matches_schema() {
        let iv: AttributeValue<f64> = AttributeValue::interval(0.0, 1.0).unwrap();
        assert_eq!(
            serde_json::to_string(&iv).unwrap(),
            r#"{"interval":[0.0,1.0]}"#
        );

        let set: AttributeValue<f64> = AttributeValue::set(["B", "A"]);
        assert_eq!(serde_json::to_string(&set).unwrap(), r#"{"set":["A","B"]}"#);

        let b: AttributeValue<f64> = AttributeValue::Bool(true);
        assert_eq!(serde_json::to_string(&b).unwrap(), r#"{"bool":true}"#);

        let c: AttributeValue<f64> = AttributeValue::category("meeting");
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"category":"meeting"}"#
        );

        let t: AttributeValue<f64> = AttributeValue::Timestamp(5.0);
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"timestamp":5.0}"#);

        let d: AttributeValue<f64> = AttributeValue::direction("a", "b");
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"direction":["a","b"]}"#
        );

        let x: AttributeValue<f64> = AttributeValue::Scalar(2.5);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"scalar":2.5}"#);
    }

    #[test]
    fn json_round_trip() {
        let values: Vec<AttributeValue<f64>> = vec![
            AttributeValue::interval(-1.5, 3.0).unwrap(),
            AttributeValue::set(["x"]),
            AttributeValue::Bool(false),
            AttributeValue::Scalar(0.25),
            AttributeValue::category("c"),
            AttributeValue::Timestamp(7.0),
            AttributeValue::direction("s", "t"),
        ];
        for v in values {
            let text = serde_json::to_string(&v).unwrap();
            let back: AttributeValue<f64> = serde_json::from_str(&text).unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn json_rejects_inverted_interval() {
        let res: std::result::Result<AttributeValue<f64>, _> =
            serde_json::from_str(r#"{"interval":[3.0,1.0]}"#);
        assert!(res.is_err());
    }
}
